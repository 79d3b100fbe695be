#include "liedouble/tworep.hpp"

#include <functional>

namespace liedouble {

bool TwoRep::operator==(const TwoRep& o) const {
    return r0 == o.r0 && r1 == o.r1 && *alg == *o.alg && partial == o.partial &&
           conn0 == o.conn0 && conn1 == o.conn1 && R == o.R;
}

TwoRep make_tworep(std::shared_ptr<const Algebroid> alg, PolyMat partial, Conn conn0,
                   Conn conn1, HomTwoForm R) {
    TwoRep t{std::move(alg), conn0.bundle_rank(), conn1.bundle_rank(), std::move(partial),
             std::move(conn0), std::move(conn1), std::move(R)};
    if (!t.alg) throw std::invalid_argument("null algebroid");
    if (!(t.conn0.alg() == t.alg || *t.conn0.alg() == *t.alg) ||
        !(t.conn1.alg() == t.alg || *t.conn1.alg() == *t.alg))
        throw std::invalid_argument("connections act along a different algebroid");
    if (t.partial.size() != t.r1) throw std::invalid_argument("partial rows");
    for (const auto& row : t.partial) {
        if (row.size() != t.r0) throw std::invalid_argument("partial cols");
        for (const auto& p : row)
            if (!same_ring(p.ring(), t.alg->ring))
                throw std::invalid_argument("partial entry off-ring");
    }
    if (t.R.frame_rank != t.alg->rank || t.R.dst_rank != t.r0 || t.R.src_rank != t.r1)
        throw std::invalid_argument("curvature form shape");
    return t;
}

// ---------------------------------------------------------------------------
// Residual families

Report validate_tworep(const TwoRep& t) {
    const Algebroid& alg = *t.alg;
    const RingPtr& ring = alg.ring;
    ReportBuilder rb("check-tworep");
    rb.note_condition("chain-map");
    rb.note_condition("curvature-e0");
    rb.note_condition("curvature-e1");
    rb.note_condition("curvature-closed");

    for (std::size_t i = 0; i < alg.rank; ++i)
        for (std::size_t j = 0; j < t.r0; ++j) {
            SectionVec d0 = conn_apply(t.conn0, alg.unit(i), unit_section(ring, t.r0, j));
            SectionVec lhs = mat_apply(t.partial, d0, ring);
            SectionVec rhs = conn_apply(t.conn1, alg.unit(i),
                                        mat_apply(t.partial, unit_section(ring, t.r0, j), ring));
            for (std::size_t l = 0; l < t.r1; ++l)
                rb.add_residual("chain-map", {i + 1, j + 1, l + 1}, lhs[l] - rhs[l]);
        }

    HomTwoForm c0 = curvature(t.conn0), c1 = curvature(t.conn1);
    for (std::size_t i = 0; i < alg.rank; ++i)
        for (std::size_t j = i + 1; j < alg.rank; ++j) {
            PolyMat res0 =
                mat_sub(c0.value(i, j), mat_mul_shaped(t.R.value(i, j), t.partial, ring,
                                                       t.r0, t.r0));
            for (std::size_t u = 0; u < t.r0; ++u)
                for (std::size_t v = 0; v < t.r0; ++v)
                    rb.add_residual("curvature-e0", {i + 1, j + 1, u + 1, v + 1}, res0[u][v]);
            PolyMat res1 =
                mat_sub(c1.value(i, j), mat_mul_shaped(t.partial, t.R.value(i, j), ring,
                                                       t.r1, t.r1));
            for (std::size_t u = 0; u < t.r1; ++u)
                for (std::size_t v = 0; v < t.r1; ++v)
                    rb.add_residual("curvature-e1", {i + 1, j + 1, u + 1, v + 1}, res1[u][v]);
        }

    // Closure of R under the hom connection, as a flattened 2-form.
    Conn hom = hom_connection(t.conn1, t.conn0);
    AForm rform;
    rform.degree = 2;
    rform.frame_rank = alg.rank;
    rform.value_rank = t.r0 * t.r1;
    rform.ring = ring;
    for (const auto& [key, mat] : t.R.entries) {
        SectionVec flat(t.r0 * t.r1, Poly(ring));
        for (std::size_t p = 0; p < t.r0; ++p)
            for (std::size_t q = 0; q < t.r1; ++q) flat[p * t.r1 + q] = mat[p][q];
        rform.set({key.first, key.second}, std::move(flat));
    }
    AForm dr = koszul_differential(rform, hom);
    for (const auto& [key, flat] : dr.entries)
        for (std::size_t p = 0; p < t.r0; ++p)
            for (std::size_t q = 0; q < t.r1; ++q)
                rb.add_residual("curvature-closed",
                                {key[0] + 1, key[1] + 1, key[2] + 1, p + 1, q + 1},
                                flat[p * t.r1 + q]);

    return rb.finish();
}

// ---------------------------------------------------------------------------
// Total operator characterization

namespace {

// A graded element of the form complex valued in E0 and E1, stored by
// degree.  Degrees above the frame size hold no keys and are silently zero.
struct TotalForm {
    std::vector<AForm> e0, e1;  // index = form degree

    static TotalForm zero(const RingPtr& ring, std::size_t frame, std::size_t r0,
                          std::size_t r1, std::size_t maxdeg) {
        TotalForm f;
        for (std::size_t k = 0; k <= maxdeg; ++k) {
            AForm a0{k, frame, r0, ring, {}};
            AForm a1{k, frame, r1, ring, {}};
            f.e0.push_back(std::move(a0));
            f.e1.push_back(std::move(a1));
        }
        return f;
    }
};

void aform_accumulate(AForm& dst, const AForm& src, int sign) {
    for (const auto& [key, val] : src.entries) {
        SectionVec cur = dst.value(key);
        dst.set(key, sign > 0 ? sv_add(cur, val) : sv_sub(cur, val));
    }
}

// Apply a constant-frame bundle map (matrix) to every value of a form.
AForm aform_map(const PolyMat& m, const AForm& w, std::size_t out_rank, const RingPtr& ring) {
    AForm out{w.degree, w.frame_rank, out_rank, ring, {}};
    for (const auto& [key, val] : w.entries) out.set(key, mat_apply(m, val, ring));
    return out;
}

// Wedge of a hom-valued 2-form with an E1-valued k-form, landing in E0:
// value at (a_1..a_{k+2}) = sum over slot pairs i<j of the shuffle sign
// (-1)^(i+j-1) (1-based) times R(a_i,a_j) applied to the remaining slots.
AForm curv_wedge(const HomTwoForm& R, const AForm& w, const RingPtr& ring) {
    AForm out{w.degree + 2, w.frame_rank, R.dst_rank, ring, {}};
    std::vector<std::size_t> key;
    // enumerate increasing keys of length degree+2
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t left) {
        if (left == 0) {
            SectionVec acc = zero_section(ring, R.dst_rank);
            for (std::size_t i = 0; i < key.size(); ++i)
                for (std::size_t j = i + 1; j < key.size(); ++j) {
                    std::vector<std::size_t> rest;
                    for (std::size_t t = 0; t < key.size(); ++t)
                        if (t != i && t != j) rest.push_back(key[t]);
                    SectionVec inner = w.value(rest);
                    SectionVec term = mat_apply(R.value(key[i], key[j]), inner, ring);
                    // (-1)^(i+j-1) with 1-based positions = (-1)^(i+j+1) 0-based
                    if ((i + j) % 2 == 0)
                        acc = sv_sub(acc, term);
                    else
                        acc = sv_add(acc, term);
                }
            out.set(key, std::move(acc));
            return;
        }
        for (std::size_t v = start; v + left <= w.frame_rank; ++v) {
            key.push_back(v);
            rec(v + 1, left - 1);
            key.pop_back();
        }
    };
    rec(0, w.degree + 2);
    return out;
}

}  // namespace

Report structure_operator_check(const TwoRep& t) {
    const Algebroid& alg = *t.alg;
    const RingPtr& ring = alg.ring;
    const std::size_t ka = alg.rank;
    const std::size_t maxdeg = ka + 2;

    auto apply_D = [&](const TotalForm& in) {
        TotalForm out = TotalForm::zero(ring, ka, t.r0, t.r1, maxdeg);
        for (std::size_t k = 0; k <= maxdeg; ++k) {
            const int sgn = k % 2 == 0 ? 1 : -1;  // (-1)^k
            if (!in.e0[k].entries.empty()) {
                if (k + 1 <= maxdeg)
                    aform_accumulate(out.e0[k + 1], koszul_differential(in.e0[k], t.conn0), 1);
                aform_accumulate(out.e1[k], aform_map(t.partial, in.e0[k], t.r1, ring), sgn);
            }
            if (!in.e1[k].entries.empty()) {
                if (k + 1 <= maxdeg)
                    aform_accumulate(out.e1[k + 1], koszul_differential(in.e1[k], t.conn1), 1);
                if (k + 2 <= maxdeg)
                    aform_accumulate(out.e0[k + 2], curv_wedge(t.R, in.e1[k], ring), -sgn);
            }
        }
        return out;
    };

    ReportBuilder rb("structure-operator");
    rb.note_condition("d-squared");

    std::vector<TotalForm> seeds;
    for (std::size_t j = 0; j < t.r0; ++j) {
        TotalForm f = TotalForm::zero(ring, ka, t.r0, t.r1, maxdeg);
        f.e0[0].set({}, unit_section(ring, t.r0, j));
        seeds.push_back(std::move(f));
    }
    for (std::size_t j = 0; j < t.r1; ++j) {
        TotalForm f = TotalForm::zero(ring, ka, t.r0, t.r1, maxdeg);
        f.e1[0].set({}, unit_section(ring, t.r1, j));
        seeds.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < t.r0; ++j) {
            TotalForm f = TotalForm::zero(ring, ka, t.r0, t.r1, maxdeg);
            f.e0[1].set({i}, unit_section(ring, t.r0, j));
            seeds.push_back(std::move(f));
        }
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < t.r1; ++j) {
            TotalForm f = TotalForm::zero(ring, ka, t.r0, t.r1, maxdeg);
            f.e1[1].set({i}, unit_section(ring, t.r1, j));
            seeds.push_back(std::move(f));
        }

    for (std::size_t s = 0; s < seeds.size(); ++s) {
        TotalForm dd = apply_D(apply_D(seeds[s]));
        auto record = [&](const std::vector<AForm>& comp, std::size_t bundle_tag) {
            for (const auto& form : comp)
                for (const auto& [key, val] : form.entries)
                    for (std::size_t l = 0; l < val.size(); ++l) {
                        if (val[l].is_zero()) continue;
                        std::vector<std::size_t> idx{s + 1, bundle_tag};
                        for (std::size_t kk : key) idx.push_back(kk + 1);
                        idx.push_back(l + 1);
                        rb.add_residual("d-squared", std::move(idx), val[l]);
                    }
        };
        record(dd.e0, 1);
        record(dd.e1, 2);
    }

    return rb.finish();
}

// ---------------------------------------------------------------------------
// Duality

TwoRep dual_tworep(const TwoRep& t) {
    const RingPtr& ring = t.alg->ring;
    HomTwoForm R2 = zero_hom_two_form(ring, t.R.frame_rank, t.r1, t.r0);
    for (const auto& [key, mat] : t.R.entries)
        R2.set(key.first, key.second, mat_neg(mat_transpose(mat)));
    // mat_transpose of an r0 x 0 matrix loses width; rebuild explicitly at
    // the degenerate ranks.
    PolyMat pt = zero_mat(ring, t.r0, t.r1);
    for (std::size_t i = 0; i < t.r1; ++i)
        for (std::size_t j = 0; j < t.r0; ++j) pt[j][i] = t.partial[i][j];
    return make_tworep(t.alg, std::move(pt), dual_connection(t.conn1), dual_connection(t.conn0),
                       std::move(R2));
}

// ---------------------------------------------------------------------------
// Change of splitting

PolyMat SplittingChange::matrix_at(const RingPtr& ring, std::size_t i) const {
    const auto& block = phi.at(i);  // [j over E1][l over E0]
    const std::size_t r1 = block.size();
    const std::size_t r0 = r1 == 0 ? 0 : block[0].size();
    PolyMat m = zero_mat(ring, r0, r1);
    for (std::size_t j = 0; j < r1; ++j)
        for (std::size_t l = 0; l < block[j].size(); ++l) m[l][j] = block[j][l];
    return m;
}

TwoRep change_splitting(const TwoRep& t, const SplittingChange& phi) {
    const Algebroid& alg = *t.alg;
    const RingPtr& ring = alg.ring;
    if (phi.phi.size() != alg.rank) throw std::invalid_argument("splitting-change depth");
    std::vector<PolyMat> Phi(alg.rank);
    for (std::size_t i = 0; i < alg.rank; ++i) {
        if (phi.phi[i].size() != t.r1) throw std::invalid_argument("splitting-change rows");
        for (const auto& row : phi.phi[i])
            if (row.size() != t.r0) throw std::invalid_argument("splitting-change cols");
        Phi[i] = phi.matrix_at(ring, i);  // r0 x r1
    }

    // conn1' = conn1 + partial . Phi ; conn0' = conn0 + Phi . partial
    std::vector<std::vector<std::vector<Poly>>> g1(
        alg.rank,
        std::vector<std::vector<Poly>>(t.r1, std::vector<Poly>(t.r1, Poly(ring))));
    std::vector<std::vector<std::vector<Poly>>> g0(
        alg.rank,
        std::vector<std::vector<Poly>>(t.r0, std::vector<Poly>(t.r0, Poly(ring))));
    for (std::size_t i = 0; i < alg.rank; ++i) {
        PolyMat d1 = mat_mul_shaped(t.partial, Phi[i], ring, t.r1, t.r1);
        PolyMat d0 = mat_mul_shaped(Phi[i], t.partial, ring, t.r0, t.r0);
        for (std::size_t j = 0; j < t.r1; ++j)
            for (std::size_t m = 0; m < t.r1; ++m) g1[i][j][m] = t.conn1.gamma(i, j, m) + d1[m][j];
        for (std::size_t j = 0; j < t.r0; ++j)
            for (std::size_t l = 0; l < t.r0; ++l) g0[i][j][l] = t.conn0.gamma(i, j, l) + d0[l][j];
    }
    Conn conn1p(t.alg, t.r1, std::move(g1));
    Conn conn0p(t.alg, t.r0, std::move(g0));

    // R' = R + d_Hom(Phi) + Phi partial Phi antisymmetrized, with the hom
    // connection of the ORIGINAL pair.
    Conn hom = hom_connection(t.conn1, t.conn0);
    AForm phiform;
    phiform.degree = 1;
    phiform.frame_rank = alg.rank;
    phiform.value_rank = t.r0 * t.r1;
    phiform.ring = ring;
    for (std::size_t i = 0; i < alg.rank; ++i) {
        SectionVec flat(t.r0 * t.r1, Poly(ring));
        for (std::size_t p = 0; p < t.r0; ++p)
            for (std::size_t q = 0; q < t.r1; ++q) flat[p * t.r1 + q] = Phi[i][p][q];
        phiform.set({i}, std::move(flat));
    }
    AForm dphi = koszul_differential(phiform, hom);

    HomTwoForm R2 = zero_hom_two_form(ring, alg.rank, t.r0, t.r1);
    for (std::size_t i = 0; i < alg.rank; ++i)
        for (std::size_t j = i + 1; j < alg.rank; ++j) {
            PolyMat m = t.R.value(i, j);
            SectionVec flat = dphi.value({i, j});
            for (std::size_t p = 0; p < t.r0; ++p)
                for (std::size_t q = 0; q < t.r1; ++q) m[p][q] += flat[p * t.r1 + q];
            PolyMat sq = mat_sub(
                mat_mul_shaped(Phi[i], mat_mul_shaped(t.partial, Phi[j], ring, t.r1, t.r1),
                               ring, t.r0, t.r1),
                mat_mul_shaped(Phi[j], mat_mul_shaped(t.partial, Phi[i], ring, t.r1, t.r1),
                               ring, t.r0, t.r1));
            R2.set(i, j, mat_add(m, sq));
        }

    return make_tworep(t.alg, t.partial, std::move(conn0p), std::move(conn1p), std::move(R2));
}

}  // namespace liedouble
