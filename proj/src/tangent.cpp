#include "liedouble/tangent.hpp"

#include <stdexcept>

namespace liedouble {

namespace {

// rho(s) as a coefficient vector over the tangent frame.
SectionVec anchor_coeffs(const Algebroid& alg, const SectionVec& s) {
    return anchor_field(alg, s).on_var;
}

VectorField field_of_coeffs(const RingPtr& ring, const SectionVec& coeffs) {
    VectorField v = zero_field(ring);
    v.on_var = coeffs;
    return v;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

}  // namespace

Algebroid tm_algebroid(const RingPtr& ring) {
    const std::size_t n = ring->num_vars();
    std::vector<std::string> names;
    std::vector<std::vector<Poly>> anchor(n, std::vector<Poly>(n, Poly(ring)));
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("d" + std::to_string(i + 1));
        anchor[i][i] = Poly(ring, Rational(1));
    }
    std::vector<std::vector<SectionVec>> structure(
        n, std::vector<SectionVec>(n, zero_section(ring, n)));
    return make_algebroid(ring, n, std::move(names), std::move(anchor),
                          std::move(structure));
}

BasicConnections basic_connections(std::shared_ptr<const Algebroid> alg, const Conn& nabla) {
    const RingPtr& ring = alg->ring;
    const std::size_t k = alg->rank;
    const std::size_t n = ring->num_vars();
    require(*nabla.alg() == tm_algebroid(ring),
            "induced connections: nabla must act along the coordinate tangent algebroid");
    require(nabla.bundle_rank() == k, "induced connections: nabla must live on the algebroid");

    std::vector<std::vector<std::vector<Poly>>> on_alg(
        k, std::vector<std::vector<Poly>>(k, std::vector<Poly>(k, Poly(ring))));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            SectionVec v = sv_add(alg->structure[i][j],
                                  conn_apply(nabla, anchor_coeffs(*alg, alg->unit(j)),
                                             alg->unit(i)));
            for (std::size_t l = 0; l < k; ++l) on_alg[i][j][l] = v[l];
        }

    std::vector<std::vector<std::vector<Poly>>> on_tangent(
        k, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(ring))));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SectionVec grad = conn_apply(nabla, unit_section(ring, n, j), alg->unit(i));
            SectionVec v = sv_add(anchor_coeffs(*alg, grad),
                                  vf_bracket(alg->anchor_vf[i], coordinate_field(ring, j))
                                      .on_var);
            for (std::size_t l = 0; l < n; ++l) on_tangent[i][j][l] = v[l];
        }

    BasicConnections out{Conn(alg, k, std::move(on_alg)),
                         Conn(std::move(alg), n, std::move(on_tangent))};

    // Re-derive both actions on function multiples of frame sections and
    // compare against what the stored coefficients produce; this pins the
    // assembly above to the defining formulas.
    const Algebroid& a = *out.on_alg.alg();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t w = 0; w < n; ++w) {
                Poly f = Poly::var(ring, w);
                SectionVec s = sv_scale(f, a.unit(j));
                SectionVec stored = conn_apply(out.on_alg, a.unit(i), s);
                SectionVec fresh =
                    sv_add(bracket_sections(a, a.unit(i), s),
                           conn_apply(nabla, anchor_coeffs(a, s), a.unit(i)));
                require(sv_is_zero(sv_sub(stored, fresh)),
                        "induced connections: algebroid action drifted from its definition");
            }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t w = 0; w < n; ++w) {
                Poly f = Poly::var(ring, w);
                SectionVec x = sv_scale(f, unit_section(ring, n, j));
                SectionVec stored = conn_apply(out.on_tangent, a.unit(i), x);
                SectionVec fresh = sv_add(
                    anchor_coeffs(a, conn_apply(nabla, x, a.unit(i))),
                    vf_bracket(a.anchor_vf[i], field_of_coeffs(ring, x)).on_var);
                require(sv_is_zero(sv_sub(stored, fresh)),
                        "induced connections: tangent action drifted from its definition");
            }
    return out;
}

HomTwoForm basic_curvature(const std::shared_ptr<const Algebroid>& alg, const Conn& nabla,
                           const BasicConnections& basic) {
    const RingPtr& ring = alg->ring;
    const std::size_t k = alg->rank;
    const std::size_t n = ring->num_vars();
    HomTwoForm R;
    R.frame_rank = k;
    R.dst_rank = k;
    R.src_rank = n;
    R.ring = ring;
    for (std::size_t i1 = 0; i1 + 1 < k; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < k; ++i2) {
            PolyMat m = zero_mat(ring, k, n);
            bool nonzero = false;
            for (std::size_t j = 0; j < n; ++j) {
                SectionVec x = unit_section(ring, n, j);
                SectionVec v = sv_scale(Poly(ring, Rational(-1)),
                                        conn_apply(nabla, x, alg->structure[i1][i2]));
                v = sv_add(v, bracket_sections(*alg, conn_apply(nabla, x, alg->unit(i1)),
                                               alg->unit(i2)));
                v = sv_add(v, bracket_sections(*alg, alg->unit(i1),
                                               conn_apply(nabla, x, alg->unit(i2))));
                v = sv_add(v, conn_apply(nabla,
                                         conn_apply(basic.on_tangent, alg->unit(i2), x),
                                         alg->unit(i1)));
                v = sv_sub(v, conn_apply(nabla,
                                         conn_apply(basic.on_tangent, alg->unit(i1), x),
                                         alg->unit(i2)));
                for (std::size_t l = 0; l < k; ++l) {
                    if (!v[l].is_zero()) nonzero = true;
                    m[l][j] = v[l];
                }
            }
            if (nonzero) R.set(i1, i2, std::move(m));
        }
    return R;
}

MatchedPair tangent_double_matched_pair(std::shared_ptr<const Algebroid> alg,
                                        const Conn& nabla) {
    const RingPtr& ring = alg->ring;
    const std::size_t k = alg->rank;
    const std::size_t n = ring->num_vars();
    BasicConnections basic = basic_connections(alg, nabla);
    HomTwoForm rbas = basic_curvature(alg, nabla, basic);
    const std::shared_ptr<const Algebroid>& tm = nabla.alg();

    TwoRep rep_tm = make_tworep(tm, identity_mat(ring, k), nabla, nabla, curvature(nabla));

    PolyMat anchor_shift = zero_mat(ring, n, k);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < k; ++l) anchor_shift[j][l] = alg->anchor_vf[l].on_var[j];
    TwoRep rep_alg =
        make_tworep(alg, std::move(anchor_shift), basic.on_alg, basic.on_tangent, rbas);

    MatchedPair mp = make_matched_pair(tm, alg, k, std::move(rep_tm), std::move(rep_alg));
    mp.core_names = alg->gen_names;
    return mp;
}

}  // namespace liedouble
