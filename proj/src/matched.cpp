#include "liedouble/matched.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace liedouble {

namespace {

// Value of the hom 2-form at (frame i, general section s): sum over the
// second slot, weighted by the coefficients of s.
PolyMat hom_at_frame_section(const HomTwoForm& R, std::size_t i, const SectionVec& s,
                             const RingPtr& ring) {
    PolyMat out = zero_mat(ring, R.dst_rank, R.src_rank);
    for (std::size_t m = 0; m < R.frame_rank; ++m) {
        if (s[m].is_zero()) continue;
        PolyMat v = R.value(i, m);
        for (std::size_t p = 0; p < R.dst_rank; ++p)
            for (std::size_t q = 0; q < R.src_rank; ++q) out[p][q] += s[m] * v[p][q];
    }
    return out;
}

SectionVec mat_column(const PolyMat& m, std::size_t col, std::size_t rows,
                      const RingPtr& ring) {
    SectionVec out = zero_section(ring, rows);
    for (std::size_t r = 0; r < rows; ++r) out[r] = m[r][col];
    return out;
}

void add_section_residual(ReportBuilder& rb, const std::string& cond,
                          std::vector<std::size_t> prefix, const SectionVec& resid) {
    for (std::size_t p = 0; p < resid.size(); ++p) {
        if (resid[p].is_zero()) continue;
        std::vector<std::size_t> idx = prefix;
        idx.push_back(p + 1);
        rb.add_residual(cond, idx, resid[p]);
    }
}

// Flattened frame values of the 1-form that rereads an exterior-squared
// curvature: slot over the other side's frame, value in the wedge-square
// dual of this side's frame tensor the core.  flat((j1<j2), p) of the form
// at frame index i is R.value(j1, j2)[p][i].
std::vector<SectionVec> reread_curvature(const HomTwoForm& R, std::size_t slot_rank,
                                         std::size_t rank_c, const RingPtr& ring) {
    const std::size_t pairs = pair_count(R.frame_rank);
    std::vector<SectionVec> out(slot_rank, zero_section(ring, pairs * rank_c));
    for (std::size_t j1 = 0; j1 + 1 < R.frame_rank; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < R.frame_rank; ++j2) {
            PolyMat v = R.value(j1, j2);
            for (std::size_t i = 0; i < slot_rank; ++i)
                for (std::size_t p = 0; p < rank_c; ++p)
                    out[i][pair_index(j1, j2, R.frame_rank) * rank_c + p] = v[p][i];
        }
    return out;
}

SectionVec eval_flat_wedge(const SectionVec& flat, const SectionVec& s,
                           const SectionVec& t, std::size_t wedge_rank,
                           std::size_t rank_c, const RingPtr& ring) {
    SectionVec out = zero_section(ring, rank_c);
    for (std::size_t j1 = 0; j1 + 1 < wedge_rank; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < wedge_rank; ++j2) {
            Poly w = s[j1] * t[j2] - s[j2] * t[j1];
            if (w.is_zero()) continue;
            for (std::size_t p = 0; p < rank_c; ++p)
                out[p] += w * flat[pair_index(j1, j2, wedge_rank) * rank_c + p];
        }
    return out;
}

SectionVec apply_frames(const std::vector<SectionVec>& frame_values, const SectionVec& a,
                        std::size_t value_rank, const RingPtr& ring) {
    SectionVec out = zero_section(ring, value_rank);
    for (std::size_t i = 0; i < frame_values.size(); ++i)
        if (!a[i].is_zero()) out = sv_add(out, sv_scale(a[i], frame_values[i]));
    return out;
}

// Exterior covariant derivative of the reread curvature of the "other"
// side, as a function of two general sections of "this" side.  conn is the
// wedge-square-dual tensor connection of this side's two actions.
SectionVec reread_differential(const Algebroid& alg, const Conn& conn,
                               const std::vector<SectionVec>& frame_values,
                               const SectionVec& a1, const SectionVec& a2,
                               std::size_t value_rank, const RingPtr& ring) {
    SectionVec w2 = apply_frames(frame_values, a2, value_rank, ring);
    SectionVec w1 = apply_frames(frame_values, a1, value_rank, ring);
    SectionVec out = sv_sub(conn_apply(conn, a1, w2), conn_apply(conn, a2, w1));
    SectionVec br = bracket_sections(alg, a1, a2);
    return sv_sub(out, apply_frames(frame_values, br, value_rank, ring));
}

Poly random_base_function(const RingPtr& ring, std::size_t num_base, std::mt19937& gen) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> expo(0, 2);
    Poly f(ring);
    for (int t = 0; t < 3; ++t) {
        std::vector<unsigned> e(ring->num_vars(), 0);
        for (std::size_t v = 0; v < num_base; ++v) e[v] = expo(gen);
        f.add_term(e, Rational(coeff(gen)));
    }
    // Keep the multiplier invertible-looking: a vanishing sample would make
    // the linearity comparison vacuous.
    f += Poly(ring, Rational(1));
    return f;
}

SectionVec random_core_section(const RingPtr& ring, std::size_t rank, std::size_t num_base,
                               std::mt19937& gen) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<unsigned> expo(0, 1);
    SectionVec out = zero_section(ring, rank);
    for (std::size_t r = 0; r < rank; ++r) {
        std::vector<unsigned> e(ring->num_vars(), 0);
        for (std::size_t v = 0; v < num_base; ++v) e[v] = expo(gen);
        out[r].add_term(e, Rational(coeff(gen)));
    }
    return out;
}

}  // namespace

SectionVec MatchedPair::partialA_col(std::size_t l) const {
    return mat_column(partialA(), l, A->rank, A->ring);
}

SectionVec MatchedPair::partialB_col(std::size_t l) const {
    return mat_column(partialB(), l, B->rank, B->ring);
}

static MatchedPair make_matchedpair_checked(MatchedPair mp) {
    const auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (!mp.A || !mp.B) fail("matched pair needs both algebroids");
    if (!same_ring(mp.A->ring, mp.B->ring)) fail("matched pair: algebroids over different rings");
    if (!(*mp.repA.alg == *mp.A)) fail("matched pair: repA does not act along the first algebroid");
    if (!(*mp.repB.alg == *mp.B)) fail("matched pair: repB does not act along the second algebroid");
    if (mp.repA.r0 != mp.rank_c || mp.repB.r0 != mp.rank_c)
        fail("matched pair: core ranks of the two representations disagree");
    if (mp.repA.r1 != mp.B->rank) fail("matched pair: repA must shift the core into the second algebroid");
    if (mp.repB.r1 != mp.A->rank) fail("matched pair: repB must shift the core into the first algebroid");
    if (!mp.core_names.empty() && mp.core_names.size() != mp.rank_c)
        fail("matched pair: wrong number of core frame names");
    return mp;
}

MatchedPair make_matched_pair(std::shared_ptr<const Algebroid> A,
                              std::shared_ptr<const Algebroid> B, std::size_t rank_c,
                              TwoRep repA, TwoRep repB) {
    return make_matchedpair_checked(MatchedPair{std::move(A), std::move(B), rank_c,
                                                std::move(repA), std::move(repB),
                                                {}});
}

SectionVec m6_residual(const MatchedPair& mp, std::size_t i, std::size_t j,
                       const SectionVec& c) {
    const RingPtr& ring = mp.A->ring;
    SectionVec ei = mp.A->unit(i);
    SectionVec bj = mp.B->unit(j);

    SectionVec out = conn_apply(mp.connBC(), bj, conn_apply(mp.connAC(), ei, c));
    out = sv_sub(out, conn_apply(mp.connAC(), ei, conn_apply(mp.connBC(), bj, c)));
    out = sv_sub(out, conn_apply(mp.connAC(), conn_apply(mp.connBA(), bj, ei), c));
    out = sv_add(out, conn_apply(mp.connBC(), conn_apply(mp.connAB(), ei, bj), c));

    SectionVec pb_c = mat_apply(mp.partialB(), c, ring);
    PolyMat rb = hom_at_frame_section(mp.RB(), j, pb_c, ring);
    SectionVec pa_c = mat_apply(mp.partialA(), c, ring);
    PolyMat ra = hom_at_frame_section(mp.RA(), i, pa_c, ring);
    for (std::size_t p = 0; p < mp.rank_c; ++p) {
        out[p] -= rb[p][i];
        out[p] += ra[p][j];
    }
    return out;
}

SectionVec m9_residual(const MatchedPair& mp, const SectionVec& a1, const SectionVec& a2,
                       const SectionVec& b1, const SectionVec& b2) {
    const RingPtr& ring = mp.A->ring;
    const std::size_t ka = mp.A->rank, kb = mp.B->rank, rc = mp.rank_c;

    auto wb = reread_curvature(mp.RB(), ka, rc, ring);
    Conn connA = wedge2dual_tensor(mp.connAB(), mp.connAC());
    SectionVec dwb =
        reread_differential(*mp.A, connA, wb, a1, a2, pair_count(kb) * rc, ring);
    SectionVec side1 = eval_flat_wedge(dwb, b1, b2, kb, rc, ring);

    auto wa = reread_curvature(mp.RA(), kb, rc, ring);
    Conn connB = wedge2dual_tensor(mp.connBA(), mp.connBC());
    SectionVec dwa =
        reread_differential(*mp.B, connB, wa, b1, b2, pair_count(ka) * rc, ring);
    SectionVec side2 = eval_flat_wedge(dwa, a1, a2, ka, rc, ring);

    return sv_sub(side1, side2);
}

Report check_matched(const MatchedPair& mp) {
    const RingPtr& ring = mp.A->ring;
    const std::size_t ka = mp.A->rank, kb = mp.B->rank, rc = mp.rank_c;
    const std::size_t nv = ring->num_vars();
    ReportBuilder rb("check-matched");
    for (int n = 1; n <= 9; ++n) rb.note_condition("M" + std::to_string(n));

    // M1: the two shifts into the algebroids compose with the anchors to the
    // same vector field, core frame by core frame.
    for (std::size_t l = 0; l < rc; ++l) {
        VectorField va = anchor_field(*mp.A, mp.partialA_col(l));
        VectorField vb = anchor_field(*mp.B, mp.partialB_col(l));
        for (std::size_t w = 0; w < nv; ++w) {
            Poly d = va.on_var[w] - vb.on_var[w];
            if (!d.is_zero()) rb.add_residual("M1", {l + 1, w + 1}, d);
        }
    }

    // M2: antisymmetry of the raw core bracket table.
    auto core_entry = [&](std::size_t l, std::size_t m) {
        return sv_sub(conn_apply(mp.connAC(), mp.partialA_col(l), unit_section(ring, rc, m)),
                      conn_apply(mp.connBC(), mp.partialB_col(m), unit_section(ring, rc, l)));
    };
    for (std::size_t l = 0; l < rc; ++l)
        for (std::size_t m = l; m < rc; ++m)
            add_section_residual(rb, "M2", {l + 1, m + 1},
                                 sv_add(core_entry(l, m), core_entry(m, l)));

    // M3: bracketing a frame generator of A with a shifted core section
    // against the shift of its covariant derivative.
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t l = 0; l < rc; ++l) {
            SectionVec r = bracket_sections(*mp.A, mp.A->unit(i), mp.partialA_col(l));
            r = sv_sub(r, mat_apply(mp.partialA(),
                                    conn_apply(mp.connAC(), mp.A->unit(i),
                                               unit_section(ring, rc, l)),
                                    ring));
            r = sv_add(r, conn_apply(mp.connBA(), mp.partialB_col(l), mp.A->unit(i)));
            add_section_residual(rb, "M3", {i + 1, l + 1}, r);
        }

    // M4: mirror of M3 on the B side.
    for (std::size_t j = 0; j < kb; ++j)
        for (std::size_t l = 0; l < rc; ++l) {
            SectionVec r = bracket_sections(*mp.B, mp.B->unit(j), mp.partialB_col(l));
            r = sv_sub(r, mat_apply(mp.partialB(),
                                    conn_apply(mp.connBC(), mp.B->unit(j),
                                               unit_section(ring, rc, l)),
                                    ring));
            r = sv_add(r, conn_apply(mp.connAB(), mp.partialA_col(l), mp.B->unit(j)));
            add_section_residual(rb, "M4", {j + 1, l + 1}, r);
        }

    // M5: anchors commute up to the crossed covariant derivatives.
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < kb; ++j) {
            VectorField v =
                vf_bracket(mp.A->anchor_vf[i], mp.B->anchor_vf[j]);
            v = vf_sub(v, anchor_field(*mp.B,
                                       conn_apply(mp.connAB(), mp.A->unit(i), mp.B->unit(j))));
            v = vf_add(v, anchor_field(*mp.A,
                                       conn_apply(mp.connBA(), mp.B->unit(j), mp.A->unit(i))));
            for (std::size_t w = 0; w < nv; ++w)
                if (!v.on_var[w].is_zero())
                    rb.add_residual("M5", {i + 1, j + 1, w + 1}, v.on_var[w]);
        }

    // M6: mixed second covariant derivatives of core sections against the
    // crossed curvatures.
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < kb; ++j)
            for (std::size_t l = 0; l < rc; ++l)
                add_section_residual(rb, "M6", {i + 1, j + 1, l + 1},
                                     m6_residual(mp, i, j, unit_section(ring, rc, l)));

    // M7: derivation property of the B action on the A bracket, with the
    // shifted curvature of A as the correction term.
    for (std::size_t i1 = 0; i1 < ka; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < ka; ++i2)
            for (std::size_t j = 0; j < kb; ++j) {
                PolyMat rav = mp.RA().value(i1, i2);
                SectionVec r =
                    mat_apply(mp.partialA(), mat_column(rav, j, rc, ring), ring);
                r = sv_add(r, conn_apply(mp.connBA(), mp.B->unit(j),
                                         mp.A->structure[i1][i2]));
                r = sv_sub(r, bracket_sections(*mp.A,
                                               conn_apply(mp.connBA(), mp.B->unit(j),
                                                          mp.A->unit(i1)),
                                               mp.A->unit(i2)));
                r = sv_sub(r, bracket_sections(*mp.A, mp.A->unit(i1),
                                               conn_apply(mp.connBA(), mp.B->unit(j),
                                                          mp.A->unit(i2))));
                r = sv_sub(r, conn_apply(mp.connBA(),
                                         conn_apply(mp.connAB(), mp.A->unit(i2),
                                                    mp.B->unit(j)),
                                         mp.A->unit(i1)));
                r = sv_add(r, conn_apply(mp.connBA(),
                                         conn_apply(mp.connAB(), mp.A->unit(i1),
                                                    mp.B->unit(j)),
                                         mp.A->unit(i2)));
                add_section_residual(rb, "M7", {i1 + 1, i2 + 1, j + 1}, r);
            }

    // M8: mirror of M7 on the B side.
    for (std::size_t j1 = 0; j1 < kb; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < kb; ++j2)
            for (std::size_t i = 0; i < ka; ++i) {
                PolyMat rbv = mp.RB().value(j1, j2);
                SectionVec r =
                    mat_apply(mp.partialB(), mat_column(rbv, i, rc, ring), ring);
                r = sv_add(r, conn_apply(mp.connAB(), mp.A->unit(i),
                                         mp.B->structure[j1][j2]));
                r = sv_sub(r, bracket_sections(*mp.B,
                                               conn_apply(mp.connAB(), mp.A->unit(i),
                                                          mp.B->unit(j1)),
                                               mp.B->unit(j2)));
                r = sv_sub(r, bracket_sections(*mp.B, mp.B->unit(j1),
                                               conn_apply(mp.connAB(), mp.A->unit(i),
                                                          mp.B->unit(j2))));
                r = sv_sub(r, conn_apply(mp.connAB(),
                                         conn_apply(mp.connBA(), mp.B->unit(j2),
                                                    mp.A->unit(i)),
                                         mp.B->unit(j1)));
                r = sv_add(r, conn_apply(mp.connAB(),
                                         conn_apply(mp.connBA(), mp.B->unit(j1),
                                                    mp.A->unit(i)),
                                         mp.B->unit(j2)));
                add_section_residual(rb, "M8", {j1 + 1, j2 + 1, i + 1}, r);
            }

    // M9: the two exterior covariant derivatives of the reread curvatures
    // agree, frame pair against frame pair.  Assembled through the same
    // alternating-form machinery the representation checks use.
    if (ka >= 2 && kb >= 2 && rc > 0) {
        AForm wb;
        wb.degree = 1;
        wb.frame_rank = ka;
        wb.value_rank = pair_count(kb) * rc;
        wb.ring = ring;
        auto wb_frames = reread_curvature(mp.RB(), ka, rc, ring);
        for (std::size_t i = 0; i < ka; ++i) wb.set({i}, wb_frames[i]);
        AForm dwb = koszul_differential(wb, wedge2dual_tensor(mp.connAB(), mp.connAC()));

        AForm wa;
        wa.degree = 1;
        wa.frame_rank = kb;
        wa.value_rank = pair_count(ka) * rc;
        wa.ring = ring;
        auto wa_frames = reread_curvature(mp.RA(), kb, rc, ring);
        for (std::size_t j = 0; j < kb; ++j) wa.set({j}, wa_frames[j]);
        AForm dwa = koszul_differential(wa, wedge2dual_tensor(mp.connBA(), mp.connBC()));

        for (std::size_t i1 = 0; i1 < ka; ++i1)
            for (std::size_t i2 = i1 + 1; i2 < ka; ++i2) {
                SectionVec left = dwb.value({i1, i2});
                for (std::size_t j1 = 0; j1 < kb; ++j1)
                    for (std::size_t j2 = j1 + 1; j2 < kb; ++j2) {
                        SectionVec right = dwa.value({j1, j2});
                        for (std::size_t p = 0; p < rc; ++p) {
                            Poly d = left[pair_index(j1, j2, kb) * rc + p] -
                                     right[pair_index(i1, i2, ka) * rc + p];
                            if (!d.is_zero())
                                rb.add_residual(
                                    "M9", {i1 + 1, i2 + 1, j1 + 1, j2 + 1, p + 1}, d);
                        }
                    }
            }
    }

    return rb.finish();
}

bool verify_tensoriality(const MatchedPair& mp, unsigned seed) {
    const RingPtr& ring = mp.A->ring;
    const std::size_t ka = mp.A->rank, kb = mp.B->rank, rc = mp.rank_c;
    const std::size_t nb = ring->num_base();
    std::mt19937 gen(seed);

    if (ka > 0 && kb > 0 && rc > 0) {
        for (int trial = 0; trial < 4; ++trial) {
            Poly f = random_base_function(ring, nb, gen);
            SectionVec c = random_core_section(ring, rc, nb, gen);
            std::size_t i = gen() % ka, j = gen() % kb;
            SectionVec lhs = m6_residual(mp, i, j, sv_scale(f, c));
            SectionVec rhs = sv_scale(f, m6_residual(mp, i, j, c));
            if (!sv_is_zero(sv_sub(lhs, rhs))) return false;
        }
    }

    if (ka > 0 && kb > 0) {
        for (int trial = 0; trial < 2; ++trial) {
            SectionVec a1 = random_core_section(ring, ka, nb, gen);
            SectionVec a2 = random_core_section(ring, ka, nb, gen);
            SectionVec b1 = random_core_section(ring, kb, nb, gen);
            SectionVec b2 = random_core_section(ring, kb, nb, gen);
            SectionVec base = m9_residual(mp, a1, a2, b1, b2);
            for (int slot = 0; slot < 4; ++slot) {
                Poly f = random_base_function(ring, nb, gen);
                SectionVec sa1 = a1, sa2 = a2, sb1 = b1, sb2 = b2;
                if (slot == 0) sa1 = sv_scale(f, a1);
                if (slot == 1) sa2 = sv_scale(f, a2);
                if (slot == 2) sb1 = sv_scale(f, b1);
                if (slot == 3) sb2 = sv_scale(f, b2);
                SectionVec lhs = m9_residual(mp, sa1, sa2, sb1, sb2);
                if (!sv_is_zero(sv_sub(lhs, sv_scale(f, base)))) return false;
            }
        }
    }
    return true;
}

Algebroid core_algebroid(const MatchedPair& mp) {
    const RingPtr& ring = mp.A->ring;
    const std::size_t rc = mp.rank_c;
    std::vector<std::string> names = mp.core_names;
    if (names.empty())
        for (std::size_t l = 0; l < rc; ++l) names.push_back("c" + std::to_string(l + 1));

    std::vector<std::vector<Poly>> anchor;
    for (std::size_t l = 0; l < rc; ++l)
        anchor.push_back(anchor_field(*mp.A, mp.partialA_col(l)).on_var);

    std::vector<std::vector<SectionVec>> structure(rc,
                                                   std::vector<SectionVec>(rc));
    for (std::size_t l = 0; l < rc; ++l)
        for (std::size_t m = 0; m < rc; ++m)
            structure[l][m] =
                sv_sub(conn_apply(mp.connAC(), mp.partialA_col(l), unit_section(ring, rc, m)),
                       conn_apply(mp.connBC(), mp.partialB_col(m), unit_section(ring, rc, l)));

    return make_algebroid(ring, rc, std::move(names), std::move(anchor),
                          std::move(structure));
}

RingPtr core_dual_ring(const RingPtr& base, std::size_t rank_c) {
    std::vector<std::string> fiber;
    for (std::size_t l = 0; l < rank_c; ++l) fiber.push_back("mu" + std::to_string(l + 1));
    return base->with_fiber_group("core-dual", fiber);
}

Poly linear_function(const RingPtr& cstar, const SectionVec& core_section) {
    Poly out(cstar);
    const std::size_t nb = cstar->num_base();
    for (std::size_t l = 0; l < core_section.size(); ++l) {
        Poly coeff = core_section[l];
        if (!same_ring(coeff.ring(), cstar)) coeff = coeff.lifted(cstar);
        out += coeff * Poly::var(cstar, nb + l);
    }
    return out;
}

PoissonStructure::PoissonStructure(RingPtr cstar, std::vector<std::vector<Poly>> var_table)
    : cstar_(std::move(cstar)), table_(std::move(var_table)) {
    const std::size_t n = cstar_->num_vars();
    if (table_.size() != n) throw std::invalid_argument("poisson table: wrong row count");
    for (const auto& row : table_)
        if (row.size() != n) throw std::invalid_argument("poisson table: wrong row width");
}

Poly PoissonStructure::bracket(const Poly& f, const Poly& g) const {
    const std::size_t n = cstar_->num_vars();
    Poly out(cstar_);
    for (std::size_t v = 0; v < n; ++v) {
        Poly fv = f.partial(v);
        if (fv.is_zero()) continue;
        for (std::size_t w = 0; w < n; ++w) {
            if (table_[v][w].is_zero()) continue;
            Poly gw = g.partial(w);
            if (gw.is_zero()) continue;
            out += fv * gw * table_[v][w];
        }
    }
    return out;
}

PoissonStructure poisson_on_cstar(const MatchedPair& mp) {
    const RingPtr base = mp.A->ring;
    const std::size_t nb = base->num_vars();
    const std::size_t rc = mp.rank_c;
    RingPtr cstar = core_dual_ring(base, rc);
    Algebroid core = core_algebroid(mp);

    const std::size_t n = cstar->num_vars();
    std::vector<std::vector<Poly>> table(n, std::vector<Poly>(n, Poly(cstar)));
    for (std::size_t l = 0; l < rc; ++l) {
        for (std::size_t j = 0; j < nb; ++j) {
            Poly push = core.anchor_vf[l].on_var[j].lifted(cstar);
            table[nb + l][j] = push;
            table[j][nb + l] = -push;
        }
        for (std::size_t m = 0; m < rc; ++m)
            table[nb + l][nb + m] = linear_function(cstar, core.structure[l][m]);
    }
    return PoissonStructure(cstar, std::move(table));
}

MatchedPair vacant_from_representations(std::shared_ptr<const Algebroid> A,
                                        std::shared_ptr<const Algebroid> B, const Conn& connAB,
                                        const Conn& connBA) {
    const RingPtr& ring = A->ring;
    TwoRep repA = make_tworep(A, PolyMat(B->rank), Conn::zero(A, 0), connAB,
                              zero_hom_two_form(ring, A->rank, 0, B->rank));
    TwoRep repB = make_tworep(B, PolyMat(A->rank), Conn::zero(B, 0), connBA,
                              zero_hom_two_form(ring, B->rank, 0, A->rank));
    return make_matched_pair(std::move(A), std::move(B), 0, std::move(repA),
                             std::move(repB));
}

MatchedPair transform_matched(const MatchedPair& mp,
                              const std::vector<std::vector<std::vector<Poly>>>& phi) {
    const std::size_t ka = mp.A->rank, kb = mp.B->rank, rc = mp.rank_c;
    if (phi.size() != ka) throw std::invalid_argument("transform: phi must be indexed by the A frame");
    for (const auto& row : phi) {
        if (row.size() != kb) throw std::invalid_argument("transform: phi middle index must run over the B frame");
        for (const auto& cell : row)
            if (cell.size() != rc) throw std::invalid_argument("transform: phi inner index must run over the core frame");
    }

    SplittingChange phiA{phi};
    std::vector<std::vector<std::vector<Poly>>> flipped(
        kb, std::vector<std::vector<Poly>>(ka));
    for (std::size_t j = 0; j < kb; ++j)
        for (std::size_t i = 0; i < ka; ++i) flipped[j][i] = phi[i][j];
    SplittingChange phiB{std::move(flipped)};

    MatchedPair out = mp;
    out.repA = change_splitting(mp.repA, phiA);
    out.repB = change_splitting(mp.repB, phiB);
    return out;
}

}  // namespace liedouble
