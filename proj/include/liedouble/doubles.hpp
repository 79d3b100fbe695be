#pragma once

// Double structures: the total-space Lie algebroid presented by a two-term
// representation, the pair of dual presentations living over the core dual,
// and the bialgebroid conditions (B1)-(B3) evaluated against that pair.
//
// Generator layout for every algebroid produced here: the linear generators
// come first (one per frame section of the acting algebroid), the core
// generators follow (one per frame section of the degree-0 bundle).  All
// coefficients live in the total ring, i.e. the base ring extended by one
// fiber variable per frame section of the degree-1 bundle.

#include "liedouble/matched.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace liedouble {

// Assemble the total-space algebroid of a two-term representation.  The
// anchor sends a linear generator to the lift of its frame section's anchor
// field minus the fiberwise action of the degree-1 connection, and a core
// generator to the vertical field picked out by the chain map.  Brackets of
// linear generators reproduce the acting algebroid's table corrected by the
// curvature tensor in the core slots; mixed brackets apply the degree-0
// connection; core generators commute.
//
// `total_ring`, when supplied, must extend the representation's base ring by
// exactly one fiber variable per degree-1 frame section; pass nullptr to have
// a fresh extension created.  `linear_names` / `core_names` override the
// default generator labels ("sigma(<gen>)" and "vert(c<j>)").
//
// The construction is purely formal and accepts unverified representations;
// by the structure theorem the result satisfies the Lie algebroid axioms
// exactly when the representation validates.  Internal consistency of the
// assembled tables (mixed brackets against the hom-connection, vertical
// brackets against the chain map, fiber-degree bookkeeping) is re-derived and
// asserted at build time, and a violation throws std::logic_error.
Algebroid build_vb_algebroid(const TwoRep& t, RingPtr total_ring = nullptr,
                             std::vector<std::string> linear_names = {},
                             std::vector<std::string> core_names = {});

// The two dual presentations of a matched pair over the shared core dual.
struct DualPair {
    RingPtr cstar;  // base ring extended by the core-dual fiber variables

    // Linear generators "sigmaA*(<a>)" (one per A-frame section) followed by
    // core generators "beta<j>^" (one per B-frame section).
    std::shared_ptr<const Algebroid> da;

    // Linear generators "sigmaB*(<b>)" (one per B-frame section) followed by
    // core generators "alpha<m>^" (one per A-frame section).
    std::shared_ptr<const Algebroid> db;

    std::size_t ka = 0;      // rank of A
    std::size_t kb = 0;      // rank of B
    std::size_t rank_c = 0;  // core rank
};

// Build both duals of a matched pair over one shared core-dual ring.  The
// generator pairing between the two sides is checked to be the constant
// nondegenerate block form documented at `pairing`; a deviation throws
// std::logic_error.  Broken pairs flow through so their defects can be
// measured downstream.
DualPair build_dual_algebroids(const MatchedPair& mp);

// A section of either dual, stored densely as one coefficient per generator
// (coefficients in the core-dual ring, linear slots first).
using DSection = SectionVec;

// The fiberwise pairing between sections of the two duals.  On generators it
// is constant: <sigmaA*(a_i), alpha_m^> = -delta_im, <beta_j^, sigmaB*(b_l)>
// = +delta_jl, and zero on the linear/linear and core/core combinations.  It
// extends bilinearly over functions of the total space.
Poly pairing(const DualPair& d, const DSection& phi, const DSection& psi);

// Lie derivative of a section of the second dual along a section of the
// first, characterised by
//   <Y, L_X psi> = Theta_A(X)<Y, psi> - <[X, Y], psi>   for all Y,
// and resolved against the constant generator pairing.
DSection lie_derivative_total(const DualPair& d, const DSection& x,
                              const DSection& psi);

// The flipped variant: a section of the first dual differentiated along a
// section of the second, characterised by
//   <L_Y phi, Z> = Theta_B(Y)<phi, Z> - <phi, [Y, Z]>   for all Z.
DSection lie_derivative_total_flipped(const DualPair& d, const DSection& y,
                                      const DSection& phi);

// Closed-form evaluations of the same derivatives on generator pairs,
// written directly in terms of the matched pair's connections, brackets and
// curvature tensors.  `g` indexes a generator of `da`, `h` one of `db`.
// These exist to be compared against the definitional versions above; the
// two must agree on every generator pair.
DSection closed_lie_total(const DualPair& d, const MatchedPair& mp,
                          std::size_t g, std::size_t h);
DSection closed_lie_total_flipped(const DualPair& d, const MatchedPair& mp,
                                  std::size_t h, std::size_t g);

// The differential of a total-space function, read through one side's anchor
// and converted into a section of the *other* side via the pairing:
//   <phi, cotangent_pullback_da(f)> = Theta_A(phi)(f)   for all phi,
//   <cotangent_pullback_db(f), psi> = Theta_B(psi)(f)   for all psi.
DSection cotangent_pullback_da(const DualPair& d, const Poly& f);
DSection cotangent_pullback_db(const DualPair& d, const Poly& f);

// Pointwise defect of the derivation property tying the two anchors to the
// Lie derivatives (condition B2); identically zero in the tensor argument
// and vanishing on generators exactly when the condition holds:
//   [Theta_A(phi), Theta_B(psi)](f) - Theta_B(L_phi psi)(f)
//     + Theta_A(L_psi phi)(f) - Theta_B(pullback_da(d f))(<phi, psi>).
Poly b2_residual(const DualPair& d, const DSection& phi, const DSection& psi,
                 const Poly& f);

// Pointwise defect of the compatibility between the first dual's bracket and
// the differential induced by the second (condition B1), evaluated as a
// two-form on sections of the second dual:
//   (d[phi1, phi2] - [d phi1, phi2] - [phi1, d phi2])(psi1, psi2).
Poly b1_defect(const DualPair& d, const DSection& phi1, const DSection& phi2,
               const DSection& psi1, const DSection& psi2);

// Evaluate conditions B1, B2 and B3 for a matched pair through its duals.
// B1 runs over ordered generator pairs on each side, B2 over generator pairs
// against coordinate functions plus one deterministically seeded product
// function, B3 over coordinate functions; every nonzero residual is recorded
// with its indices.
Report check_bialgebroid(const MatchedPair& mp);

// Both verdicts side by side.  `agree` records that the matched-pair check
// and the bialgebroid check reached the same verdict; `pass` additionally
// requires both verdicts to be positive.
struct OracleResult {
    Report matched;
    Report bialgebroid;
    bool agree = false;
    bool pass = false;
};

// Run check_matched and check_bialgebroid on the same pair and compare.
OracleResult oracle_equivalence(const MatchedPair& mp);

}  // namespace liedouble
