#pragma once
// Matched pairs of 2-term representations: two algebroids acting on each
// other and on a shared core bundle.  The checker evaluates the nine named
// compatibility conditions M1..M9 on frame tuples; the core bundle then
// carries an induced algebroid presentation and a linear Poisson bracket on
// the fiberwise-polynomial functions of its dual.
//
// Index conventions, fixed throughout:
//   repA acts along A and shifts into B:  partial = map C -> B (k_B x k_C),
//     conn0 = connAC (A-connection on C), conn1 = connAB (on B), R = R_A.
//   repB acts along B and shifts into A:  partial = map C -> A (k_A x k_C),
//     conn0 = connBC, conn1 = connBA, R = R_B.

#include "liedouble/algebroid.hpp"
#include "liedouble/connection.hpp"
#include "liedouble/report.hpp"
#include "liedouble/tworep.hpp"

#include <memory>

namespace liedouble {

struct MatchedPair {
    std::shared_ptr<const Algebroid> A, B;
    std::size_t rank_c = 0;
    TwoRep repA, repB;
    // Frame names for the core bundle; empty means c1..cK.  Builders that
    // know where the core came from set these so the induced presentation
    // compares literally equal to its source.
    std::vector<std::string> core_names;

    const Conn& connAC() const { return repA.conn0; }
    const Conn& connAB() const { return repA.conn1; }
    const Conn& connBC() const { return repB.conn0; }
    const Conn& connBA() const { return repB.conn1; }
    const PolyMat& partialB() const { return repA.partial; }  // C -> B
    const PolyMat& partialA() const { return repB.partial; }  // C -> A
    const HomTwoForm& RA() const { return repA.R; }
    const HomTwoForm& RB() const { return repB.R; }
    SectionVec partialA_col(std::size_t l) const;  // image of core frame l in A
    SectionVec partialB_col(std::size_t l) const;  // image of core frame l in B
};

// Shape validation only; deliberately broken data must construct fine.
MatchedPair make_matched_pair(std::shared_ptr<const Algebroid> A,
                              std::shared_ptr<const Algebroid> B, std::size_t rank_c,
                              TwoRep repA, TwoRep repB);

// Conditions M1..M9 evaluated on all frame tuples, reported in order.
Report check_matched(const MatchedPair& mp);

// General-section evaluators for the two conditions whose statements are
// tensorial in extra slots; used by the tensoriality property checks.
SectionVec m6_residual(const MatchedPair& mp, std::size_t i, std::size_t j,
                       const SectionVec& c);
SectionVec m9_residual(const MatchedPair& mp, const SectionVec& a1, const SectionVec& a2,
                       const SectionVec& b1, const SectionVec& b2);

// Checks that m6 is function-linear in its core slot and m9 in all four
// slots, on deterministic pseudo-random multiples.  Meaningful on pairs
// whose anchor conditions hold (the defect of m6-linearity is an M5 term).
bool verify_tensoriality(const MatchedPair& mp, unsigned seed);

// Core presentation: anchor = anchor of A after the shift into A; bracket
// table row l, column m = connAC along the A-image of c_l applied to c_m,
// minus connBC along the B-image of c_m applied to c_l.  The raw table is
// returned as stated: its antisymmetry defect is exactly the M2 residual.
Algebroid core_algebroid(const MatchedPair& mp);

// The function ring of the dual of the core bundle: base variables plus one
// fiber variable per core frame element.  Shared by the big total-space
// builds so that the two verification routes compare polynomials literally.
RingPtr core_dual_ring(const RingPtr& base, std::size_t rank_c);

// Linear function on the dual of the core determined by a core section.
Poly linear_function(const RingPtr& cstar, const SectionVec& core_section);

// Linear Poisson bracket on fiberwise-polynomial functions of the core dual:
// fiber/fiber entries are linear functions of the core bracket table,
// fiber/base entries push the core anchor, base/base entries vanish.  The
// evaluator extends the variable table as a biderivation.
class PoissonStructure {
  public:
    PoissonStructure(RingPtr cstar, std::vector<std::vector<Poly>> var_table);

    const RingPtr& ring() const { return cstar_; }
    const Poly& var_bracket(std::size_t v, std::size_t w) const {
        return table_.at(v).at(w);
    }
    Poly bracket(const Poly& f, const Poly& g) const;

  private:
    RingPtr cstar_;
    std::vector<std::vector<Poly>> table_;  // num_vars x num_vars
};

PoissonStructure poisson_on_cstar(const MatchedPair& mp);

// Core-free matched pair out of two algebroids acting on each other.
MatchedPair vacant_from_representations(std::shared_ptr<const Algebroid> A,
                                        std::shared_ptr<const Algebroid> B, const Conn& connAB,
                                        const Conn& connBA);

// Simultaneous change of splitting: phi[i][j][l] with i over the A frame,
// j over the B frame, l over the core frame; repA transforms by phi read
// with the A slot acting, repB by the transposed reading.  The check_matched
// verdict is invariant and the core presentation is literally unchanged.
MatchedPair transform_matched(const MatchedPair& mp,
                              const std::vector<std::vector<std::vector<Poly>>>& phi);

}  // namespace liedouble
