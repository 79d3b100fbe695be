#pragma once
// The tangent double: out of one algebroid and one linear connection on it,
// build the canonical matched pair in which the coordinate tangent algebroid
// and the given algebroid act on each other, with the algebroid itself as
// the core.  This is the calibration fixture for the whole checker: it must
// come out matched whenever the input brackets satisfy the algebroid
// axioms, whatever the connection.

#include "liedouble/algebroid.hpp"
#include "liedouble/connection.hpp"
#include "liedouble/matched.hpp"

#include <memory>

namespace liedouble {

// Coordinate tangent algebroid: one generator per ring variable, identity
// anchor, vanishing structure table.
Algebroid tm_algebroid(const RingPtr& ring);

// The two connections induced along the algebroid by a linear connection
// nabla on it (nabla acts along the tangent algebroid, bundle = alg):
//   on the algebroid itself:  e acting on e' = [e, e'] + nabla_{rho(e')} e
//   on the tangent:           e acting on X  = rho(nabla_X e) + [rho(e), X]
// Both assemblies are re-derived from the defining formulas on scaled frame
// sections at build time and cross-checked against the stored coefficients.
struct BasicConnections {
    Conn on_alg;
    Conn on_tangent;
};

BasicConnections basic_connections(std::shared_ptr<const Algebroid> alg, const Conn& nabla);

// Curvature correction of the induced pair: a 2-form on the algebroid frame
// valued in maps from the tangent into the algebroid,
//   (e1, e2, X) |-> - nabla_X [e1,e2] + [nabla_X e1, e2] + [e1, nabla_X e2]
//                   + nabla_{e2 . X} e1 - nabla_{e1 . X} e2
// where e . X is the induced tangent action.
HomTwoForm basic_curvature(const std::shared_ptr<const Algebroid>& alg, const Conn& nabla,
                           const BasicConnections& basic);

// The matched pair of the coordinate tangent algebroid with alg: the core is
// alg itself, the tangent side acts by nabla with its curvature, the
// algebroid side by the induced pair with the curvature correction.  The
// shifts are the identity into the algebroid and the anchor into the
// tangent.  nabla must act along tm_algebroid over the same ring.
MatchedPair tangent_double_matched_pair(std::shared_ptr<const Algebroid> alg,
                                        const Conn& nabla);

}  // namespace liedouble
