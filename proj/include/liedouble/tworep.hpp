#pragma once
// Two-term representations up to homotopy: an algebroid acting on a pair of
// bundles E0, E1 through a degree-shift map, two connections, and a
// hom-valued curvature 2-form.  Two independent characterizations are
// implemented — the four named residual families, and the square of the
// total degree-1 operator on forms valued in E0 and E1 — so each can serve
// as an oracle for the other.  Duals and change-of-splitting transforms act
// on the raw data without gating on validity: deliberately broken inputs
// must flow through so failure propagation can be observed downstream.

#include "liedouble/algebroid.hpp"
#include "liedouble/connection.hpp"
#include "liedouble/report.hpp"

#include <memory>
#include <vector>

namespace liedouble {

struct TwoRep {
    std::shared_ptr<const Algebroid> alg;  // acting algebroid
    std::size_t r0 = 0;                    // rank of E0
    std::size_t r1 = 0;                    // rank of E1
    PolyMat partial;                       // r1 x r0, the map E0 -> E1
    Conn conn0;                            // on E0
    Conn conn1;                            // on E1
    HomTwoForm R;                          // values map E1 -> E0 (r0 x r1)

    bool operator==(const TwoRep& o) const;
};

TwoRep make_tworep(std::shared_ptr<const Algebroid> alg, PolyMat partial, Conn conn0,
                   Conn conn1, HomTwoForm R);

// Residual families, one condition each, all on frame tuples:
//   chain-map        partial(grad0_a f) - grad1_a(partial f)
//   curvature-e0     curv(conn0)(a,b) - R(a,b) . partial
//   curvature-e1     curv(conn1)(a,b) - partial . R(a,b)
//   curvature-closed exterior derivative of R under the hom connection
Report validate_tworep(const TwoRep& t);

// Independent characterization: builds the total degree-1 operator on forms
// valued in E0 and E1 determined by (partial, conn0, conn1, R) and checks
// that its square kills every frame 0-form and every dual-frame x frame
// 1-form.  Must agree with validate_tworep on honest acting algebroids.
Report structure_operator_check(const TwoRep& t);

// Swap the roles of the two bundles through their duals: partial transposes,
// the connections dualize crosswise, curvature values transpose with a sign.
// An involution.
TwoRep dual_tworep(const TwoRep& t);

// A change of the splitting that presents the same underlying object:
// phi[i][j][l] with i over the acting frame, j over E1, l over E0.
struct SplittingChange {
    std::vector<std::vector<std::vector<Poly>>> phi;

    // Matrix of phi at acting generator i, mapping E1 -> E0 (r0 x r1).
    PolyMat matrix_at(const RingPtr& ring, std::size_t i) const;
};

// New connections absorb partial-composites of phi; the curvature entry
// picks up the hom-connection derivative of phi (from the ORIGINAL pair)
// plus the antisymmetrized phi.partial.phi square term.  Transforming by
// phi then by -phi restores the original.
TwoRep change_splitting(const TwoRep& t, const SplittingChange& phi);

}  // namespace liedouble
