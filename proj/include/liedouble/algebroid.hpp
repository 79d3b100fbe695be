#pragma once
// Lie algebroids presented over a polynomial ring: a free module of sections
// with named generators, an anchor sending each generator to a polynomial
// vector field, and a structure table of generator brackets.  The same type
// serves plain algebroids over a base and the fibered ones living over total
// spaces, whose generators are graded (linear / core) and whose anchors act
// on fiber variables too.
//
// Nothing is assumed about the table: check_lie_algebroid evaluates the
// antisymmetry, Jacobi, and anchor-compatibility residuals and reports which
// fail, so deliberately broken inputs are first-class citizens.

#include "liedouble/polyring.hpp"
#include "liedouble/report.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace liedouble {

// --------------------------------------------------------------------------
// Polynomial vector fields

// A derivation of the ring, determined by its values on every variable:
// X(f) = sum_w  df/dw * on_var[w].
struct VectorField {
    RingPtr ring;
    std::vector<Poly> on_var;  // one entry per ring variable

    Poly apply(const Poly& f) const;
    bool is_zero() const;
};

VectorField zero_field(const RingPtr& ring);
VectorField coordinate_field(const RingPtr& ring, std::size_t idx);  // d/d(var idx)

VectorField vf_add(const VectorField& x, const VectorField& y);
VectorField vf_sub(const VectorField& x, const VectorField& y);
VectorField vf_scale(const Poly& f, const VectorField& x);
// Commutator [X,Y](f) = X(Y f) - Y(X f), computed on variables.
VectorField vf_bracket(const VectorField& x, const VectorField& y);

// --------------------------------------------------------------------------
// Sections as coefficient vectors over a fixed generator frame

using SectionVec = std::vector<Poly>;

SectionVec zero_section(const RingPtr& ring, std::size_t rank);
SectionVec unit_section(const RingPtr& ring, std::size_t rank, std::size_t i);

SectionVec sv_add(const SectionVec& a, const SectionVec& b);
SectionVec sv_sub(const SectionVec& a, const SectionVec& b);
SectionVec sv_scale(const Poly& f, const SectionVec& a);
bool sv_is_zero(const SectionVec& a);

// --------------------------------------------------------------------------
// Algebroid presentations

enum class GenKind { plain, linear, core };

struct Algebroid {
    RingPtr ring;
    std::size_t rank = 0;
    std::vector<std::string> gen_names;
    std::vector<GenKind> gen_kinds;
    std::vector<VectorField> anchor_vf;  // anchor of each generator
    // structure[i][j] = bracket of generators i and j, as stated; no symmetry
    // is imposed here, the checks measure what the table actually satisfies.
    std::vector<std::vector<SectionVec>> structure;

    SectionVec unit(std::size_t i) const { return unit_section(ring, rank, i); }
};

// Literal equality of presentations: same variables, generator names and
// kinds, anchor fields, and structure tables.
bool operator==(const VectorField& x, const VectorField& y);
bool operator==(const Algebroid& a, const Algebroid& b);

// Plain algebroid whose anchor is given by a rank x num_vars coefficient
// matrix (row i = components of the anchor of generator i).
Algebroid make_algebroid(RingPtr ring, std::size_t rank, std::vector<std::string> gen_names,
                         std::vector<std::vector<Poly>> anchor_matrix,
                         std::vector<std::vector<SectionVec>> structure);

// Anchor of the section s applied to the function f.
Poly anchor_apply(const Algebroid& alg, const SectionVec& s, const Poly& f);
// Anchor of the section s as a vector field.
VectorField anchor_field(const Algebroid& alg, const SectionVec& s);

// Bracket of two coefficient-vector sections, extending the generator table
// by bilinearity and the Leibniz rule in each slot.
SectionVec bracket_sections(const Algebroid& alg, const SectionVec& s, const SectionVec& t);

// Residual families, one condition each:
//   antisymmetry    [e_i,e_j] + [e_j,e_i]                     (i <= j)
//   jacobi          cyclic sum of [e_i,[e_j,e_k]]             (i < j < k)
//   anchor-morphism [rho e_i, rho e_j] - rho([e_i,e_j])       (all i, j)
// Entry indices: (i, j, component) resp. (i, j, k, component), 1-based; the
// anchor family's third index is the ring variable the fields differ on.
Report check_lie_algebroid(const Algebroid& alg);

// Lie derivative along the section a of a dual-frame coefficient vector:
// (L_a alpha)_j = rho(a)(alpha_j) - sum_l alpha_l * [a, e_j]_l.
SectionVec lie_derivative_dual(const Algebroid& alg, const SectionVec& a,
                               const SectionVec& alpha);

// --------------------------------------------------------------------------
// Alternating forms on the generator frame, valued in coefficient vectors

// Entries are stored on strictly increasing index tuples; evaluation at an
// arbitrary tuple sorts it, applies the permutation sign, and returns zero
// on repeated indices.  Degree-0 forms have the single key {}.
struct AForm {
    std::size_t degree = 0;
    std::size_t frame_rank = 0;   // arity of each slot
    std::size_t value_rank = 0;   // length of each value vector
    RingPtr ring;
    std::map<std::vector<std::size_t>, SectionVec> entries;

    void set(std::vector<std::size_t> increasing_key, SectionVec value);
    SectionVec value(const std::vector<std::size_t>& idxs) const;
    // First slot fed with a general section, remaining slots frame indices.
    SectionVec value_section(const SectionVec& first,
                             const std::vector<std::size_t>& rest) const;
};

class Conn;  // connections on auxiliary bundles; see connection.hpp

// Exterior covariant derivative on frame tuples:
//   (d w)(a_1..a_{k+1}) = sum_i (-1)^(i+1) grad_{a_i} w(..no i..)
//                       + sum_{i<j} (-1)^(i+j) w([a_i,a_j], ..no i,j..)
// with 1-based alternating signs; brackets come from the connection's
// algebroid.  Defined alongside Conn.
AForm koszul_differential(const AForm& w, const Conn& conn);

}  // namespace liedouble
