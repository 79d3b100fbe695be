#pragma once
// Exact sparse multivariate polynomials over the rationals, on a fixed
// variable ring that separates base coordinates from fiber coordinates.
//
// Fiber variables are grouped by the bundle they coordinatize and carry
// weight 1; a polynomial is "fiberwise linear" when every term has total
// fiber weight <= 1 and a "pullback" when every term has weight 0.  All
// downstream geometry (anchors, structure functions, Christoffel entries,
// functions on total spaces) lives in these rings.  Coefficients are
// arbitrary-precision rationals; nothing here ever touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liedouble {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// --------------------------------------------------------------------------
// Variable rings

struct FiberGroup {
    std::string tag;  // name of the bundle these fiber coordinates belong to
    std::vector<std::string> vars;
};

class VarRing {
  public:
    // x1..xn, no fiber variables.
    static std::shared_ptr<const VarRing> make_base(std::size_t dim);
    static std::shared_ptr<const VarRing> make_base(std::vector<std::string> names);

    // A new ring extending this one by a trailing fiber group; *this is
    // unchanged.  Names must not collide with existing variables.
    std::shared_ptr<const VarRing> with_fiber_group(std::string tag,
                                                    std::vector<std::string> vars) const;

    std::size_t num_vars() const { return names_.size(); }
    std::size_t num_base() const { return num_base_; }
    bool is_fiber(std::size_t idx) const { return idx >= num_base_; }
    const std::string& var_name(std::size_t idx) const { return names_.at(idx); }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::vector<FiberGroup>& fiber_groups() const { return groups_; }

    std::optional<std::size_t> find(std::string_view name) const;

    // True when other's variables are a prefix of this ring's variables, so
    // polynomials over `other` pull back here by padding exponents.
    bool extends(const VarRing& other) const;
    bool same_vars(const VarRing& other) const;

  private:
    std::vector<std::string> names_;
    std::size_t num_base_ = 0;
    std::vector<FiberGroup> groups_;
};

using RingPtr = std::shared_ptr<const VarRing>;

// Two polynomials may be combined when their rings are the same object or
// have identical variable lists.
bool same_ring(const RingPtr& a, const RingPtr& b);

// --------------------------------------------------------------------------
// Polynomials

// Graded lexicographic order on exponent vectors: first by total degree,
// then earlier variables dominate (x1^2 > x1*x2 > x2^2).  Canonical printing
// walks terms in descending order.
struct GradedLexLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

class Poly {
  public:
    Poly() = default;  // invalid until given a ring; only for containers
    explicit Poly(RingPtr ring);                    // zero
    Poly(RingPtr ring, const Rational& constant);   // constant
    static Poly var(RingPtr ring, std::size_t idx); // single variable

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t num_terms() const { return terms_.size(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rational& c) const;
    Poly pow(unsigned e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // d/d(var idx)
    Poly partial(std::size_t idx) const;

    // Exact evaluation at an integer point (one entry per ring variable).
    Rational eval(const std::vector<long long>& point) const;

    // Pull back along a ring extension (new_ring->extends(*ring()) must hold).
    Poly lifted(const RingPtr& new_ring) const;

    unsigned total_degree() const;       // 0 for the zero polynomial
    unsigned degree_in(std::size_t idx) const;
    unsigned max_fiber_weight() const;   // largest fiber weight among terms
    bool is_pullback() const { return max_fiber_weight() == 0; }
    bool is_fiberwise_linear() const { return max_fiber_weight() <= 1; }

    // Canonical form: terms descending in graded lex order, coefficients in
    // lowest terms, monomial factors in variable order.  parse(print(p))
    // reproduces p and printing is a fixed point on its own output.
    std::string print() const;

    // Iteration for algorithms that need raw terms (exponents, coefficient).
    const std::map<std::vector<unsigned>, Rational, GradedLexLess>& terms() const {
        return terms_;
    }
    void add_term(const std::vector<unsigned>& exps, const Rational& c);

  private:
    RingPtr ring_;
    std::map<std::vector<unsigned>, Rational, GradedLexLess> terms_;
};

// --------------------------------------------------------------------------
// Parsing

// Raised on malformed input; `offset` is the byte position in the input.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, const std::string& message);
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

// Grammar (whitespace insignificant):
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' nat)?
//   atom     := rational | var | '(' expr ')'
//   rational := nat ('/' nat)?
// Unknown variables and syntax errors raise ParseError with a byte offset.
Poly parse_expr(const RingPtr& ring, std::string_view text);

// --------------------------------------------------------------------------
// Witness search

struct Witness {
    std::vector<long long> point;  // one entry per ring variable
    Rational value;                // the (nonzero) evaluation at that point
};

// Deterministic grid search over integer points: shells of increasing
// max-norm, each shell enumerated lexicographically with every axis running
// downward from +r to -r (this tie-break makes x1*x2 witness at (1,1)).
// Empty result exactly when the polynomial is zero.
std::optional<Witness> nonzero_witness(const Poly& p);

}  // namespace liedouble
