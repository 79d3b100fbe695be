#pragma once
// Shared builders for the test suites: small algebroids, random polynomial
// data, and parsing shorthands.

#include "liedouble/algebroid.hpp"
#include "liedouble/connection.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace testutil {

using namespace liedouble;

inline Poly P(const RingPtr& r, const std::string& s) { return parse_expr(r, s); }

inline SectionVec SV(const RingPtr& r, const std::vector<std::string>& comps) {
    SectionVec v;
    for (const auto& s : comps) v.push_back(parse_expr(r, s));
    return v;
}

// Tangent-style algebroid built by hand: identity anchor, zero structure.
inline std::shared_ptr<Algebroid> coordinate_algebroid(const RingPtr& ring) {
    const std::size_t n = ring->num_vars();
    std::vector<std::vector<Poly>> anchor(n, std::vector<Poly>(n, Poly(ring)));
    for (std::size_t i = 0; i < n; ++i) anchor[i][i] = Poly(ring, Rational(1));
    std::vector<std::vector<SectionVec>> structure(
        n, std::vector<SectionVec>(n, zero_section(ring, n)));
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("d" + std::to_string(i));
    return std::make_shared<Algebroid>(
        make_algebroid(ring, n, std::move(names), std::move(anchor), std::move(structure)));
}

// Constant-structure rotation algebra over any base: zero anchor,
// [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
inline std::shared_ptr<Algebroid> rotation_algebroid(const RingPtr& ring) {
    std::vector<std::vector<Poly>> anchor(3, std::vector<Poly>(ring->num_vars(), Poly(ring)));
    std::vector<std::vector<SectionVec>> st(3, std::vector<SectionVec>(3, zero_section(ring, 3)));
    Poly one(ring, Rational(1));
    st[0][1][2] = one;   // [e1,e2] = e3
    st[1][0][2] = -one;
    st[1][2][0] = one;   // [e2,e3] = e1
    st[2][1][0] = -one;
    st[2][0][1] = one;   // [e3,e1] = e2
    st[0][2][1] = -one;
    return std::make_shared<Algebroid>(
        make_algebroid(ring, 3, {"e1", "e2", "e3"}, std::move(anchor), std::move(st)));
}

inline Poly random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 3,
                        unsigned max_exp = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> expd(0, max_exp);
    Poly p(ring);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<unsigned> e(ring->num_vars());
        for (auto& x : e) x = expd(rng);
        p.add_term(e, Rational(coeff(rng)));
    }
    return p;
}

inline SectionVec random_section(const RingPtr& ring, std::size_t rank, std::mt19937& rng) {
    SectionVec v;
    for (std::size_t i = 0; i < rank; ++i) v.push_back(random_poly(ring, rng));
    return v;
}

inline PolyMat random_mat(const RingPtr& ring, std::size_t rows, std::size_t cols,
                          std::mt19937& rng) {
    PolyMat m = zero_mat(ring, rows, cols);
    for (auto& row : m)
        for (auto& p : row) p = random_poly(ring, rng);
    return m;
}

inline Conn random_conn(std::shared_ptr<const Algebroid> alg, std::size_t rank,
                        std::mt19937& rng) {
    std::vector<std::vector<std::vector<Poly>>> table(
        alg->rank,
        std::vector<std::vector<Poly>>(rank, std::vector<Poly>(rank, Poly(alg->ring))));
    for (auto& block : table)
        for (auto& row : block)
            for (auto& p : row) p = random_poly(alg->ring, rng, 2, 1);
    return Conn(std::move(alg), rank, std::move(table));
}

}  // namespace testutil
