#pragma once
// Connections along an algebroid on auxiliary polynomial bundles, given by
// Christoffel tables: grad over generator e_i applied to bundle frame f_j is
// sum_l gamma(i,j,l) f_l.  Everything downstream needs only this data plus
// matrix bookkeeping: curvature, the dual connection, the induced connection
// on hom bundles, and the induced connection on antisymmetric-square-dual
// tensor bundles.

#include "liedouble/algebroid.hpp"

#include <array>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace liedouble {

// --------------------------------------------------------------------------
// Polynomial matrices, M[row][col]

using PolyMat = std::vector<std::vector<Poly>>;

PolyMat zero_mat(const RingPtr& ring, std::size_t rows, std::size_t cols);
PolyMat identity_mat(const RingPtr& ring, std::size_t n);
PolyMat mat_add(const PolyMat& a, const PolyMat& b);
PolyMat mat_sub(const PolyMat& a, const PolyMat& b);
// The optional ring disambiguates products whose factors have no entries
// (rank-0 bundles); otherwise it is inferred from the operands.
PolyMat mat_mul(const PolyMat& a, const PolyMat& b, RingPtr ring = nullptr);
// Product with the result shape stated explicitly; needed when a factor has
// zero rows, which erases the inner/outer dimensions from the representation.
PolyMat mat_mul_shaped(const PolyMat& a, const PolyMat& b, const RingPtr& ring,
                       std::size_t rows, std::size_t cols);
PolyMat mat_neg(const PolyMat& a);
PolyMat mat_scale(const Poly& f, const PolyMat& a);
PolyMat mat_transpose(const PolyMat& a);
bool mat_is_zero(const PolyMat& a);
// Matrix times coefficient column.
SectionVec mat_apply(const PolyMat& m, const SectionVec& v, RingPtr ring = nullptr);

// --------------------------------------------------------------------------
// Connections

class Conn {
  public:
    // christoffel[i][j][l]: generator index i, bundle frame j, output frame l.
    Conn(std::shared_ptr<const Algebroid> alg, std::size_t bundle_rank,
         std::vector<std::vector<std::vector<Poly>>> christoffel);

    static Conn zero(std::shared_ptr<const Algebroid> alg, std::size_t bundle_rank);

    const std::shared_ptr<const Algebroid>& alg() const { return alg_; }
    std::size_t bundle_rank() const { return rank_; }
    const Poly& gamma(std::size_t i, std::size_t j, std::size_t l) const {
        return christoffel_.at(i).at(j).at(l);
    }
    // A_i[l][j] = gamma(i,j,l), so grad over e_i acts on coefficient columns
    // as rho(e_i) + A_i.
    PolyMat action_matrix(std::size_t i) const;

    bool operator==(const Conn& o) const;

  private:
    std::shared_ptr<const Algebroid> alg_;
    std::size_t rank_;
    std::vector<std::vector<std::vector<Poly>>> christoffel_;
};

// grad over the section a applied to the coefficient vector u:
// result_l = rho(a)(u_l) + sum_{i,j} a_i u_j gamma(i,j,l).
SectionVec conn_apply(const Conn& conn, const SectionVec& a, const SectionVec& u);

// --------------------------------------------------------------------------
// Hom-valued 2-forms on the generator frame

// Antisymmetric in the two frame slots; entry (i<j) holds the matrix of the
// bundle map at (e_i, e_j), rows = destination frame, cols = source frame.
struct HomTwoForm {
    std::size_t frame_rank = 0;
    std::size_t dst_rank = 0;
    std::size_t src_rank = 0;
    RingPtr ring;
    std::map<std::pair<std::size_t, std::size_t>, PolyMat> entries;  // keys i < j

    void set(std::size_t i, std::size_t j, PolyMat m);  // requires i < j
    PolyMat value(std::size_t i, std::size_t j) const;  // signed, zero on i == j
    bool is_zero() const;
    bool operator==(const HomTwoForm& o) const;
};

HomTwoForm zero_hom_two_form(const RingPtr& ring, std::size_t frame_rank, std::size_t dst_rank,
                             std::size_t src_rank);

// R(e_i,e_j) = grad_i grad_j - grad_j grad_i - grad_{[e_i,e_j]} on the frame.
HomTwoForm curvature(const Conn& conn);

// Dual connection on the dual frame: gamma'(i,j,l) = -gamma(i,l,j).
Conn dual_connection(const Conn& conn);

// Induced connection on Hom(src bundle of conn1, dst bundle of conn0):
// grad(M) = rho(M) + A0 M - M A1 on matrices in frame coordinates.  Frames
// are matrix units, flattened row-major: (dst p, src q) -> p * src_rank + q.
Conn hom_connection(const Conn& conn1, const Conn& conn0);

// Strictly-increasing pair enumeration used for antisymmetric squares:
// (0,1), (0,2), ..., (1,2), ... over {0..n-1}.
std::size_t pair_count(std::size_t n);
std::size_t pair_index(std::size_t l, std::size_t m, std::size_t n);  // l < m
std::pair<std::size_t, std::size_t> pair_unindex(std::size_t idx, std::size_t n);

// Induced connection on (antisymmetric square of the conn1 bundle's dual)
// tensor (conn0 bundle): frame elements are indexed by ((l<m), p), flattened
// as pair_index(l,m) * r0 + p.  Defined by the Leibniz rule
//   (grad T)(f_u, f_v) = grad0(T(f_u,f_v)) - T(grad1 f_u, f_v) - T(f_u, grad1 f_v).
Conn wedge2dual_tensor(const Conn& conn1, const Conn& conn0);

}  // namespace liedouble
