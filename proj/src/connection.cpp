#include "liedouble/connection.hpp"

#include <functional>

namespace liedouble {

// --------------------------------------------------------------------------
// Matrices

PolyMat zero_mat(const RingPtr& ring, std::size_t rows, std::size_t cols) {
    return PolyMat(rows, std::vector<Poly>(cols, Poly(ring)));
}

PolyMat identity_mat(const RingPtr& ring, std::size_t n) {
    PolyMat m = zero_mat(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly(ring, Rational(1));
    return m;
}

static void check_same_shape(const PolyMat& a, const PolyMat& b) {
    if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
        throw std::invalid_argument("matrix shape mismatch");
}

PolyMat mat_add(const PolyMat& a, const PolyMat& b) {
    check_same_shape(a, b);
    PolyMat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

PolyMat mat_sub(const PolyMat& a, const PolyMat& b) {
    check_same_shape(a, b);
    PolyMat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b, RingPtr ring) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    for (const auto& row : a)
        if (row.size() != k) throw std::invalid_argument("matrix product shape mismatch");
    if (!ring) {
        for (const auto& row : a)
            for (const auto& p : row) ring = p.ring();
        for (const auto& row : b)
            for (const auto& p : row) ring = p.ring();
    }
    if (!ring) {
        if (m == 0) return PolyMat(n);  // n rows of width 0
        if (n == 0) return PolyMat{};
        throw std::invalid_argument("cannot infer ring of empty product");
    }
    PolyMat r = zero_mat(ring, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < k; ++s) {
            if (a[i][s].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][s] * b[s][j];
        }
    return r;
}

PolyMat mat_mul_shaped(const PolyMat& a, const PolyMat& b, const RingPtr& ring,
                       std::size_t rows, std::size_t cols) {
    if (a.size() != rows) throw std::invalid_argument("shaped product rows");
    PolyMat r = zero_mat(ring, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t s = 0; s < a[i].size(); ++s) {
            if (a[i][s].is_zero()) continue;
            if (b[s].size() != cols) throw std::invalid_argument("shaped product cols");
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][s] * b[s][j];
        }
    return r;
}

PolyMat mat_neg(const PolyMat& a) {
    PolyMat r = a;
    for (auto& row : r)
        for (auto& p : row) p = -p;
    return r;
}

PolyMat mat_scale(const Poly& f, const PolyMat& a) {
    PolyMat r = a;
    for (auto& row : r)
        for (auto& p : row) p *= f;
    return r;
}

PolyMat mat_transpose(const PolyMat& a) {
    if (a.empty()) return a;
    PolyMat r(a[0].size(), std::vector<Poly>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

bool mat_is_zero(const PolyMat& a) {
    for (const auto& row : a)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

SectionVec mat_apply(const PolyMat& m, const SectionVec& v, RingPtr ring) {
    if (!m.empty() && m[0].size() != v.size())
        throw std::invalid_argument("matrix/vector shape mismatch");
    if (m.empty()) return SectionVec{};
    if (!ring) {
        for (const auto& row : m)
            for (const auto& p : row) ring = p.ring();
        for (const auto& p : v) ring = p.ring();
    }
    if (!ring) throw std::invalid_argument("cannot infer ring of empty product");
    SectionVec r(m.size(), Poly(ring));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

// --------------------------------------------------------------------------
// Connections

Conn::Conn(std::shared_ptr<const Algebroid> alg, std::size_t bundle_rank,
           std::vector<std::vector<std::vector<Poly>>> christoffel)
    : alg_(std::move(alg)), rank_(bundle_rank), christoffel_(std::move(christoffel)) {
    if (!alg_) throw std::invalid_argument("null algebroid");
    if (christoffel_.size() != alg_->rank) throw std::invalid_argument("christoffel depth");
    for (const auto& block : christoffel_) {
        if (block.size() != rank_) throw std::invalid_argument("christoffel rows");
        for (const auto& row : block) {
            if (row.size() != rank_) throw std::invalid_argument("christoffel cols");
            for (const auto& p : row)
                if (!same_ring(p.ring(), alg_->ring))
                    throw std::invalid_argument("christoffel entry off-ring");
        }
    }
}

Conn Conn::zero(std::shared_ptr<const Algebroid> alg, std::size_t bundle_rank) {
    const RingPtr ring = alg->ring;
    std::vector<std::vector<std::vector<Poly>>> table(
        alg->rank, std::vector<std::vector<Poly>>(bundle_rank,
                                                  std::vector<Poly>(bundle_rank, Poly(ring))));
    return Conn(std::move(alg), bundle_rank, std::move(table));
}

PolyMat Conn::action_matrix(std::size_t i) const {
    PolyMat a = zero_mat(alg_->ring, rank_, rank_);
    for (std::size_t j = 0; j < rank_; ++j)
        for (std::size_t l = 0; l < rank_; ++l) a[l][j] = gamma(i, j, l);
    return a;
}

bool Conn::operator==(const Conn& o) const {
    return rank_ == o.rank_ && *alg_ == *o.alg_ && christoffel_ == o.christoffel_;
}

SectionVec conn_apply(const Conn& conn, const SectionVec& a, const SectionVec& u) {
    const Algebroid& alg = *conn.alg();
    if (a.size() != alg.rank || u.size() != conn.bundle_rank())
        throw std::invalid_argument("conn_apply shape mismatch");
    SectionVec r(conn.bundle_rank(), Poly(alg.ring));
    for (std::size_t l = 0; l < conn.bundle_rank(); ++l) r[l] = anchor_apply(alg, a, u[l]);
    for (std::size_t i = 0; i < alg.rank; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < conn.bundle_rank(); ++j) {
            if (u[j].is_zero()) continue;
            Poly c = a[i] * u[j];
            for (std::size_t l = 0; l < conn.bundle_rank(); ++l) {
                const Poly& g = conn.gamma(i, j, l);
                if (!g.is_zero()) r[l] += c * g;
            }
        }
    }
    return r;
}

// --------------------------------------------------------------------------
// Hom-valued 2-forms

void HomTwoForm::set(std::size_t i, std::size_t j, PolyMat m) {
    if (i >= j || j >= frame_rank) throw std::invalid_argument("2-form key");
    if (m.size() != dst_rank) throw std::invalid_argument("2-form value rows");
    for (const auto& row : m)
        if (row.size() != src_rank) throw std::invalid_argument("2-form value cols");
    if (mat_is_zero(m))
        entries.erase({i, j});
    else
        entries[{i, j}] = std::move(m);
}

PolyMat HomTwoForm::value(std::size_t i, std::size_t j) const {
    if (i >= frame_rank || j >= frame_rank) throw std::invalid_argument("2-form index");
    if (i == j) return zero_mat(ring, dst_rank, src_rank);
    const bool flip = i > j;
    auto it = entries.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == entries.end()) return zero_mat(ring, dst_rank, src_rank);
    return flip ? mat_neg(it->second) : it->second;
}

bool HomTwoForm::is_zero() const { return entries.empty(); }

bool HomTwoForm::operator==(const HomTwoForm& o) const {
    return frame_rank == o.frame_rank && dst_rank == o.dst_rank && src_rank == o.src_rank &&
           entries == o.entries;
}

HomTwoForm zero_hom_two_form(const RingPtr& ring, std::size_t frame_rank, std::size_t dst_rank,
                             std::size_t src_rank) {
    HomTwoForm f;
    f.frame_rank = frame_rank;
    f.dst_rank = dst_rank;
    f.src_rank = src_rank;
    f.ring = ring;
    return f;
}

HomTwoForm curvature(const Conn& conn) {
    const Algebroid& alg = *conn.alg();
    const std::size_t r = conn.bundle_rank();
    HomTwoForm out = zero_hom_two_form(alg.ring, alg.rank, r, r);
    for (std::size_t i = 0; i < alg.rank; ++i)
        for (std::size_t j = i + 1; j < alg.rank; ++j) {
            PolyMat m = zero_mat(alg.ring, r, r);
            const SectionVec ei = alg.unit(i), ej = alg.unit(j);
            for (std::size_t q = 0; q < r; ++q) {
                SectionVec uq = unit_section(alg.ring, r, q);
                SectionVec v = conn_apply(conn, ei, conn_apply(conn, ej, uq));
                v = sv_sub(v, conn_apply(conn, ej, conn_apply(conn, ei, uq)));
                v = sv_sub(v, conn_apply(conn, alg.structure[i][j], uq));
                for (std::size_t l = 0; l < r; ++l) m[l][q] = v[l];
            }
            out.set(i, j, std::move(m));
        }
    return out;
}

Conn dual_connection(const Conn& conn) {
    const std::size_t k = conn.alg()->rank;
    const std::size_t r = conn.bundle_rank();
    std::vector<std::vector<std::vector<Poly>>> table(
        k, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r, Poly(conn.alg()->ring))));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t l = 0; l < r; ++l) table[i][j][l] = -conn.gamma(i, l, j);
    return Conn(conn.alg(), r, std::move(table));
}

static void check_same_algebroid(const Conn& a, const Conn& b) {
    if (a.alg() != b.alg() && !(*a.alg() == *b.alg()))
        throw std::invalid_argument("connections act along different algebroids");
}

Conn hom_connection(const Conn& conn1, const Conn& conn0) {
    check_same_algebroid(conn1, conn0);
    const RingPtr ring = conn0.alg()->ring;
    const std::size_t k = conn0.alg()->rank;
    const std::size_t r0 = conn0.bundle_rank();
    const std::size_t r1 = conn1.bundle_rank();
    const std::size_t n = r0 * r1;
    std::vector<std::vector<std::vector<Poly>>> table(
        k, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(ring))));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t p = 0; p < r0; ++p)
            for (std::size_t q = 0; q < r1; ++q) {
                auto& row = table[i][p * r1 + q];
                for (std::size_t l = 0; l < r0; ++l) row[l * r1 + q] += conn0.gamma(i, p, l);
                for (std::size_t m = 0; m < r1; ++m) row[p * r1 + m] -= conn1.gamma(i, m, q);
            }
    return Conn(conn0.alg(), n, std::move(table));
}

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::size_t pair_index(std::size_t l, std::size_t m, std::size_t n) {
    if (l >= m || m >= n) throw std::invalid_argument("pair index");
    return l * n - l * (l + 1) / 2 + (m - l - 1);
}

std::pair<std::size_t, std::size_t> pair_unindex(std::size_t idx, std::size_t n) {
    for (std::size_t l = 0; l + 1 < n; ++l) {
        std::size_t width = n - l - 1;
        if (idx < width) return {l, l + 1 + idx};
        idx -= width;
    }
    throw std::invalid_argument("pair index out of range");
}

Conn wedge2dual_tensor(const Conn& conn1, const Conn& conn0) {
    check_same_algebroid(conn1, conn0);
    const RingPtr ring = conn0.alg()->ring;
    const std::size_t k = conn0.alg()->rank;
    const std::size_t r0 = conn0.bundle_rank();
    const std::size_t r1 = conn1.bundle_rank();
    const std::size_t n = pair_count(r1) * r0;
    std::vector<std::vector<std::vector<Poly>>> table(
        k, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(ring))));
    for (std::size_t i = 0; i < k; ++i) {
        const SectionVec ei_a = conn0.alg()->unit(i);
        // grad1 of each source frame element, reused across basis tensors.
        std::vector<SectionVec> d1(r1);
        for (std::size_t u = 0; u < r1; ++u)
            d1[u] = conn_apply(conn1, ei_a, unit_section(ring, r1, u));
        for (std::size_t l = 0; l < r1; ++l)
            for (std::size_t m = l + 1; m < r1; ++m)
                for (std::size_t p = 0; p < r0; ++p) {
                    auto& row = table[i][pair_index(l, m, r1) * r0 + p];
                    for (std::size_t u = 0; u < r1; ++u)
                        for (std::size_t v = u + 1; v < r1; ++v) {
                            // value of (grad T)(f_u, f_v) on the f_s frame
                            SectionVec val(r0, Poly(ring));
                            if (u == l && v == m)
                                for (std::size_t s = 0; s < r0; ++s)
                                    val[s] += conn0.gamma(i, p, s);
                            // minus T(grad1 f_u, f_v) and T(f_u, grad1 f_v)
                            Poly c(ring);
                            if (v == m) c += d1[u][l];
                            if (v == l) c -= d1[u][m];
                            if (u == l) c += d1[v][m];
                            if (u == m) c -= d1[v][l];
                            val[p] -= c;
                            for (std::size_t s = 0; s < r0; ++s)
                                row[pair_index(u, v, r1) * r0 + s] += val[s];
                        }
                }
    }
    return Conn(conn0.alg(), n, std::move(table));
}

// --------------------------------------------------------------------------
// Exterior covariant derivative (declared in algebroid.hpp)

namespace {

void for_each_combo(std::size_t n, std::size_t k,
                    const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (k > n) return;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        visit(c);
        // advance to the next increasing tuple
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (c[i] + (k - i) < n) {
                ++c[i];
                for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

}  // namespace

AForm koszul_differential(const AForm& w, const Conn& conn) {
    const Algebroid& alg = *conn.alg();
    if (w.frame_rank != alg.rank || w.value_rank != conn.bundle_rank() ||
        !same_ring(w.ring, alg.ring))
        throw std::invalid_argument("koszul_differential shape mismatch");
    AForm out;
    out.degree = w.degree + 1;
    out.frame_rank = w.frame_rank;
    out.value_rank = w.value_rank;
    out.ring = w.ring;
    for_each_combo(alg.rank, w.degree + 1, [&](const std::vector<std::size_t>& key) {
        SectionVec acc = zero_section(w.ring, w.value_rank);
        for (std::size_t i = 0; i < key.size(); ++i) {
            std::vector<std::size_t> rest;
            for (std::size_t t = 0; t < key.size(); ++t)
                if (t != i) rest.push_back(key[t]);
            SectionVec inner = w.value(rest);
            SectionVec term = conn_apply(conn, alg.unit(key[i]), inner);
            if (i % 2 == 1)
                acc = sv_sub(acc, term);  // (-1)^(i+1) with 1-based i
            else
                acc = sv_add(acc, term);
        }
        for (std::size_t i = 0; i < key.size(); ++i)
            for (std::size_t j = i + 1; j < key.size(); ++j) {
                std::vector<std::size_t> rest;
                for (std::size_t t = 0; t < key.size(); ++t)
                    if (t != i && t != j) rest.push_back(key[t]);
                SectionVec term =
                    w.value_section(alg.structure[key[i]][key[j]], rest);
                // (-1)^(i+j) with 1-based positions: i+1 + j+1 even iff i+j even
                if ((i + j) % 2 == 0)
                    acc = sv_add(acc, term);
                else
                    acc = sv_sub(acc, term);
            }
        out.set(key, std::move(acc));
    });
    return out;
}

}  // namespace liedouble
