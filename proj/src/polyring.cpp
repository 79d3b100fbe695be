#include "liedouble/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace liedouble {

// --------------------------------------------------------------------------
// VarRing

std::shared_ptr<const VarRing> VarRing::make_base(std::size_t dim) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (std::size_t i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
    return make_base(std::move(names));
}

std::shared_ptr<const VarRing> VarRing::make_base(std::vector<std::string> names) {
    auto ring = std::make_shared<VarRing>();
    ring->names_ = std::move(names);
    ring->num_base_ = ring->names_.size();
    for (std::size_t i = 0; i < ring->names_.size(); ++i)
        for (std::size_t j = i + 1; j < ring->names_.size(); ++j)
            if (ring->names_[i] == ring->names_[j])
                throw std::invalid_argument("duplicate variable name " + ring->names_[i]);
    return ring;
}

std::shared_ptr<const VarRing> VarRing::with_fiber_group(
    std::string tag, std::vector<std::string> vars) const {
    auto ring = std::make_shared<VarRing>(*this);
    for (const auto& v : vars)
        if (ring->find(v))
            throw std::invalid_argument("fiber variable name collides: " + v);
    for (const auto& v : vars) ring->names_.push_back(v);
    ring->groups_.push_back(FiberGroup{std::move(tag), std::move(vars)});
    return ring;
}

std::optional<std::size_t> VarRing::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool VarRing::extends(const VarRing& other) const {
    if (other.names_.size() > names_.size()) return false;
    return std::equal(other.names_.begin(), other.names_.end(), names_.begin());
}

bool VarRing::same_vars(const VarRing& other) const {
    return names_ == other.names_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_vars(*b);
}

// --------------------------------------------------------------------------
// Poly

bool GradedLexLess::operator()(const std::vector<unsigned>& a,
                               const std::vector<unsigned>& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("null ring");
}

Poly::Poly(RingPtr ring, const Rational& constant) : Poly(std::move(ring)) {
    if (constant != 0) terms_.emplace(std::vector<unsigned>(ring_->num_vars(), 0), constant);
}

Poly Poly::var(RingPtr ring, std::size_t idx) {
    Poly p(std::move(ring));
    if (idx >= p.ring_->num_vars()) throw std::out_of_range("variable index");
    std::vector<unsigned> e(p.ring_->num_vars(), 0);
    e[idx] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](unsigned e) { return e == 0; });
}

void Poly::add_term(const std::vector<unsigned>& exps, const Rational& c) {
    if (c == 0) return;
    if (exps.size() != ring_->num_vars()) throw std::invalid_argument("exponent arity");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void check_compatible(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("polynomials from different rings");
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    Poly r(a.ring_);
    std::vector<unsigned> e(a.ring_->num_vars());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(ring_, Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    check_compatible(*this, o);
    return terms_ == o.terms_;
}

Poly Poly::partial(std::size_t idx) const {
    if (idx >= ring_->num_vars()) throw std::out_of_range("variable index");
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        std::vector<unsigned> d = e;
        d[idx] -= 1;
        r.add_term(d, c * e[idx]);
    }
    return r;
}

Rational Poly::eval(const std::vector<long long>& point) const {
    if (point.size() != ring_->num_vars()) throw std::invalid_argument("point arity");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Integer base(point[i]);
            Integer p(1);
            for (unsigned k = 0; k < e[i]; ++k) p *= base;
            t *= Rational(p);
        }
        acc += t;
    }
    return acc;
}

Poly Poly::lifted(const RingPtr& new_ring) const {
    if (same_ring(ring_, new_ring)) return *this;
    if (!new_ring->extends(*ring_))
        throw std::invalid_argument("target ring does not extend source ring");
    Poly r(new_ring);
    for (const auto& [e, c] : terms_) {
        std::vector<unsigned> ee(new_ring->num_vars(), 0);
        std::copy(e.begin(), e.end(), ee.begin());
        r.terms_.emplace(std::move(ee), c);
    }
    return r;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

unsigned Poly::degree_in(std::size_t idx) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

unsigned Poly::max_fiber_weight() const {
    unsigned w = 0;
    const std::size_t nb = ring_->num_base();
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (std::size_t i = nb; i < e.size(); ++i) t += e[i];
        w = std::max(w, t);
    }
    return w;
}

static std::string rational_str(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string Poly::print() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded-lex order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var_name(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << rational_str(mag);
        } else if (mag == 1) {
            os << mono;
        } else {
            os << rational_str(mag) << "*" << mono;
        }
    }
    return os.str();
}

// --------------------------------------------------------------------------
// Parser

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

class Parser {
  public:
    Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "syntax error: trailing input");
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        bool neg = consume('-');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (consume('+')) {
                acc += term();
            } else if (consume('-')) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (consume('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly a = atom();
        if (consume('^')) {
            skip_ws();
            std::size_t at = pos_;
            Integer n = nat(at);
            if (n > 4096) throw ParseError(at, "exponent too large");
            return a.pow(static_cast<unsigned>(n));
        }
        return a;
    }

    Integer nat(std::size_t at) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(at, "syntax error: expected number");
        Integer v(0);
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "syntax error: unexpected end");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!consume(')')) throw ParseError(pos_, "syntax error: expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            Integer num = nat(at);
            if (consume('/')) {
                skip_ws();
                std::size_t dat = pos_;
                Integer den = nat(dat);
                if (den == 0) throw ParseError(dat, "zero denominator");
                return Poly(ring_, Rational(num, den));
            }
            return Poly(ring_, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            std::string_view name = text_.substr(at, end - at);
            auto idx = ring_->find(name);
            if (!idx)
                throw ParseError(at, "unknown variable '" + std::string(name) + "'");
            pos_ = end;
            return Poly::var(ring_, *idx);
        }
        throw ParseError(pos_, std::string("syntax error: unexpected '") + c + "'");
    }

    RingPtr ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expr(const RingPtr& ring, std::string_view text) {
    return Parser(ring, text).run();
}

// --------------------------------------------------------------------------
// Witness search

namespace {

// Enumerate the max-norm-r shell of [-r, r]^n lexicographically, each axis
// descending from +r to -r, skipping interior points.  Returns false when
// the callback stops the walk.
bool walk_shell(std::size_t n, long long r, std::vector<long long>& point,
                std::size_t axis, bool boundary,
                const std::function<bool(const std::vector<long long>&)>& visit) {
    if (axis == n) {
        if (!boundary) return true;  // interior point: belongs to a smaller shell
        return visit(point);
    }
    for (long long v = r; v >= -r; --v) {
        point[axis] = v;
        if (!walk_shell(n, r, point, axis + 1, boundary || v == r || v == -r, visit))
            return false;
    }
    return true;
}

}  // namespace

std::optional<Witness> nonzero_witness(const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    const std::size_t n = p.ring()->num_vars();
    if (n == 0) {
        // Constant in a variable-free ring.
        return Witness{{}, p.eval({})};
    }
    // A nonzero polynomial cannot vanish on a grid with more points per axis
    // than its degree in that axis, so shells up to ceil(maxdeg/2)+1 suffice.
    unsigned maxdeg = 0;
    for (std::size_t i = 0; i < n; ++i) maxdeg = std::max(maxdeg, p.degree_in(i));
    const long long rmax = static_cast<long long>(maxdeg / 2 + 1);
    std::optional<Witness> found;
    std::vector<long long> point(n, 0);
    for (long long r = 0; r <= rmax && !found; ++r) {
        walk_shell(n, r, point, 0, r == 0, [&](const std::vector<long long>& pt) {
            Rational v = p.eval(pt);
            if (v != 0) {
                found = Witness{pt, v};
                return false;
            }
            return true;
        });
    }
    if (!found) throw std::logic_error("witness search exhausted on a nonzero polynomial");
    return found;
}

}  // namespace liedouble
