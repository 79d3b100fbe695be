#include "liedouble/algebroid.hpp"

#include <algorithm>

namespace liedouble {

// --------------------------------------------------------------------------
// Vector fields

Poly VectorField::apply(const Poly& f) const {
    if (!same_ring(ring, f.ring()))
        throw std::invalid_argument("vector field and function live on different rings");
    Poly r(ring);
    for (std::size_t w = 0; w < on_var.size(); ++w) {
        if (on_var[w].is_zero()) continue;
        r += f.partial(w) * on_var[w];
    }
    return r;
}

bool VectorField::is_zero() const {
    return std::all_of(on_var.begin(), on_var.end(), [](const Poly& p) { return p.is_zero(); });
}

VectorField zero_field(const RingPtr& ring) {
    return VectorField{ring, std::vector<Poly>(ring->num_vars(), Poly(ring))};
}

VectorField coordinate_field(const RingPtr& ring, std::size_t idx) {
    VectorField x = zero_field(ring);
    x.on_var.at(idx) = Poly(ring, Rational(1));
    return x;
}

VectorField vf_add(const VectorField& x, const VectorField& y) {
    VectorField r = x;
    for (std::size_t w = 0; w < r.on_var.size(); ++w) r.on_var[w] += y.on_var[w];
    return r;
}

VectorField vf_sub(const VectorField& x, const VectorField& y) {
    VectorField r = x;
    for (std::size_t w = 0; w < r.on_var.size(); ++w) r.on_var[w] -= y.on_var[w];
    return r;
}

VectorField vf_scale(const Poly& f, const VectorField& x) {
    VectorField r = x;
    for (auto& p : r.on_var) p *= f;
    return r;
}

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
    VectorField r = zero_field(x.ring);
    for (std::size_t w = 0; w < r.on_var.size(); ++w)
        r.on_var[w] = x.apply(y.on_var[w]) - y.apply(x.on_var[w]);
    return r;
}

// --------------------------------------------------------------------------
// Section vectors

SectionVec zero_section(const RingPtr& ring, std::size_t rank) {
    return SectionVec(rank, Poly(ring));
}

SectionVec unit_section(const RingPtr& ring, std::size_t rank, std::size_t i) {
    SectionVec s = zero_section(ring, rank);
    s.at(i) = Poly(ring, Rational(1));
    return s;
}

SectionVec sv_add(const SectionVec& a, const SectionVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("section rank mismatch");
    SectionVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

SectionVec sv_sub(const SectionVec& a, const SectionVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("section rank mismatch");
    SectionVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

SectionVec sv_scale(const Poly& f, const SectionVec& a) {
    SectionVec r = a;
    for (auto& p : r) p *= f;
    return r;
}

bool sv_is_zero(const SectionVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Poly& p) { return p.is_zero(); });
}

// --------------------------------------------------------------------------
// Algebroids

Algebroid make_algebroid(RingPtr ring, std::size_t rank, std::vector<std::string> gen_names,
                         std::vector<std::vector<Poly>> anchor_matrix,
                         std::vector<std::vector<SectionVec>> structure) {
    Algebroid a;
    a.ring = std::move(ring);
    a.rank = rank;
    a.gen_names = std::move(gen_names);
    a.gen_kinds.assign(rank, GenKind::plain);
    if (a.gen_names.size() != rank) throw std::invalid_argument("generator name count");
    if (anchor_matrix.size() != rank) throw std::invalid_argument("anchor row count");
    for (std::size_t i = 0; i < rank; ++i) {
        if (anchor_matrix[i].size() != a.ring->num_vars())
            throw std::invalid_argument("anchor row width");
        a.anchor_vf.push_back(VectorField{a.ring, anchor_matrix[i]});
    }
    if (structure.size() != rank) throw std::invalid_argument("structure table rows");
    for (const auto& row : structure) {
        if (row.size() != rank) throw std::invalid_argument("structure table cols");
        for (const auto& cell : row)
            if (cell.size() != rank) throw std::invalid_argument("structure entry rank");
    }
    a.structure = std::move(structure);
    return a;
}

bool operator==(const VectorField& x, const VectorField& y) {
    return same_ring(x.ring, y.ring) && x.on_var == y.on_var;
}

bool operator==(const Algebroid& a, const Algebroid& b) {
    return same_ring(a.ring, b.ring) && a.rank == b.rank && a.gen_names == b.gen_names &&
           a.gen_kinds == b.gen_kinds && a.anchor_vf == b.anchor_vf &&
           a.structure == b.structure;
}

Poly anchor_apply(const Algebroid& alg, const SectionVec& s, const Poly& f) {
    if (s.size() != alg.rank) throw std::invalid_argument("section rank mismatch");
    Poly r(alg.ring);
    for (std::size_t i = 0; i < alg.rank; ++i) {
        if (s[i].is_zero()) continue;
        r += s[i] * alg.anchor_vf[i].apply(f);
    }
    return r;
}

VectorField anchor_field(const Algebroid& alg, const SectionVec& s) {
    VectorField r = zero_field(alg.ring);
    for (std::size_t i = 0; i < alg.rank; ++i) {
        if (s[i].is_zero()) continue;
        r = vf_add(r, vf_scale(s[i], alg.anchor_vf[i]));
    }
    return r;
}

SectionVec bracket_sections(const Algebroid& alg, const SectionVec& s, const SectionVec& t) {
    if (s.size() != alg.rank || t.size() != alg.rank)
        throw std::invalid_argument("section rank mismatch");
    SectionVec r = zero_section(alg.ring, alg.rank);
    for (std::size_t i = 0; i < alg.rank; ++i) {
        if (s[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg.rank; ++j) {
            if (t[j].is_zero()) continue;
            Poly c = s[i] * t[j];
            for (std::size_t l = 0; l < alg.rank; ++l) r[l] += c * alg.structure[i][j][l];
        }
    }
    for (std::size_t j = 0; j < alg.rank; ++j) r[j] += anchor_apply(alg, s, t[j]);
    for (std::size_t i = 0; i < alg.rank; ++i) r[i] -= anchor_apply(alg, t, s[i]);
    return r;
}

Report check_lie_algebroid(const Algebroid& alg) {
    ReportBuilder rb("check-algebroid");
    rb.note_condition("antisymmetry");
    rb.note_condition("jacobi");
    rb.note_condition("anchor-morphism");

    for (std::size_t i = 0; i < alg.rank; ++i)
        for (std::size_t j = i; j < alg.rank; ++j) {
            SectionVec res = sv_add(alg.structure[i][j], alg.structure[j][i]);
            for (std::size_t l = 0; l < alg.rank; ++l)
                rb.add_residual("antisymmetry", {i + 1, j + 1, l + 1}, res[l]);
        }

    for (std::size_t i = 0; i < alg.rank; ++i)
        for (std::size_t j = i + 1; j < alg.rank; ++j)
            for (std::size_t k = j + 1; k < alg.rank; ++k) {
                SectionVec ei = alg.unit(i), ej = alg.unit(j), ek = alg.unit(k);
                SectionVec jac = bracket_sections(alg, ei, bracket_sections(alg, ej, ek));
                jac = sv_add(jac, bracket_sections(alg, ej, bracket_sections(alg, ek, ei)));
                jac = sv_add(jac, bracket_sections(alg, ek, bracket_sections(alg, ei, ej)));
                for (std::size_t l = 0; l < alg.rank; ++l)
                    rb.add_residual("jacobi", {i + 1, j + 1, k + 1, l + 1}, jac[l]);
            }

    for (std::size_t i = 0; i < alg.rank; ++i)
        for (std::size_t j = 0; j < alg.rank; ++j) {
            VectorField lhs = vf_bracket(alg.anchor_vf[i], alg.anchor_vf[j]);
            VectorField rhs = anchor_field(alg, alg.structure[i][j]);
            VectorField res = vf_sub(lhs, rhs);
            for (std::size_t w = 0; w < res.on_var.size(); ++w)
                rb.add_residual("anchor-morphism", {i + 1, j + 1, w + 1}, res.on_var[w]);
        }

    return rb.finish();
}

SectionVec lie_derivative_dual(const Algebroid& alg, const SectionVec& a,
                               const SectionVec& alpha) {
    if (a.size() != alg.rank || alpha.size() != alg.rank)
        throw std::invalid_argument("section rank mismatch");
    SectionVec r = zero_section(alg.ring, alg.rank);
    for (std::size_t j = 0; j < alg.rank; ++j) {
        r[j] = anchor_apply(alg, a, alpha[j]);
        SectionVec br = bracket_sections(alg, a, alg.unit(j));
        for (std::size_t l = 0; l < alg.rank; ++l) r[j] -= alpha[l] * br[l];
    }
    return r;
}

// --------------------------------------------------------------------------
// Alternating forms

void AForm::set(std::vector<std::size_t> key, SectionVec value) {
    if (key.size() != degree) throw std::invalid_argument("form key arity");
    for (std::size_t i = 0; i + 1 < key.size(); ++i)
        if (key[i] >= key[i + 1]) throw std::invalid_argument("form key not increasing");
    if (!key.empty() && key.back() >= frame_rank) throw std::invalid_argument("form key range");
    if (value.size() != value_rank) throw std::invalid_argument("form value rank");
    if (sv_is_zero(value))
        entries.erase(key);
    else
        entries[std::move(key)] = std::move(value);
}

SectionVec AForm::value(const std::vector<std::size_t>& idxs) const {
    if (idxs.size() != degree) throw std::invalid_argument("form arity");
    // Sort with sign; repeated indices kill the term.
    std::vector<std::size_t> key = idxs;
    int sign = 1;
    for (std::size_t i = 0; i < key.size(); ++i)
        for (std::size_t j = i + 1; j < key.size(); ++j) {
            if (key[i] == key[j]) return zero_section(ring, value_rank);
            if (key[i] > key[j]) {
                std::swap(key[i], key[j]);
                sign = -sign;
            }
        }
    auto it = entries.find(key);
    if (it == entries.end()) return zero_section(ring, value_rank);
    SectionVec v = it->second;
    if (sign < 0)
        for (auto& p : v) p = -p;
    return v;
}

SectionVec AForm::value_section(const SectionVec& first,
                                const std::vector<std::size_t>& rest) const {
    if (first.size() != frame_rank) throw std::invalid_argument("section arity");
    SectionVec acc = zero_section(ring, value_rank);
    std::vector<std::size_t> idxs(rest.size() + 1);
    std::copy(rest.begin(), rest.end(), idxs.begin() + 1);
    for (std::size_t l = 0; l < frame_rank; ++l) {
        if (first[l].is_zero()) continue;
        idxs[0] = l;
        acc = sv_add(acc, sv_scale(first[l], value(idxs)));
    }
    return acc;
}

}  // namespace liedouble
