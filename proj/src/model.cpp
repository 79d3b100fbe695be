#include "liedouble/model.hpp"

#include "liedouble/tangent.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace liedouble {

namespace {

using nlohmann::json;

std::string summarize(const std::vector<Diagnostic>& diags) {
    std::ostringstream os;
    os << diags.size() << (diags.size() == 1 ? " diagnostic:" : " diagnostics:");
    for (const auto& d : diags) os << "\n  " << d.where << ": " << d.message;
    return os.str();
}

// Accumulates diagnostics while walking the document; every reader returns a
// usable placeholder on error so one broken entry does not hide the others.
class Loader {
  public:
    Loader(const json& root, std::string origin)
        : root_(root), origin_(std::move(origin)) {}

    Model run() {
        if (!root_.is_object()) {
            fail(origin_, "top level must be an object");
            bail();
        }
        static const std::vector<std::string> sections = {
            "base_dim",     "algebroids",    "bundles",        "connections",
            "tworeps",      "matched_pairs", "tangent_inputs"};
        for (const auto& [key, value] : root_.items()) {
            (void)value;
            bool known = false;
            for (const auto& s : sections) known = known || key == s;
            if (!known) fail(key, "unknown section");
        }

        read_ring();
        if (!m_.ring) bail();
        m_.algebroids.emplace("TM", std::make_shared<Algebroid>(tm_algebroid(m_.ring)));
        read_algebroids();
        read_bundles();
        read_connections();
        read_tworeps();
        read_matched_pairs();
        read_tangent_inputs();
        if (!diags_.empty()) bail();
        return std::move(m_);
    }

  private:
    const json& root_;
    std::string origin_;
    Model m_;
    std::vector<Diagnostic> diags_;

    void fail(std::string where, std::string message) {
        diags_.push_back(Diagnostic{std::move(where), std::move(message)});
    }

    [[noreturn]] void bail() { throw ModelError(std::move(diags_)); }

    const json* section(const char* name, json::value_t type, bool required = false) {
        if (!root_.contains(name)) {
            if (required) fail(name, "required section missing");
            return nullptr;
        }
        const json& j = root_.at(name);
        if (j.type() != type) {
            fail(name, "wrong type");
            return nullptr;
        }
        return &j;
    }

    bool expect_keys(const json& j, const std::string& where,
                     std::initializer_list<const char*> allowed) {
        if (!j.is_object()) {
            fail(where, "must be an object");
            return false;
        }
        for (const auto& [key, value] : j.items()) {
            (void)value;
            bool known = false;
            for (const char* a : allowed) known = known || key == a;
            if (!known) fail(where + "." + key, "unknown field");
        }
        return true;
    }

    bool get_size(const json& j, const std::string& where, const char* key,
                  std::size_t& out, bool required = true) {
        if (!j.contains(key)) {
            if (required) fail(where, std::string("missing field \"") + key + "\"");
            return false;
        }
        const json& v = j.at(key);
        if (!v.is_number_unsigned()) {
            fail(where + "." + key, "must be a non-negative integer");
            return false;
        }
        out = v.get<std::size_t>();
        return true;
    }

    bool get_name(const json& j, const std::string& where, const char* key,
                  std::string& out, bool required = true) {
        if (!j.contains(key)) {
            if (required) fail(where, std::string("missing field \"") + key + "\"");
            return false;
        }
        const json& v = j.at(key);
        if (!v.is_string()) {
            fail(where + "." + key, "must be a string");
            return false;
        }
        out = v.get<std::string>();
        return true;
    }

    Poly poly(const json& j, const std::string& where) {
        if (!j.is_string()) {
            fail(where, "polynomial entries must be strings in the expression grammar");
            return Poly(m_.ring);
        }
        const std::string s = j.get<std::string>();
        try {
            return parse_expr(m_.ring, s);
        } catch (const ParseError& e) {
            fail(where, "cannot parse \"" + s + "\" (offset " +
                            std::to_string(e.offset()) + "): " + e.what());
            return Poly(m_.ring);
        }
    }

    std::vector<Poly> poly_row(const json& j, const std::string& where,
                               std::size_t want) {
        std::vector<Poly> row(want, Poly(m_.ring));
        if (!j.is_array() || j.size() != want) {
            fail(where, "must be an array of " + std::to_string(want) +
                            " polynomial strings");
            return row;
        }
        for (std::size_t i = 0; i < want; ++i)
            row[i] = poly(j[i], where + "[" + std::to_string(i + 1) + "]");
        return row;
    }

    PolyMat poly_mat(const json& j, const std::string& where, std::size_t rows,
                     std::size_t cols) {
        PolyMat m = zero_mat(m_.ring, rows, cols);
        if (!j.is_array() || j.size() != rows) {
            fail(where, "must be an array of " + std::to_string(rows) + " rows");
            return m;
        }
        for (std::size_t r = 0; r < rows; ++r)
            m[r] = poly_row(j[r], where + "[" + std::to_string(r + 1) + "]", cols);
        return m;
    }

    // 1-based "i,j" keys of sparse tables.
    bool index_pair(const std::string& key, const std::string& where, std::size_t imax,
                    std::size_t jmax, std::size_t& i, std::size_t& j) {
        const auto comma = key.find(',');
        std::size_t a = 0, b = 0;
        try {
            std::size_t used = 0;
            if (comma == std::string::npos) throw std::invalid_argument("");
            a = std::stoul(key.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument("");
            b = std::stoul(key.substr(comma + 1), &used);
            if (used != key.size() - comma - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            fail(where + "." + key, "keys must look like \"i,j\" with 1-based indices");
            return false;
        }
        if (a < 1 || a > imax || b < 1 || b > jmax) {
            fail(where + "." + key, "index out of range");
            return false;
        }
        i = a - 1;
        j = b - 1;
        return true;
    }

    std::shared_ptr<const Algebroid> resolve_alg(const std::string& name,
                                                 const std::string& where) {
        auto it = m_.algebroids.find(name);
        if (it == m_.algebroids.end()) {
            fail(where, "unknown algebroid \"" + name + "\"");
            return nullptr;
        }
        return it->second;
    }

    void read_ring() {
        std::size_t dim = 0;
        if (!root_.contains("base_dim")) {
            fail("base_dim", "required section missing");
            return;
        }
        if (!get_size(root_, "base_dim", "base_dim", dim)) return;
        m_.ring = VarRing::make_base(dim);
    }

    void read_algebroids() {
        const json* sec = section("algebroids", json::value_t::object);
        if (!sec) return;
        for (const auto& [name, body] : sec->items()) {
            const std::string where = "algebroids." + name;
            if (name == "TM") {
                fail(where, "\"TM\" is reserved for the coordinate tangent algebroid");
                continue;
            }
            if (!expect_keys(body, where, {"rank", "anchor", "names", "structure"}))
                continue;
            std::size_t rank = 0;
            if (!get_size(body, where, "rank", rank)) continue;

            std::vector<std::string> names;
            if (body.contains("names")) {
                const json& jn = body.at("names");
                if (!jn.is_array() || jn.size() != rank) {
                    fail(where + ".names", "must list one name per generator");
                } else {
                    for (const auto& s : jn)
                        names.push_back(s.is_string() ? s.get<std::string>() : "");
                }
            }
            if (names.size() != rank) {
                names.clear();
                for (std::size_t i = 1; i <= rank; ++i)
                    names.push_back("e" + std::to_string(i));
            }

            std::vector<std::vector<Poly>> anchor(
                rank, std::vector<Poly>(m_.ring->num_vars(), Poly(m_.ring)));
            if (!body.contains("anchor")) {
                fail(where, "missing field \"anchor\"");
            } else {
                const json& ja = body.at("anchor");
                if (!ja.is_array() || ja.size() != rank) {
                    fail(where + ".anchor", "must be an array of " +
                                              std::to_string(rank) + " rows");
                } else {
                    for (std::size_t i = 0; i < rank; ++i)
                        anchor[i] = poly_row(ja[i],
                                             where + ".anchor[" + std::to_string(i + 1) + "]",
                                             m_.ring->num_vars());
                }
            }

            std::vector<std::vector<SectionVec>> st(
                rank, std::vector<SectionVec>(rank, zero_section(m_.ring, rank)));
            if (body.contains("structure")) {
                const json& js = body.at("structure");
                if (!js.is_object()) {
                    fail(where + ".structure", "must be an object");
                } else {
                    std::map<std::pair<std::size_t, std::size_t>, SectionVec> given;
                    for (const auto& [key, val] : js.items()) {
                        std::size_t i = 0, j = 0;
                        if (!index_pair(key, where + ".structure", rank, rank, i, j))
                            continue;
                        SectionVec v =
                            poly_row(val, where + ".structure." + key, rank);
                        if (i == j && !sv_is_zero(v)) {
                            fail(where + ".structure." + key,
                                 "diagonal bracket entries must vanish");
                            continue;
                        }
                        given.emplace(std::make_pair(i, j), std::move(v));
                    }
                    for (const auto& [ij, v] : given) {
                        st[ij.first][ij.second] = v;
                        const auto flipped = given.find({ij.second, ij.first});
                        if (flipped == given.end()) {
                            st[ij.second][ij.first] =
                                sv_scale(Poly(m_.ring, Rational(-1)), v);
                        } else if (!sv_is_zero(sv_add(v, flipped->second))) {
                            if (ij.first < ij.second)
                                fail(where + ".structure",
                                     "entries (" + std::to_string(ij.first + 1) + "," +
                                         std::to_string(ij.second + 1) + ") and (" +
                                         std::to_string(ij.second + 1) + "," +
                                         std::to_string(ij.first + 1) +
                                         ") violate antisymmetry");
                        }
                    }
                }
            }

            try {
                m_.algebroids.emplace(
                    name, std::make_shared<Algebroid>(make_algebroid(
                              m_.ring, rank, std::move(names), std::move(anchor),
                              std::move(st))));
            } catch (const std::invalid_argument& e) {
                fail(where, e.what());
            }
        }
    }

    void read_bundles() {
        const json* sec = section("bundles", json::value_t::object);
        if (!sec) return;
        for (const auto& [name, body] : sec->items()) {
            const std::string where = "bundles." + name;
            if (!expect_keys(body, where, {"rank"})) continue;
            std::size_t rank = 0;
            if (get_size(body, where, "rank", rank)) m_.bundles.emplace(name, rank);
        }
    }

    void read_connections() {
        const json* sec = section("connections", json::value_t::object);
        if (!sec) return;
        for (const auto& [name, body] : sec->items()) {
            const std::string where = "connections." + name;
            if (!expect_keys(body, where, {"algebroid", "bundle", "christoffel"}))
                continue;
            std::string alg_name, bundle_name;
            if (!get_name(body, where, "algebroid", alg_name)) continue;
            if (!get_name(body, where, "bundle", bundle_name)) continue;
            auto alg = resolve_alg(alg_name, where + ".algebroid");
            const auto bundle = m_.bundles.find(bundle_name);
            if (bundle == m_.bundles.end())
                fail(where + ".bundle", "unknown bundle \"" + bundle_name + "\"");
            if (!alg || bundle == m_.bundles.end()) continue;
            const std::size_t rank = bundle->second;

            std::vector<std::vector<std::vector<Poly>>> table(
                alg->rank, std::vector<std::vector<Poly>>(
                               rank, std::vector<Poly>(rank, Poly(m_.ring))));
            if (body.contains("christoffel")) {
                const json& jc = body.at("christoffel");
                if (!jc.is_object()) {
                    fail(where + ".christoffel", "must be an object");
                } else {
                    for (const auto& [key, val] : jc.items()) {
                        std::size_t i = 0, j = 0;
                        if (!index_pair(key, where + ".christoffel", alg->rank, rank,
                                        i, j))
                            continue;
                        table[i][j] =
                            poly_row(val, where + ".christoffel." + key, rank);
                    }
                }
            }
            m_.connections.emplace(name, Conn(std::move(alg), rank, std::move(table)));
        }
    }

    // Absent connections mean the zero connection on a bundle of the stated
    // rank; a named connection must act along the right algebroid and carry
    // the right bundle rank.
    bool pick_conn(const json& body, const std::string& where, const char* key,
                   const std::shared_ptr<const Algebroid>& alg, std::size_t rank,
                   Conn& out) {
        if (!body.contains(key)) {
            out = Conn::zero(alg, rank);
            return true;
        }
        std::string name;
        if (!get_name(body, where, key, name)) return false;
        const auto it = m_.connections.find(name);
        if (it == m_.connections.end()) {
            fail(where + "." + key, "unknown connection \"" + name + "\"");
            return false;
        }
        if (it->second.alg() != alg) {
            fail(where + "." + key,
                 "connection \"" + name + "\" does not act along this algebroid");
            return false;
        }
        if (it->second.bundle_rank() != rank) {
            fail(where + "." + key, "connection \"" + name + "\" has bundle rank " +
                                        std::to_string(it->second.bundle_rank()) +
                                        ", expected " + std::to_string(rank));
            return false;
        }
        out = it->second;
        return true;
    }

    void read_tworeps() {
        const json* sec = section("tworeps", json::value_t::object);
        if (!sec) return;
        for (const auto& [name, body] : sec->items()) {
            const std::string where = "tworeps." + name;
            if (!expect_keys(body, where,
                             {"algebroid", "e0", "e1", "partial", "conn0", "conn1", "R"}))
                continue;
            std::string alg_name, e0_name, e1_name;
            if (!get_name(body, where, "algebroid", alg_name)) continue;
            if (!get_name(body, where, "e0", e0_name)) continue;
            if (!get_name(body, where, "e1", e1_name)) continue;
            auto alg = resolve_alg(alg_name, where + ".algebroid");
            const auto e0 = m_.bundles.find(e0_name);
            const auto e1 = m_.bundles.find(e1_name);
            if (e0 == m_.bundles.end())
                fail(where + ".e0", "unknown bundle \"" + e0_name + "\"");
            if (e1 == m_.bundles.end())
                fail(where + ".e1", "unknown bundle \"" + e1_name + "\"");
            if (!alg || e0 == m_.bundles.end() || e1 == m_.bundles.end()) continue;
            const std::size_t r0 = e0->second, r1 = e1->second;

            PolyMat partial = zero_mat(m_.ring, r1, r0);
            if (body.contains("partial"))
                partial = poly_mat(body.at("partial"), where + ".partial", r1, r0);

            Conn conn0 = Conn::zero(alg, r0);
            Conn conn1 = Conn::zero(alg, r1);
            if (!pick_conn(body, where, "conn0", alg, r0, conn0)) continue;
            if (!pick_conn(body, where, "conn1", alg, r1, conn1)) continue;

            HomTwoForm R = zero_hom_two_form(m_.ring, alg->rank, r0, r1);
            if (body.contains("R")) {
                const json& jr = body.at("R");
                if (!jr.is_object()) {
                    fail(where + ".R", "must be an object");
                } else {
                    for (const auto& [key, val] : jr.items()) {
                        std::size_t i = 0, j = 0;
                        if (!index_pair(key, where + ".R", alg->rank, alg->rank, i, j))
                            continue;
                        if (i >= j) {
                            fail(where + ".R." + key,
                                 "curvature keys must be strictly increasing pairs");
                            continue;
                        }
                        R.set(i, j, poly_mat(val, where + ".R." + key, r0, r1));
                    }
                }
            }

            try {
                m_.tworeps.emplace(name,
                                   make_tworep(std::move(alg), std::move(partial),
                                               std::move(conn0), std::move(conn1),
                                               std::move(R)));
            } catch (const std::invalid_argument& e) {
                fail(where, e.what());
            }
        }
    }

    void read_matched_pairs() {
        const json* sec = section("matched_pairs", json::value_t::object);
        if (!sec) return;
        for (const auto& [name, body] : sec->items()) {
            const std::string where = "matched_pairs." + name;
            const bool vacant = body.is_object() && body.contains("vacant") &&
                                body.at("vacant").is_boolean() &&
                                body.at("vacant").get<bool>();
            if (vacant) {
                if (!expect_keys(body, where, {"A", "B", "vacant", "connAB", "connBA"}))
                    continue;
            } else if (!expect_keys(body, where,
                                    {"A", "B", "core_rank", "repA", "repB", "vacant"})) {
                continue;
            }
            std::string a_name, b_name;
            if (!get_name(body, where, "A", a_name)) continue;
            if (!get_name(body, where, "B", b_name)) continue;
            auto A = resolve_alg(a_name, where + ".A");
            auto B = resolve_alg(b_name, where + ".B");
            if (!A || !B) continue;

            if (vacant) {
                Conn connAB = Conn::zero(A, B->rank);
                Conn connBA = Conn::zero(B, A->rank);
                if (!pick_conn(body, where, "connAB", A, B->rank, connAB)) continue;
                if (!pick_conn(body, where, "connBA", B, A->rank, connBA)) continue;
                m_.matched_pairs.emplace(
                    name, vacant_from_representations(std::move(A), std::move(B),
                                                      std::move(connAB),
                                                      std::move(connBA)));
                continue;
            }

            std::size_t core_rank = 0;
            std::string ra_name, rb_name;
            if (!get_size(body, where, "core_rank", core_rank)) continue;
            if (!get_name(body, where, "repA", ra_name)) continue;
            if (!get_name(body, where, "repB", rb_name)) continue;
            const auto ra = m_.tworeps.find(ra_name);
            const auto rb = m_.tworeps.find(rb_name);
            if (ra == m_.tworeps.end())
                fail(where + ".repA", "unknown tworep \"" + ra_name + "\"");
            if (rb == m_.tworeps.end())
                fail(where + ".repB", "unknown tworep \"" + rb_name + "\"");
            if (ra == m_.tworeps.end() || rb == m_.tworeps.end()) continue;
            if (ra->second.alg != A) {
                fail(where + ".repA", "representation acts along \"" + ra_name +
                                          "\"'s algebroid, not along A");
                continue;
            }
            if (rb->second.alg != B) {
                fail(where + ".repB", "representation acts along \"" + rb_name +
                                          "\"'s algebroid, not along B");
                continue;
            }
            try {
                m_.matched_pairs.emplace(
                    name, make_matched_pair(std::move(A), std::move(B), core_rank,
                                            ra->second, rb->second));
            } catch (const std::invalid_argument& e) {
                fail(where, e.what());
            }
        }
    }

    void read_tangent_inputs() {
        const json* sec = section("tangent_inputs", json::value_t::object);
        if (!sec) return;
        for (const auto& [name, body] : sec->items()) {
            const std::string where = "tangent_inputs." + name;
            if (m_.matched_pairs.count(name)) {
                fail(where, "name collides with a declared matched pair");
                continue;
            }
            if (!expect_keys(body, where, {"algebroid", "connection"})) continue;
            std::string alg_name, conn_name;
            if (!get_name(body, where, "algebroid", alg_name)) continue;
            if (!get_name(body, where, "connection", conn_name)) continue;
            auto alg = resolve_alg(alg_name, where + ".algebroid");
            const auto conn = m_.connections.find(conn_name);
            if (conn == m_.connections.end())
                fail(where + ".connection", "unknown connection \"" + conn_name + "\"");
            if (!alg || conn == m_.connections.end()) continue;
            try {
                m_.tangent_doubles.emplace(
                    name, tangent_double_matched_pair(std::move(alg), conn->second));
            } catch (const std::logic_error& e) {
                fail(where, e.what());
            }
        }
    }
};

}  // namespace

ModelError::ModelError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

const MatchedPair* Model::find_pair(const std::string& name) const {
    const auto mp = matched_pairs.find(name);
    if (mp != matched_pairs.end()) return &mp->second;
    const auto td = tangent_doubles.find(name);
    if (td != tangent_doubles.end()) return &td->second;
    return nullptr;
}

Model load_model_text(const std::string& text, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ModelError({Diagnostic{origin, e.what()}});
    }
    return Loader(doc, origin).run();
}

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError({Diagnostic{path, "cannot open file"}});
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_model_text(buf.str(), path);
}

}  // namespace liedouble
