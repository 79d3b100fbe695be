#include "liedouble/report.hpp"

#include "json.hpp"

#include <sstream>

namespace liedouble {

bool Report::condition_passed(const std::string& name) const {
    for (const auto& [cond, ok] : condition_status)
        if (cond == name) return ok;
    throw std::out_of_range("no such condition: " + name);
}

std::size_t ReportBuilder::condition_slot(const std::string& condition) {
    for (std::size_t i = 0; i < report_.condition_status.size(); ++i)
        if (report_.condition_status[i].first == condition) return i;
    report_.condition_status.emplace_back(condition, true);
    return report_.condition_status.size() - 1;
}

void ReportBuilder::note_condition(const std::string& condition) {
    condition_slot(condition);
}

void ReportBuilder::add_residual(const std::string& condition,
                                 std::vector<std::size_t> indices, const Poly& residual) {
    std::size_t slot = condition_slot(condition);
    if (residual.is_zero()) return;
    report_.condition_status[slot].second = false;
    report_.pass = false;

    auto w = nonzero_witness(residual);
    if (!w || residual.eval(w->point) != w->value || w->value == 0)
        throw std::logic_error("witness certification failed for " + condition);

    ResidualEntry e;
    e.check = report_.check;
    e.condition = condition;
    e.indices = std::move(indices);
    e.residual = residual.print();
    e.witness_point = w->point;
    std::ostringstream os;
    os << w->value;
    e.witness_value = os.str();
    report_.entries.push_back(std::move(e));
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string join_point(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

void append_report_text(std::ostringstream& os, const Report& r) {
    os << "check: " << r.check << "\n";
    os << "verdict: " << (r.pass ? "PASS" : "FAIL") << "\n";
    os << "conditions:\n";
    for (const auto& [cond, ok] : r.condition_status)
        os << "  " << cond << ": " << (ok ? "pass" : "fail") << "\n";
    if (!r.entries.empty()) {
        os << "nonzero residuals:\n";
        for (const auto& e : r.entries) {
            os << "  " << e.condition << " " << join_indices(e.indices) << ": " << e.residual
               << "  [at " << join_point(e.witness_point) << " = " << e.witness_value << "]\n";
        }
    }
}

nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["pass"] = r.pass;
    j["conditions"] = nlohmann::ordered_json::array();
    for (const auto& [cond, ok] : r.condition_status)
        j["conditions"].push_back({{"name", cond}, {"pass", ok}});
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : r.entries)
        j["entries"].push_back({{"check", e.check},
                                {"condition", e.condition},
                                {"indices", e.indices},
                                {"residual", e.residual},
                                {"witness_point", e.witness_point},
                                {"witness_value", e.witness_value}});
    return j;
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    append_report_text(os, r);
    os << "fingerprint: " << convention_fingerprint() << "\n";
    return os.str();
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json j = report_to_json(r);
    j["fingerprint"] = convention_fingerprint();
    return j.dump(2) + "\n";
}

std::string render_oracle_text(const Report& matched, const Report& bialgebroid, bool agree) {
    std::ostringstream os;
    os << "check: oracle\n";
    os << "agreement: " << (agree ? "true" : "false") << "\n";
    os << "verdict: " << (matched.pass && bialgebroid.pass && agree ? "PASS" : "FAIL") << "\n";
    os << "--\n";
    append_report_text(os, matched);
    os << "--\n";
    append_report_text(os, bialgebroid);
    os << "fingerprint: " << convention_fingerprint() << "\n";
    return os.str();
}

std::string render_oracle_json(const Report& matched, const Report& bialgebroid, bool agree) {
    nlohmann::ordered_json j;
    j["check"] = "oracle";
    j["agreement"] = agree;
    j["pass"] = matched.pass && bialgebroid.pass && agree;
    j["matched"] = report_to_json(matched);
    j["bialgebroid"] = report_to_json(bialgebroid);
    j["fingerprint"] = convention_fingerprint();
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Convention fingerprint

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

const std::string& convention_constants() {
    // One clause per sign/order convention that affects emitted residuals.
    // Changing any convention must change this string.
    static const std::string s =
        "term-order=graded-lex,earlier-var-dominates;"
        "print=descending;"
        "witness=max-norm-shells,axes-descending;"
        "vf-bracket=first(second)-second(first);"
        "anchor-defect=[rho a,rho b]-rho[a,b];"
        "bracket-leibniz=+rho(s)g-rho(t)f;"
        "dual-lie=rho(a)alpha-alpha([a,e]);"
        "curvature=grad_a grad_b - grad_b grad_a - grad_[a,b];"
        "dual-connection=minus-transpose;"
        "hom-connection=rho+A0*M-M*A1;"
        "koszul=sum(-1)^(i+1)grad+sum(-1)^(i+j)ins;"
        "structure-operator=d+(-1)^deg*boundary,d-(-1)^deg*curv-wedge;"
        "curv-wedge-shuffle=(-1)^(i+j-1);"
        "core-bracket=grad_(dA c)c'-grad_(dB c')c;"
        "pairing=(sideA-lin,sideB-core)=-1,(sideA-core,sideB-lin)=+1;"
        "lie-total=Theta(X)<Y,Psi>-<[X,Y],Psi>;"
        "pullback-differential=(-anchor-on-lin,+anchor-on-core);"
        "anchor-sum=ThetaB circ ThetaA-star + ThetaA circ ThetaB-star;"
        "mixed-defect=[ThetaA Phi,ThetaB Psi]-ThetaB(L_Phi Psi)+ThetaA(L_Psi Phi)"
        "-ThetaB(ThetaA-star dF) pairing;"
        "derivation-defect=d[.,.]-[d.,.]-[.,d.];"
        "indices=1-based";
    return s;
}

std::string convention_fingerprint() {
    std::uint64_t h = fnv1a64(convention_constants());
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace liedouble
