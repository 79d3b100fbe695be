#pragma once
// Structured verdicts for the verification commands.
//
// Every check evaluates families of residual polynomials that must vanish
// identically.  A report lists each condition with its pass/fail status and,
// for every nonzero residual, one entry carrying the frame indices involved,
// the canonical residual string, and an integer witness point at which the
// residual provably does not vanish.  Witnesses are re-evaluated when the
// entry is recorded, so a printed report is self-certifying.

#include "liedouble/polyring.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace liedouble {

struct ResidualEntry {
    std::string check;
    std::string condition;
    std::vector<std::size_t> indices;  // 1-based frame / variable indices
    std::string residual;              // canonical polynomial form
    std::vector<long long> witness_point;
    std::string witness_value;         // nonzero rational, residual(point)
};

struct Report {
    std::string check;
    bool pass = true;
    // Conditions in evaluation order, each with its own verdict.
    std::vector<std::pair<std::string, bool>> condition_status;
    std::vector<ResidualEntry> entries;  // nonzero residuals only

    bool condition_passed(const std::string& name) const;
};

// Accumulates residuals for one check.  Conditions appear in first-seen
// order; a condition with no nonzero residual reports as passing (including
// vacuous families, which should be announced via note_condition).
class ReportBuilder {
  public:
    explicit ReportBuilder(std::string check) { report_.check = std::move(check); }

    void note_condition(const std::string& condition);

    // Records an entry when `residual` is nonzero; indices are 1-based.
    void add_residual(const std::string& condition, std::vector<std::size_t> indices,
                      const Poly& residual);

    Report finish() { return report_; }

  private:
    std::size_t condition_slot(const std::string& condition);
    Report report_;
};

// Renderings are deterministic: the same report yields byte-identical text.
std::string render_text(const Report& r);
std::string render_json(const Report& r);

// Combined rendering for the equivalence oracle (two reports + agreement).
std::string render_oracle_text(const Report& matched, const Report& bialgebroid, bool agree);
std::string render_oracle_json(const Report& matched, const Report& bialgebroid, bool agree);

// FNV-1a 64 over the fixed convention-constant string below; emitted in every
// machine report so outputs of differently-conventioned builds never compare
// equal by accident.
std::uint64_t fnv1a64(std::string_view s);
const std::string& convention_constants();
std::string convention_fingerprint();

}  // namespace liedouble
