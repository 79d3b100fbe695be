#pragma once

// Model files: one self-contained JSON document declaring a base ring and
// named algebroids, bundles, connections, representations and pairs, with
// every polynomial entry written as a string in the expression grammar.
// Loading either produces a fully cross-referenced in-memory model or throws
// a ModelError carrying every diagnostic found, each tagged with the path of
// the offending entry.

#include "liedouble/matched.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace liedouble {

struct Diagnostic {
    std::string where;    // dotted path into the document, e.g. "algebroids.A.anchor[2][1]"
    std::string message;
};

class ModelError : public std::runtime_error {
  public:
    explicit ModelError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

  private:
    std::vector<Diagnostic> diagnostics_;
};

struct Model {
    RingPtr ring;
    std::map<std::string, std::shared_ptr<const Algebroid>> algebroids;
    std::map<std::string, std::size_t> bundles;
    std::map<std::string, Conn> connections;
    std::map<std::string, TwoRep> tworeps;
    std::map<std::string, MatchedPair> matched_pairs;

    // Doubles assembled from the tangent_inputs section at load time; they
    // answer to the same commands as declared matched pairs.
    std::map<std::string, MatchedPair> tangent_doubles;

    // Union lookup over matched_pairs and tangent_doubles; nullptr if absent.
    const MatchedPair* find_pair(const std::string& name) const;
};

// Document shape:
//   {
//     "base_dim": <n>,                          // coordinates x1..xn
//     "algebroids":  { name: { "rank", "anchor": [[poly..]..],
//                              "names"?: [..], "structure"?: { "i,j": [poly..] } } },
//     "bundles":     { name: { "rank" } },
//     "connections": { name: { "algebroid", "bundle",
//                              "christoffel"?: { "i,j": [poly..] } } },
//     "tworeps":     { name: { "algebroid", "e0", "e1", "partial"?: [[poly..]..],
//                              "conn0"?, "conn1"?, "R"?: { "i,j": [[poly..]..] } } },
//     "matched_pairs": { name: { "A", "B", "core_rank", "repA", "repB" }
//                      | { "A", "B", "vacant": true, "connAB", "connBA" } },
//     "tangent_inputs": { name: { "algebroid", "connection" } }
//   }
// Index keys are 1-based; omitted polynomial tables are zero.  The algebroid
// name "TM" is reserved for the coordinate tangent algebroid of the base and
// may be referenced anywhere without being declared.  Structure tables may
// give either or both orientations of a bracket; stored and given values
// must antisymmetrize consistently.
Model load_model_text(const std::string& text, const std::string& origin);
Model load_model(const std::string& path);

}  // namespace liedouble
