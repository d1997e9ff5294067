#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qcox/assoc_complex.hpp"
#include "qcox/cartan.hpp"

namespace qcox {

using Json = nlohmann::ordered_json;

// {"vertices": [...], "edges": [[a,b],...], "labels": {"a,b": m}}; labels default to 3, "inf" allowed.
Diagram diagram_from_json(const Json& j);
Json diagram_to_json(const Diagram& d);

// Whitespace-separated integer rows, or a JSON array of rows / {"matrix": rows}.
Gcm parse_gcm(const std::string& text);

std::string read_file(const std::string& path);  // throws InvalidInput

Json matrix_to_json(const Matrix& m);   // rows of rational strings
Json vec_to_json(const Vec& v);
Json nested_set_to_json(const NestedSet& h);  // array of vertex-id arrays
Json face_poset_to_json(const FacePoset& p);

// {"carrier": {"kind": "permutation", "degree": n} | {"kind": "free", "generators": [...]}
//              | {"kind": "matrix", "dim": n},
//  "values": [{"from": nested set, "to": nested set, "value": element}]}
// Permutations are 0-based image lists, free words are strings like "a b^-1", matrices are rows.
PhiAssignment phi_from_json(const Json& j, const ContextPtr& ctx);
GroupElement element_from_json(const Carrier& c, const Json& j);

Json coherence_to_json(const CoherenceReport& r);
Json dstructure_to_json(const DStructure& s);  // {"J": [basis vectors]}
Json analysis_to_json(const DStructureAnalysis& a);

}  // namespace qcox
