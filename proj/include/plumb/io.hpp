#pragma once

// JSON and DOT serialization. Output is compact and byte-stable: keys in a
// fixed order, ids ascending, edges as [i, j] with i < j.

#include "plumb/embedding.hpp"
#include "plumb/families.hpp"
#include "plumb/torusknot.hpp"

#include "json.hpp"

#include <string>

namespace plumb {

using Json = nlohmann::ordered_json;

/// Malformed input. The message starts with the name of the broken rule,
/// e.g. "graph.edge-endpoints: ...".
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integers that fit 64 bits become JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& x);
/// "a/b", or "a" for integers.
std::string rational_text(const Rational& r);

Json graph_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const Json& j);

Json embedding_json(const LatticeEmbedding& f);
LatticeEmbedding embedding_from_json(const Json& j);

Json matrix_json(const IntMatrix& m);
/// Square array of integer rows.
IntMatrix matrix_from_json(const Json& j);

Json surgery_json(const SurgeryDescription& d);
SurgeryDescription surgery_from_json(const Json& j);

/// {"tag":"2234","pairs":[[[3],[2,2]],...],"k":0}; tag accepts "F2234" too.
Json instance_json(const FamilyInstance& inst);
FamilyInstance instance_from_json(const Json& j);

Json certificate_json(const FamilyInstance& inst, const QHBCertificate& cert);
Json theorem_row_json(const TheoremRow& row);

/// Parses text, turning parser failures into FormatError("json.syntax: ...").
Json parse_json(const std::string& text);
/// Reads and parses a file; FormatError("io.read: ...") if it cannot be opened.
Json read_json_file(const std::string& path);

/// Undirected DOT graph, one node per vertex labelled with its weight.
std::string export_dot(const PlumbingGraph& g);

}  // namespace plumb
