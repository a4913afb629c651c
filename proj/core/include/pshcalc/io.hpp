#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

#include "pshcalc/coefficient_vector.hpp"
#include "pshcalc/partition.hpp"
#include "pshcalc/psh_ring.hpp"
#include "pshcalc/transition.hpp"

namespace pshcalc::io {

// Objects are emitted in insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

/// [3,2,1]
Json to_json(const Partition& alpha);
Partition partition_from_json(const Json& j);

/// {"n": int, "basis": "X"|"Y", "coeffs": {"<partition text>": int, …}}
Json to_json(const PshVector& v);
PshVector psh_vector_from_json(const Json& j, ParseMode mode = ParseMode::strict);

/// {"n": int, "side": "c"|"d", "values": {"<partition text>": "<integer>", …}}
/// Only nonzero values are written, in canonical order.
Json to_json(const CoefficientVector& v);

/// Reads the form above. "n" may be omitted when at least one key is present;
/// values may be decimal strings or JSON integers. Unknown members are
/// ignored. Throws ParseError or WeightMismatch.
CoefficientVector coefficient_vector_from_json(const Json& j, ParseMode mode = ParseMode::strict);

/// {"n": int, "order": [[…], …], "kind": "S"|"M"|"Minv", "entries": [["…", …], …]}
Json to_json(const TransitionMatrix& m);
TransitionMatrix matrix_from_json(const Json& j);

/// Header row and first column hold quoted partition texts.
void write_csv(std::ostream& out, const TransitionMatrix& m);

/// Right-aligned grid labelled with (parts) in both directions.
void write_table(std::ostream& out, const TransitionMatrix& m);

/// JSON text with a trailing newline; indent < 0 gives a single line.
std::string dump(const Json& j, int indent = 2);

}  // namespace pshcalc::io
