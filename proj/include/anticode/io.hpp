#pragma once

// JSON documents: the code-spec input format and the report/trace outputs.
//
// Code-spec document:
//   {
//     "name": "optional label",
//     "field": {"p": 2, "m": 2, "modulus": [1, 1, 1]},   // modulus optional
//     "generator": [[1, 0, 1, 0], [0, 1, 0, 1]]           // element encodings
//   }

#include <string>
#include <vector>

#include "json.hpp"

#include "anticode/bounds.hpp"
#include "anticode/codes.hpp"
#include "anticode/partition.hpp"

namespace anticode {

using Json = nlohmann::json;

// Validates the document and re-verifies the generator rank. Throws
// InputError naming the offending field (rank errors carry the rank).
LinearCode from_spec(const Json& document);
Json to_spec(const LinearCode& code);

LinearCode load_spec_file(const std::string& path);
void save_spec_file(const LinearCode& code, const std::string& path);

Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);
Json to_json(const std::vector<BoundReport>& reports);
std::vector<BoundReport> bound_reports_from_json(const Json& j);

Json to_json(const CodeMetrics& m);
CodeMetrics metrics_from_json(const Json& j);

Json to_json(const PartitionTrace& t);
PartitionTrace trace_from_json(const Json& j);

}  // namespace anticode
