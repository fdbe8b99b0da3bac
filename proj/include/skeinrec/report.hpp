#pragma once

// Structured records for CLI output. Scalars are rendered canonically, so
// every field except elapsed_ms is byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "skeinrec/functors.hpp"
#include "skeinrec/io.hpp"
#include "skeinrec/local_algebra.hpp"

namespace skeinrec {

std::string boundary_token(const Boundary& b);  // e.g. "+t -q 0s"

nlohmann::ordered_json to_json(const RecursionReport& r);
nlohmann::ordered_json to_json(const RelationReport& r);
nlohmann::ordered_json to_json(const std::string& functor, const std::string& link,
                               const std::vector<ExpansionTerm>& terms);

std::string to_text(const RecursionReport& r);
std::string to_text(const RelationReport& r, bool verbose);
std::string to_text(const std::vector<ExpansionTerm>& terms);

}  // namespace skeinrec
