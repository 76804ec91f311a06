#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "lgm/catalog.hpp"
#include "lgm/laurent.hpp"
#include "lgm/pencil.hpp"
#include "lgm/polytope.hpp"
#include "lgm/wci.hpp"

namespace lgm::jsonio {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"vars": [...], "terms": [{"exp": [...], "num": "p", "den": "q"}, ...]}
Json polynomial_json(const laurent::LaurentPolynomial& f,
                     const std::vector<std::string>& vars);

// {"dim": n, "vertices": [["p/q", ...], ...],
//  "facets": [{"normal": [...], "offset": "p/q"}, ...]}
Json polytope_json(const polytope::RationalPolytope& p);

Json partition_json(const wci::WeightedCIModel& model, const wci::NefPartition& p);

Json model_json(const wci::WeightedCIModel& model);

// Full fiber report for one model: infinity / central blocks plus both
// conjecture verdicts. Blocks that are unsupported for the model are null.
Json fiber_report_json(const std::string& model_name,
                       const wci::WeightedCIModel& model,
                       const wci::NefPartition& partition,
                       const std::optional<std::pair<long long, long long>>& covering,
                       const std::optional<long long>& hodge_input);

Json catalog_entry_json(const catalog::Entry& e);

// Payload emission used by the CLI: stable field order, schema_version first,
// no timestamps. A fixed 2-space indentation keeps output byte-identical
// across runs.
std::string dump(const Json& payload);

}  // namespace lgm::jsonio
