#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgm/numeric.hpp"
#include "lgm/polytope.hpp"
#include "lgm/wci.hpp"

namespace lgm::catalog {

// One worked model with its pinned regression values. Provenance strings say
// where a value comes from: "closed-form" (factorial ratio), "construction"
// (follows from the model data), "classical" (textbook invariant of the
// variety, recorded as input).
struct Entry {
  std::string name;
  std::vector<std::string> aliases;
  wci::WeightedCIModel model;
  std::optional<std::pair<long long, long long>> covering;  // (a, d)
  wci::NefPartition partition;

  std::vector<Rat> period_prefix;  // first 4 terms, closed form
  std::vector<polytope::RatVec> dual_vertices;
  bool reflexive = false;
  long long conjecture1_pinned = 0;
  std::optional<long long> central_components;
  std::optional<long long> hodge_input;
  std::string hodge_provenance;
  std::vector<long long> arms;  // surfaces
  std::string dynkin;           // surfaces
};

const std::vector<Entry>& entries();

const Entry* find(const std::string& name);  // name or alias, else nullptr

// "dp1".."dp3", catalog aliases, "wci:w,w,..;d,d,..", "covering:a,d".
struct ModelRef {
  wci::WeightedCIModel model;
  std::optional<std::pair<long long, long long>> covering;
  std::optional<std::string> catalog_name;
};
ModelRef parse_model_spec(const std::string& spec);

}  // namespace lgm::catalog
