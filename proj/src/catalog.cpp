#include "lgm/catalog.hpp"

#include <algorithm>

#include "lgm/errors.hpp"

namespace lgm::catalog {

namespace {

polytope::RatVec rv(std::vector<std::pair<long long, long long>> qs) {
  polytope::RatVec out;
  for (auto [n, d] : qs) out.push_back(make_rat(n, d));
  return out;
}

Entry base_entry(std::string name, std::vector<std::string> aliases,
                 std::vector<long long> weights, std::vector<long long> degrees,
                 std::optional<std::pair<long long, long long>> covering) {
  Entry e;
  e.name = std::move(name);
  e.aliases = std::move(aliases);
  e.model = wci::make_model(std::move(weights), std::move(degrees));
  e.covering = covering;
  auto ps = wci::find_nef_partitions(e.model);
  if (ps.size() != 1 || !ps[0].nice)
    throw InvalidInput("catalog model must have a unique nice partition");
  e.partition = ps[0];
  for (long long u = 0; u < 4; ++u)
    e.period_prefix.push_back(wci::closed_form_period(e.model, u));
  return e;
}

std::vector<Entry> build() {
  std::vector<Entry> es;

  {
    auto e = base_entry("dp3", {}, {1, 1, 1, 1}, {3}, std::nullopt);
    e.dual_vertices = {rv({{-1, 1}, {-1, 1}}), rv({{0, 1}, {1, 1}}),
                       rv({{1, 1}, {0, 1}})};
    e.reflexive = true;
    e.conjecture1_pinned = 3;
    e.central_components = 7;
    e.hodge_input = 7;
    e.hodge_provenance = "classical";
    e.arms = {2, 2, 2};
    e.dynkin = "E6~";
    es.push_back(std::move(e));
  }
  {
    auto e = base_entry("dp2", {"covering:2,2"}, {1, 1, 1, 2}, {4},
                        std::make_pair(2LL, 2LL));
    e.dual_vertices = {rv({{-1, 2}, {-1, 2}}), rv({{0, 1}, {1, 1}}),
                       rv({{1, 1}, {0, 1}})};
    e.reflexive = false;
    e.conjecture1_pinned = 2;
    e.central_components = 8;
    e.hodge_input = 8;
    e.hodge_provenance = "classical";
    e.arms = {3, 3, 1};
    e.dynkin = "E7~";
    es.push_back(std::move(e));
  }
  {
    auto e = base_entry("dp1", {}, {1, 1, 2, 3}, {6}, std::nullopt);
    e.dual_vertices = {rv({{-1, 3}, {-1, 3}}), rv({{0, 1}, {1, 2}}),
                       rv({{1, 1}, {0, 1}})};
    e.reflexive = false;
    e.conjecture1_pinned = 1;
    e.central_components = 9;
    e.hodge_input = 9;
    e.hodge_provenance = "classical";
    e.arms = {5, 2, 1};
    e.dynkin = "E8~";
    es.push_back(std::move(e));
  }
  {
    auto e = base_entry("sextic-double-solid", {"covering:2,3"},
                        {1, 1, 1, 1, 3}, {6}, std::make_pair(2LL, 3LL));
    e.dual_vertices = {rv({{-1, 3}, {-1, 3}, {-1, 3}}),
                       rv({{0, 1}, {0, 1}, {1, 1}}),
                       rv({{0, 1}, {1, 1}, {0, 1}}),
                       rv({{1, 1}, {0, 1}, {0, 1}})};
    e.reflexive = false;
    e.conjecture1_pinned = 3;
    e.central_components = 53;
    e.hodge_input = 52;
    e.hodge_provenance = "classical";
    es.push_back(std::move(e));
  }
  {
    auto e = base_entry("covering-3-2", {"covering:3,2"}, {1, 1, 1, 1, 1, 2},
                        {6}, std::make_pair(3LL, 2LL));
    e.dual_vertices = {rv({{-1, 2}, {-1, 2}, {-1, 2}, {-1, 2}}),
                       rv({{0, 1}, {0, 1}, {0, 1}, {1, 1}}),
                       rv({{0, 1}, {0, 1}, {1, 1}, {0, 1}}),
                       rv({{0, 1}, {1, 1}, {0, 1}, {0, 1}}),
                       rv({{1, 1}, {0, 1}, {0, 1}, {0, 1}})};
    e.reflexive = false;
    e.conjecture1_pinned = 4;
    es.push_back(std::move(e));
  }
  {
    auto e = base_entry("quartic-threefold", {"covering:4,1"},
                        {1, 1, 1, 1, 1}, {4}, std::make_pair(4LL, 1LL));
    e.dual_vertices = {rv({{-1, 1}, {-1, 1}, {-1, 1}}),
                       rv({{0, 1}, {0, 1}, {1, 1}}),
                       rv({{0, 1}, {1, 1}, {0, 1}}),
                       rv({{1, 1}, {0, 1}, {0, 1}})};
    e.reflexive = true;
    e.conjecture1_pinned = 3;
    e.central_components = 31;
    e.hodge_input = 30;
    e.hodge_provenance = "classical";
    es.push_back(std::move(e));
  }
  return es;
}

std::vector<long long> parse_ll_list(const std::string& text) {
  std::vector<long long> out;
  size_t at = 0;
  while (true) {
    size_t comma = text.find(',', at);
    out.push_back(parse_ll(text.substr(at, comma - at)));
    if (comma == std::string::npos) break;
    at = comma + 1;
  }
  return out;
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> es = build();
  return es;
}

const Entry* find(const std::string& name) {
  for (const auto& e : entries()) {
    if (e.name == name) return &e;
    for (const auto& a : e.aliases)
      if (a == name) return &e;
  }
  return nullptr;
}

ModelRef parse_model_spec(const std::string& spec) {
  if (spec.rfind("wci:", 0) == 0) {
    std::string body = spec.substr(4);
    size_t semi = body.find(';');
    std::vector<long long> weights =
        parse_ll_list(semi == std::string::npos ? body : body.substr(0, semi));
    std::vector<long long> degrees;
    if (semi != std::string::npos)
      degrees = parse_ll_list(body.substr(semi + 1));
    ModelRef ref{wci::make_model(std::move(weights), std::move(degrees)),
                 std::nullopt, std::nullopt};
    for (const auto& e : entries())
      if (e.model == ref.model) {
        ref.catalog_name = e.name;
        ref.covering = e.covering;
        break;
      }
    return ref;
  }
  if (spec.rfind("covering:", 0) == 0) {
    auto params = parse_ll_list(spec.substr(9));
    if (params.size() != 2)
      throw InvalidInput("covering spec needs exactly two parameters");
    auto c = wci::covering_model(params[0], params[1]);
    ModelRef ref{c.model, std::make_pair(c.a, c.d), std::nullopt};
    for (const auto& e : entries())
      if (e.model == ref.model) {
        ref.catalog_name = e.name;
        break;
      }
    return ref;
  }
  if (const Entry* e = find(spec)) return {e->model, e->covering, e->name};
  throw InvalidInput("unknown model '" + spec + "'");
}

}  // namespace lgm::catalog
