#include "lgm/json_io.hpp"

#include "lgm/errors.hpp"

namespace lgm::jsonio {

namespace {

Json rat_vec_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace

Json polynomial_json(const laurent::LaurentPolynomial& f,
                     const std::vector<std::string>& vars) {
  Json out;
  out["vars"] = vars;
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json term;
    term["exp"] = t.exp;
    term["num"] = to_string(rat_num(t.coeff));
    term["den"] = to_string(rat_den(t.coeff));
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json polytope_json(const polytope::RationalPolytope& p) {
  Json out;
  out["dim"] = p.dim();
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(rat_vec_json(v));
  out["vertices"] = std::move(vertices);
  Json facets = Json::array();
  for (const auto& f : p.facets()) {
    Json facet;
    Json normal = Json::array();
    for (const auto& z : f.normal)
      normal.push_back(z.convert_to<long long>());
    facet["normal"] = std::move(normal);
    facet["offset"] = to_string(f.offset);
    facets.push_back(std::move(facet));
  }
  out["facets"] = std::move(facets);
  return out;
}

Json partition_json(const wci::WeightedCIModel& model,
                    const wci::NefPartition& p) {
  (void)model;
  Json out;
  out["parts"] = p.parts;
  out["nice"] = p.nice;
  out["strong"] = p.strong;
  return out;
}

Json model_json(const wci::WeightedCIModel& model) {
  Json out;
  out["weights"] = model.weights;
  out["degrees"] = model.degrees;
  out["index"] = model.index();
  out["dim"] = model.dim();
  return out;
}

Json fiber_report_json(
    const std::string& model_name, const wci::WeightedCIModel& model,
    const wci::NefPartition& partition,
    const std::optional<std::pair<long long, long long>>& covering,
    const std::optional<long long>& hodge_input) {
  pencil::PencilModel pm;
  if (covering)
    pm = pencil::compactified_pencil(
        wci::covering_model(covering->first, covering->second));
  else
    pm = pencil::compactified_pencil(model, partition);

  Json out;
  out["schema_version"] = kSchemaVersion;
  out["model"] = model_name;

  auto inf = pencil::infinity_fiber_report(pm);
  Json jinf;
  jinf["components"] = inf.components;
  jinf["contracted"] = inf.contracted;
  jinf["singular"] = inf.singular;
  if (inf.singular) jinf["singularity"] = inf.singularity_type;
  out["infinity"] = std::move(jinf);

  std::optional<pencil::CentralReport> central;
  if (pm.counting_enabled) {
    try {
      central = pencil::central_fiber_report(pm);
    } catch (const Unsupported&) {
    }
  }
  if (central) {
    Json jc;
    jc["components"] = central->components;
    Json breakdown = Json::array();
    for (const auto& [id, n] : central->breakdown) {
      Json row;
      row["stratum"] = id;
      row["count"] = n;
      breakdown.push_back(std::move(row));
    }
    jc["breakdown"] = std::move(breakdown);
    out["central"] = std::move(jc);
  } else {
    out["central"] = nullptr;
  }

  auto chk = pencil::verify_conjecture_components(model, partition);
  Json j1;
  j1["routes"] = chk.routes;
  j1["holds"] = chk.holds;
  out["conjecture1"] = std::move(j1);

  if (hodge_input && central) {
    auto hodge = pencil::verify_conjecture_hodge(pm, *hodge_input);
    Json j2;
    j2["kappa"] = hodge.kappa;
    j2["expected"] = hodge.expected;
    j2["holds"] = hodge.holds;
    j2["assumption"] = hodge.assumption;
    if (!hodge.note.empty()) j2["note"] = hodge.note;
    out["conjecture2"] = std::move(j2);
  } else {
    out["conjecture2"] = nullptr;
  }
  return out;
}

Json catalog_entry_json(const catalog::Entry& e) {
  Json out;
  out["name"] = e.name;
  out["aliases"] = e.aliases;
  out["model"] = model_json(e.model);
  if (e.covering)
    out["covering"] = Json::array({e.covering->first, e.covering->second});
  else
    out["covering"] = nullptr;
  out["partition"] = partition_json(e.model, e.partition);
  out["periods"] = rat_vec_json(e.period_prefix);
  Json duals = Json::array();
  for (const auto& v : e.dual_vertices) duals.push_back(rat_vec_json(v));
  out["dual_vertices"] = std::move(duals);
  out["reflexive"] = e.reflexive;
  out["conjecture1"] = e.conjecture1_pinned;
  if (e.central_components)
    out["central_components"] = *e.central_components;
  else
    out["central_components"] = nullptr;
  if (e.hodge_input) {
    Json h;
    h["value"] = *e.hodge_input;
    h["provenance"] = e.hodge_provenance;
    out["hodge"] = std::move(h);
  } else {
    out["hodge"] = nullptr;
  }
  out["arms"] = e.arms;
  out["dynkin"] = e.dynkin;
  return out;
}

std::string dump(const Json& payload) { return payload.dump(2) + "\n"; }

}  // namespace lgm::jsonio
