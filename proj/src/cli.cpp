#include "lgm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgm/catalog.hpp"
#include "lgm/errors.hpp"
#include "lgm/json_io.hpp"
#include "lgm/laurent.hpp"
#include "lgm/pencil.hpp"
#include "lgm/polytope.hpp"
#include "lgm/wci.hpp"

namespace lgm::cli {

namespace {

using jsonio::Json;

wci::NefPartition first_nice_partition(const wci::WeightedCIModel& m,
                                       int max_weights = 20) {
  for (const auto& p : wci::find_nef_partitions(m, max_weights))
    if (p.nice) return p;
  throw InvalidInput("model has no nice partition class");
}

std::string wci_spec_string(const wci::WeightedCIModel& m) {
  std::string s = "wci:";
  for (size_t i = 0; i < m.weights.size(); ++i)
    s += (i ? "," : "") + std::to_string(m.weights[i]);
  for (size_t i = 0; i < m.degrees.size(); ++i)
    s += (i ? "," : ";") + std::to_string(m.degrees[i]);
  return s;
}

std::string covering_spec_string(const std::pair<long long, long long>& c) {
  return "covering:" + std::to_string(c.first) + "," +
         std::to_string(c.second);
}

std::string display_name(const catalog::ModelRef& ref) {
  if (ref.catalog_name) return *ref.catalog_name;
  if (ref.covering) return covering_spec_string(*ref.covering);
  return wci_spec_string(ref.model);
}

std::vector<std::string> matrix_row_labels(const wci::NefPartition& p) {
  std::vector<std::string> labels;
  for (size_t part = 1; part < p.parts.size(); ++part) {
    for (size_t j = 1; j < p.parts[part].size(); ++j)
      labels.push_back(std::to_string(part) + "," + std::to_string(j));
    labels.push_back(std::to_string(part) + ",0");
  }
  for (size_t j = 1; j < p.parts[0].size(); ++j)
    labels.push_back("0," + std::to_string(j));
  return labels;
}

void emit_polytope(const polytope::RationalPolytope& p,
                   const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json j;
    j["schema_version"] = jsonio::kSchemaVersion;
    Json body = jsonio::polytope_json(p);
    for (auto& [key, value] : body.items()) j[key] = std::move(value);
    out << jsonio::dump(j);
    return;
  }
  for (const auto& v : p.vertices()) {
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(v[i]);
    out << "\n";
  }
}

void emit_lattice_points(const std::vector<polytope::IntVec>& pts,
                         const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json j;
    j["schema_version"] = jsonio::kSchemaVersion;
    Json rows = Json::array();
    for (const auto& p : pts) {
      Json row = Json::array();
      for (const auto& z : p) row.push_back(to_string(z));
      rows.push_back(std::move(row));
    }
    j["points"] = std::move(rows);
    out << jsonio::dump(j);
    return;
  }
  for (const auto& p : pts) {
    for (size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << to_string(p[i]);
    out << "\n";
  }
}

int cmd_periods(const std::string& input, int terms,
                std::string engine_name, const std::string& format,
                int max_terms, std::ostream& out) {
  if (terms < 1) throw InvalidInput("--terms must be at least 1");
  if (terms > max_terms)
    throw CapExceeded("requested " + std::to_string(terms) +
                      " terms, the cap is " + std::to_string(max_terms));

  std::optional<catalog::ModelRef> ref;
  if (input.find(':') != std::string::npos) {
    ref = catalog::parse_model_spec(input);
  } else {
    try {
      ref = catalog::parse_model_spec(input);
    } catch (const InvalidInput&) {
      // fall back to the polynomial grammar
    }
  }

  std::vector<Rat> seq;
  std::string engine_label;
  if (ref && engine_name.empty()) {
    seq = wci::iseries(ref->model, terms);
    engine_label = "closed-form";
  } else {
    laurent::LaurentPolynomial f;
    if (ref)
      f = wci::givental_polynomial(ref->model,
                                   first_nice_partition(ref->model));
    else
      f = laurent::parse_laurent(input).poly;
    if (engine_name.empty()) engine_name = "pruned";
    seq = laurent::period_sequence(f, terms,
                                   engine_name == "naive"
                                       ? laurent::Engine::naive
                                       : laurent::Engine::pruned);
    engine_label = engine_name;
  }

  if (format == "json") {
    Json j;
    j["schema_version"] = jsonio::kSchemaVersion;
    j["engine"] = engine_label;
    Json t = Json::array();
    for (const auto& q : seq) t.push_back(to_string(q));
    j["terms"] = std::move(t);
    out << jsonio::dump(j);
  } else {
    for (const auto& q : seq) out << to_string(q) << "\n";
  }
  return 0;
}

int cmd_polytope(const std::string& input, const std::string& op,
                 const std::string& format, int max_dim, std::ostream& out) {
  bool from_model = input.find(':') != std::string::npos ||
                    input.find(';') == std::string::npos;
  polytope::RationalPolytope base = [&] {
    if (from_model) {
      auto ref = catalog::parse_model_spec(input);
      if (ref.model.dim() > max_dim)
        throw CapExceeded("model dimension " +
                          std::to_string(ref.model.dim()) + " exceeds cap " +
                          std::to_string(max_dim));
      return polytope::newton_polytope(wci::givental_polynomial(
          ref.model, first_nice_partition(ref.model)));
    }
    std::vector<polytope::RatVec> pts;
    size_t at = 0;
    while (at <= input.size()) {
      size_t semi = input.find(';', at);
      std::string row = input.substr(at, semi - at);
      polytope::RatVec point;
      size_t ra = 0;
      while (ra <= row.size()) {
        size_t comma = row.find(',', ra);
        point.push_back(parse_rat(row.substr(ra, comma - ra)));
        if (comma == std::string::npos) break;
        ra = comma + 1;
      }
      pts.push_back(std::move(point));
      if (semi == std::string::npos) break;
      at = semi + 1;
    }
    if (!pts.empty() && static_cast<int>(pts[0].size()) > max_dim)
      throw CapExceeded("point dimension " + std::to_string(pts[0].size()) +
                        " exceeds cap " + std::to_string(max_dim));
    return polytope::RationalPolytope::convex_hull(pts);
  }();

  if (op == "newton") {
    if (!from_model)
      throw InvalidInput("the newton operation needs a model spec");
    emit_polytope(base, format, out);
  } else if (op == "dual") {
    emit_polytope(polytope::polar_dual(base), format, out);
  } else if (op == "reflexive") {
    bool r = polytope::is_reflexive(base);
    if (format == "json") {
      Json j;
      j["schema_version"] = jsonio::kSchemaVersion;
      j["reflexive"] = r;
      out << jsonio::dump(j);
    } else {
      out << (r ? "true" : "false") << "\n";
    }
  } else {  // boundary-points
    const polytope::RationalPolytope target =
        from_model ? polytope::polar_dual(base) : base;
    emit_lattice_points(polytope::integral_boundary_points(target), format,
                        out);
  }
  return 0;
}

int cmd_nef(const std::string& spec, const std::string& format,
            int max_weights, std::ostream& out) {
  std::string s = spec;
  if (!s.empty() && std::isdigit(static_cast<unsigned char>(s[0])))
    s = "wci:" + s;
  auto ref = catalog::parse_model_spec(s);
  auto ps = wci::find_nef_partitions(ref.model, max_weights);

  if (format == "json") {
    Json j;
    j["schema_version"] = jsonio::kSchemaVersion;
    j["model"] = jsonio::model_json(ref.model);
    Json parts = Json::array();
    for (const auto& p : ps) parts.push_back(jsonio::partition_json(ref.model, p));
    j["partitions"] = std::move(parts);
    out << jsonio::dump(j);
    return 0;
  }

  bool any_nice = false;
  for (size_t i = 0; i < ps.size(); ++i) {
    out << "class " << (i + 1) << ":";
    for (size_t part = 0; part < ps[i].parts.size(); ++part) {
      std::vector<long long> ws;
      for (int member : ps[i].parts[part])
        ws.push_back(ref.model.weights[member]);
      std::sort(ws.begin(), ws.end(), std::greater<>());
      out << " I" << part << "={";
      for (size_t w = 0; w < ws.size(); ++w) out << (w ? "," : "") << ws[w];
      out << "}";
    }
    if (ps[i].strong)
      out << " [nice, strong]";
    else if (ps[i].nice)
      out << " [nice]";
    else
      out << " [-]";
    out << "\n";
    any_nice = any_nice || ps[i].nice;
  }
  if (ps.empty())
    out << "no partitions\n";
  else if (!any_nice)
    out << "no nice partition\n";
  return 0;
}

int cmd_givental(const std::string& spec, const std::string& format,
                 std::ostream& out) {
  auto ref = catalog::parse_model_spec(spec);
  auto p = first_nice_partition(ref.model);
  auto f = wci::givental_polynomial(ref.model, p);
  auto vars = laurent::default_var_names(ref.model.dim());
  auto rows = wci::dual_matrix(ref.model, p);
  auto labels = matrix_row_labels(p);

  if (format == "json") {
    Json j;
    j["schema_version"] = jsonio::kSchemaVersion;
    j["model"] = display_name(ref);
    j["partition"] = jsonio::partition_json(ref.model, p);
    j["polynomial"] = jsonio::polynomial_json(f, vars);
    Json matrix = Json::array();
    for (size_t r = 0; r < rows.size(); ++r) {
      Json row;
      row["label"] = labels[r];
      Json values = Json::array();
      for (const auto& q : rows[r]) values.push_back(to_string(q));
      row["row"] = std::move(values);
      matrix.push_back(std::move(row));
    }
    j["dual_matrix"] = std::move(matrix);
    out << jsonio::dump(j);
    return 0;
  }

  out << "f = " << laurent::to_canonical_string(f, vars) << "\n";
  out << "dual matrix:\n";
  for (size_t r = 0; r < rows.size(); ++r) {
    out << labels[r] << ":";
    for (const auto& q : rows[r]) out << " " << to_string(q);
    out << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& spec, int conjecture,
               const std::string& format, std::ostream& out) {
  if (conjecture != 1 && conjecture != 2)
    throw InvalidInput("--conjecture must be 1 or 2");
  auto ref = catalog::parse_model_spec(spec);
  auto p = first_nice_partition(ref.model);
  std::string name = display_name(ref);
  std::optional<long long> hodge;
  if (ref.catalog_name) hodge = catalog::find(*ref.catalog_name)->hodge_input;

  Json payload = jsonio::fiber_report_json(name, ref.model, p, ref.covering,
                                           hodge);

  bool holds;
  if (conjecture == 1) {
    holds = payload["conjecture1"]["holds"].get<bool>();
  } else {
    if (payload["conjecture2"].is_null())
      throw Unsupported("no hodge comparison available for " + name);
    holds = payload["conjecture2"]["holds"].get<bool>();
  }

  if (format == "json") {
    out << jsonio::dump(payload);
  } else if (conjecture == 1) {
    out << "model: " << name << "\nroutes:";
    for (const auto& r : payload["conjecture1"]["routes"])
      out << " " << r.get<long long>();
    out << "\nholds: " << (holds ? "true" : "false") << "\n";
  } else {
    const auto& j2 = payload["conjecture2"];
    out << "model: " << name << "\nkappa: " << j2["kappa"].get<long long>()
        << "\nexpected: " << j2["expected"].get<long long>()
        << "\nholds: " << (holds ? "true" : "false")
        << "\nassumption: " << j2["assumption"].get<std::string>() << "\n";
  }
  return holds ? 0 : 5;
}

int cmd_dynkin(const std::string& spec, const std::string& format,
               std::ostream& out) {
  auto ref = catalog::parse_model_spec(spec);
  pencil::PencilModel pm;
  if (ref.covering)
    pm = pencil::compactified_pencil(
        wci::covering_model(ref.covering->first, ref.covering->second));
  else
    pm = pencil::compactified_pencil(ref.model,
                                     first_nice_partition(ref.model));
  if (pm.ambient_dim != 2)
    throw Unsupported("the fiber graph is drawn for surface pencils only");
  auto rep = pencil::central_fiber_report(pm);

  if (format == "dot") {
    out << "graph {\n";
    for (const auto& [id, mult] : rep.nodes)
      out << "  \"" << id << "\" [label=\"" << id << " (" << mult << ")\"];\n";
    for (const auto& e : rep.edges)
      out << "  \"" << e.a << "\" -- \"" << e.b << "\";\n";
    out << "}\n";
    return 0;
  }

  out << "label: " << (rep.dynkin.empty() ? "-" : rep.dynkin) << "\n";
  out << "arms: {";
  for (size_t i = 0; i < rep.arms.size(); ++i)
    out << (i ? "," : "") << rep.arms[i];
  out << "}\nnodes: " << rep.nodes.size() << "\n";
  return 0;
}

int cmd_catalog(const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json j;
    j["schema_version"] = jsonio::kSchemaVersion;
    Json entries = Json::array();
    for (const auto& e : catalog::entries())
      entries.push_back(jsonio::catalog_entry_json(e));
    j["entries"] = std::move(entries);
    out << jsonio::dump(j);
    return 0;
  }
  for (const auto& e : catalog::entries()) {
    out << e.name << "  " << wci_spec_string(e.model) << "  "
        << (e.covering ? covering_spec_string(*e.covering) : "-")
        << "  periods=";
    for (size_t i = 0; i < e.period_prefix.size(); ++i)
      out << (i ? "," : "") << to_string(e.period_prefix[i]);
    out << "  conjecture1=" << e.conjecture1_pinned;
    out << "  central="
        << (e.central_components ? std::to_string(*e.central_components)
                                 : "-");
    if (e.hodge_input)
      out << "  hodge=" << *e.hodge_input << " (" << e.hodge_provenance << ")";
    else
      out << "  hodge=-";
    out << "  dynkin=" << (e.dynkin.empty() ? "-" : e.dynkin) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact period and fiber bookkeeping for anticanonical pencils"};
  app.name("lgm");
  app.require_subcommand(1);

  bool meta = false;

  std::string p_input, p_engine, p_format = "text";
  int p_terms = 0, p_max_terms = 20;
  auto* periods = app.add_subcommand(
      "periods", "constant term sequence of a model or Laurent polynomial");
  periods->add_option("input", p_input, "model spec or polynomial")->required();
  periods->add_option("--terms", p_terms, "number of terms")->required();
  periods->add_option("--engine", p_engine, "expansion engine")
      ->check(CLI::IsMember({"naive", "pruned"}));
  periods->add_option("--format", p_format)->check(CLI::IsMember({"text", "json"}));
  periods->add_option("--max-terms", p_max_terms, "term cap");
  periods->add_flag("--meta", meta);

  std::string t_input, t_op, t_format = "text";
  int t_max_dim = 8;
  auto* poly = app.add_subcommand(
      "polytope", "polytope operations on a model or vertex list");
  poly->add_option("input", t_input, "model spec or semicolon vertex list")
      ->required();
  poly->add_option("--op", t_op, "operation")
      ->required()
      ->check(CLI::IsMember({"newton", "dual", "reflexive", "boundary-points"}));
  poly->add_option("--format", t_format)->check(CLI::IsMember({"text", "json"}));
  poly->add_option("--max-dim", t_max_dim, "dimension cap");
  poly->add_flag("--meta", meta);

  std::string n_spec, n_format = "text";
  int n_max_weights = 20;
  auto* nef = app.add_subcommand("nef", "partition classes of a model");
  nef->add_option("spec", n_spec, "model spec or weights;degrees")->required();
  nef->add_option("--format", n_format)->check(CLI::IsMember({"text", "json"}));
  nef->add_option("--max-weights", n_max_weights, "weight count cap");
  nef->add_flag("--meta", meta);

  std::string g_spec, g_format = "text";
  auto* giv = app.add_subcommand(
      "givental", "mirror polynomial and dual matrix of a model");
  giv->add_option("spec", g_spec, "model spec")->required();
  giv->add_option("--format", g_format)->check(CLI::IsMember({"text", "json"}));
  giv->add_flag("--meta", meta);

  std::string v_spec, v_format = "json";
  int v_conjecture = 0;
  auto* verify = app.add_subcommand("verify", "check a conjecture on a model");
  verify->add_option("spec", v_spec, "model spec")->required();
  verify->add_option("--conjecture", v_conjecture, "1 or 2")->required();
  verify->add_option("--format", v_format)
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--meta", meta);

  std::string d_spec, d_format = "text";
  auto* dynkin = app.add_subcommand(
      "dynkin", "central fiber graph of a surface pencil");
  dynkin->add_option("spec", d_spec, "model spec")->required();
  dynkin->add_option("--format", d_format)
      ->check(CLI::IsMember({"text", "dot"}));
  dynkin->add_flag("--meta", meta);

  std::string c_format = "text";
  bool c_json = false;
  auto* cat = app.add_subcommand("catalog", "list the worked models");
  cat->add_option("--format", c_format)->check(CLI::IsMember({"text", "json"}));
  cat->add_flag("--json", c_json, "shorthand for --format json");
  cat->add_flag("--meta", meta);

  std::vector<const char*> argv;
  argv.push_back("lgm");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    int code = 0;
    if (app.got_subcommand(periods))
      code = cmd_periods(p_input, p_terms, p_engine, p_format, p_max_terms, out);
    else if (app.got_subcommand(poly))
      code = cmd_polytope(t_input, t_op, t_format, t_max_dim, out);
    else if (app.got_subcommand(nef))
      code = cmd_nef(n_spec, n_format, n_max_weights, out);
    else if (app.got_subcommand(giv))
      code = cmd_givental(g_spec, g_format, out);
    else if (app.got_subcommand(verify))
      code = cmd_verify(v_spec, v_conjecture, v_format, out);
    else if (app.got_subcommand(dynkin))
      code = cmd_dynkin(d_spec, d_format, out);
    else if (app.got_subcommand(cat))
      code = cmd_catalog(c_json ? "json" : c_format, out);

    if (meta) {
      err << "meta: schema_version=" << jsonio::kSchemaVersion;
      for (auto* sub : app.get_subcommands()) err << " command=" << sub->get_name();
      err << "\n";
    }
    return code;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}

}  // namespace lgm::cli
