#include "lgm/pencil.hpp"

#include <algorithm>
#include <set>

#include "lgm/errors.hpp"
#include "lgm/polytope.hpp"

namespace lgm::pencil {

namespace {

PencilModel build_pencil(
    const wci::WeightedCIModel& model, const wci::NefPartition& p,
    std::optional<std::pair<long long, long long>> covering) {
  if (!p.nice) throw InvalidInput("pencil requires a nice partition");
  if (model.index() != 1)
    throw Unsupported("pencil compactification needs an index-one model");

  // Parts with no slot contribute a constant numerator factor, so they drop
  // out of the pencil bookkeeping entirely.
  std::vector<size_t> live;
  for (size_t i = 1; i < p.parts.size(); ++i)
    if (p.parts[i].size() >= 2) live.push_back(i);
  if (live.empty()) throw Unsupported("pencil has no moving numerator factor");

  PencilModel pm;
  pm.covering = covering;
  for (size_t i : live)
    pm.factor_dims.push_back(static_cast<long long>(p.parts[i].size()) - 1);
  long long ambient = 0;
  for (long long d : pm.factor_dims) ambient += d;
  pm.ambient_dim = static_cast<int>(ambient);

  if (ambient < 2) throw Unsupported("ambient dimension below two");
  if (ambient >= 3 && live.size() >= 2)
    throw Unsupported(
        "several central components need a two-dimensional ambient");

  if (live.size() == 1) {
    pm.central.push_back(
        {ambient == 2 ? "l" : "H", model.degrees[live[0] - 1]});
  } else {
    for (size_t t = 0; t < live.size(); ++t)
      pm.central.push_back(
          {"C" + std::to_string(t + 1), model.degrees[live[t] - 1]});
  }

  // Boundary components, one per slot plus one per distinguished element,
  // grouped by part: slots first, the distinguished element last.
  std::vector<size_t> source_part;  // index into live, per infinity component
  for (size_t t = 0; t < live.size(); ++t) {
    const auto& part = p.parts[live[t]];
    std::vector<int> members(part.begin() + 1, part.end());
    members.push_back(part[0]);
    for (int m : members) {
      pm.infinity.push_back({"", model.weights[m]});
      source_part.push_back(t);
    }
  }
  if (ambient == 2) {
    for (size_t t = 0; t < pm.infinity.size(); ++t)
      pm.infinity[t].id = "l" + std::to_string(t + 1);
  } else {
    // single part: slots H1..Hm, distinguished H0
    for (size_t t = 0; t + 1 < pm.infinity.size(); ++t)
      pm.infinity[t].id = "H" + std::to_string(t + 1);
    pm.infinity.back().id = "H0";
  }

  pm.counting_enabled = ambient <= 3;
  if (!pm.counting_enabled) return pm;

  if (ambient == 2) {
    for (size_t t = 0; t < pm.infinity.size(); ++t) {
      const Component* partner;
      if (live.size() == 1) {
        partner = &pm.central[0];
      } else {
        // the boundary component misses its own factor's section and meets
        // the other strict transform
        partner = &pm.central[source_part[t] == 0 ? 1 : 0];
      }
      pm.strata.push_back({Stratum::Kind::surface_point,
                           "p" + std::to_string(t + 1),
                           partner->id,
                           partner->mult,
                           {pm.infinity[t].id},
                           {pm.infinity[t].mult}});
    }
    return pm;
  }

  // Threefold, one central component H of multiplicity M. Boundary labels in
  // numeric order, H0 first.
  long long M = pm.central[0].mult;
  std::vector<const Component*> by_number;
  by_number.push_back(&pm.infinity.back());  // H0
  for (size_t t = 0; t + 1 < pm.infinity.size(); ++t)
    by_number.push_back(&pm.infinity[t]);
  for (size_t j = 0; j < by_number.size(); ++j)
    pm.strata.push_back({Stratum::Kind::threefold_curve,
                         "B" + std::to_string(j),
                         "H",
                         M,
                         {by_number[j]->id},
                         {by_number[j]->mult}});
  for (size_t j = 0; j < by_number.size(); ++j)
    for (size_t l = j + 1; l < by_number.size(); ++l) {
      const Component* a = by_number[j];
      const Component* b = by_number[l];
      if (a->mult < b->mult || (a->mult == b->mult && a->id > b->id))
        std::swap(a, b);
      pm.strata.push_back({Stratum::Kind::threefold_point,
                           "P" + std::to_string(j) + std::to_string(l),
                           "H",
                           M,
                           {a->id, b->id},
                           {a->mult, b->mult}});
    }
  return pm;
}

}  // namespace

PencilModel compactified_pencil(const wci::WeightedCIModel& model,
                                const wci::NefPartition& p) {
  return build_pencil(model, p, std::nullopt);
}

PencilModel compactified_pencil(const wci::CoveringModel& c) {
  return build_pencil(c.model, wci::covering_partition(c),
                      std::make_pair(c.a, c.d));
}

CurveCount curve_stratum_count(long long M, long long m) {
  if (M < 1 || m < 1) throw InvalidInput("multiplicities must be positive");
  if (M % m != 0)
    throw Unsupported("boundary multiplicity " + std::to_string(m) +
                      " does not divide " + std::to_string(M));
  return {M / m, M / m - 1};
}

long long point_stratum_count_threefold(long long M, long long p) {
  if (M < 1 || p < 1) throw InvalidInput("multiplicities must be positive");
  if (M % p != 0)
    throw Unsupported("boundary multiplicity " + std::to_string(p) +
                      " does not divide " + std::to_string(M));
  long long total = 0;
  for (long long s = 1; s <= M / p - 1; ++s) total += M - s * p - 1;
  return total;
}

CentralReport central_fiber_report(const PencilModel& pm) {
  if (!pm.counting_enabled)
    throw Unsupported(
        "component counting is disabled above ambient dimension three");
  CentralReport rep;
  rep.breakdown.emplace_back("strict",
                             static_cast<long long>(pm.central.size()));
  long long total = static_cast<long long>(pm.central.size());

  struct Chain {
    const Stratum* s;
    long long count;
  };
  std::vector<Chain> chains;
  for (const auto& s : pm.strata) {
    long long n;
    if (s.kind == Stratum::Kind::threefold_point) {
      if (s.inf_mults[1] != 1)
        throw Unsupported(
            "point stratum with both boundary multiplicities above one");
      n = point_stratum_count_threefold(s.central_mult, s.inf_mults[0]);
    } else {
      n = curve_stratum_count(s.central_mult, s.inf_mults[0]).exceptionals;
    }
    rep.breakdown.emplace_back(s.id, n);
    total += n;
    if (s.kind == Stratum::Kind::surface_point) chains.push_back({&s, n});
  }
  rep.components = total;

  if (pm.ambient_dim != 2) return rep;

  for (const auto& c : chains)
    if (c.count > 0) rep.arms.push_back(c.count);
  if (pm.central.size() == 1) {
    auto sorted = rep.arms;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted == std::vector<long long>{2, 2, 2}) rep.dynkin = "E6~";
    if (sorted == std::vector<long long>{3, 3, 1}) rep.dynkin = "E7~";
    if (sorted == std::vector<long long>{5, 2, 1}) rep.dynkin = "E8~";
  }

  for (const auto& c : pm.central) rep.nodes.emplace_back(c.id, c.mult);
  if (pm.central.size() == 2) rep.edges.push_back({"C1", "C2"});
  for (const auto& c : chains) {
    std::string prev = c.s->central_id;
    for (long long step = 1; step <= c.count; ++step) {
      std::string id = c.s->id + ".E" + std::to_string(step);
      rep.nodes.emplace_back(id,
                             c.s->central_mult - step * c.s->inf_mults[0]);
      rep.edges.push_back({prev, id});
      prev = id;
    }
  }
  return rep;
}

InfinityReport infinity_fiber_report(const PencilModel& pm) {
  InfinityReport rep;
  for (const auto& c : pm.infinity) {
    if (c.mult == 1)
      rep.components++;
    else
      rep.contracted.push_back(c.id);
  }
  if (pm.covering && pm.covering->first > 2 && pm.ambient_dim >= 3) {
    rep.singular = true;
    std::string ones;
    for (int i = 0; i < pm.ambient_dim; ++i)
      ones += (i ? ",1" : "1");
    rep.singularity_type =
        "1/" + std::to_string(pm.covering->first - 1) + "(" + ones + ")";
  }
  return rep;
}

ComponentsCheck verify_conjecture_components(const wci::WeightedCIModel& model,
                                             const wci::NefPartition& p) {
  ComponentsCheck chk;
  chk.routes.push_back(
      infinity_fiber_report(compactified_pencil(model, p)).components);
  auto dual = polytope::polar_dual(
      polytope::newton_polytope(wci::givental_polynomial(model, p)));
  chk.routes.push_back(
      static_cast<long long>(polytope::integral_boundary_points(dual).size()));
  chk.routes.push_back(wci::anticanonical_sections(model) - 1);
  chk.holds = chk.routes[0] == chk.routes[1] && chk.routes[1] == chk.routes[2];
  return chk;
}

HodgeCheck verify_conjecture_hodge(const PencilModel& pm, long long h_input) {
  HodgeCheck chk;
  chk.kappa = central_fiber_report(pm).components - 1;
  chk.expected = pm.ambient_dim == 2 ? h_input - 1 : h_input;
  chk.holds = chk.kappa == chk.expected;
  chk.assumption = "central fiber is the only reducible fiber";
  if (pm.ambient_dim == 2)
    chk.note = "surface input is lowered by one before the comparison";
  return chk;
}

std::vector<LabeledRay> covering_fan_rays(long long a, long long d) {
  if (a < 2) throw InvalidInput("covering degree must be at least two");
  if (d < 1) throw InvalidInput("branch parameter must be positive");
  long long alpha = (a - 1) * d;
  if (alpha < 2) throw InvalidInput("fan needs ambient dimension at least two");
  std::vector<LabeledRay> rays;
  for (long long i = 0; i < alpha; ++i) {
    std::vector<long long> e(alpha, 0);
    e[i] = 1;
    rays.push_back({"v" + std::to_string(i), std::move(e)});
  }
  rays.push_back(
      {"v" + std::to_string(alpha), std::vector<long long>(alpha, -1)});
  for (long long i = 1; i <= a; ++i) {
    std::vector<long long> u(alpha, 0);
    u[0] = i;
    u[1] = 1;
    rays.push_back({"u" + std::to_string(i), std::move(u)});
  }

  // (a-1) v0 = u_a + v2 + .. + v_alpha; the contraction this fan encodes
  for (long long i = 0; i < alpha; ++i) {
    long long rhs = rays[alpha + a].vec[i];
    for (long long j = 2; j <= alpha; ++j) rhs += rays[j].vec[i];
    if (rhs != (a - 1) * rays[0].vec[i])
      throw InvalidInput("fan contraction relation violated");
  }
  return rays;
}

FlopCertificate flop_obstruction(long long a, long long d) {
  auto rays = covering_fan_rays(a, d);
  long long alpha = (a - 1) * d;
  FlopCertificate cert;
  cert.hyperplane.assign(alpha, rat_ll(1));
  cert.hyperplane[0] = make_rat(alpha, a - 1);
  cert.hyperplane[1] = make_rat(a - alpha * a - 1, a - 1);

  std::set<std::string> on;
  for (const auto& r : rays) {
    Rat dot = rat_ll(0);
    for (long long i = 0; i < alpha; ++i)
      dot += cert.hyperplane[i] * rat_ll(r.vec[i]);
    if (dot == rat_ll(1)) {
      cert.on_hyperplane.push_back(r.label);
      on.insert(r.label);
    }
  }

  if (a == 2) {
    cert.verdict = FlopVerdict::not_obstructed;
    return cert;
  }
  std::set<std::string> expected;
  for (long long j = 2; j <= alpha; ++j) expected.insert("v" + std::to_string(j));
  expected.insert("u" + std::to_string(a));
  cert.verdict = on == expected ? FlopVerdict::obstructed
                                : FlopVerdict::not_obstructed_by_certificate;
  return cert;
}

}  // namespace lgm::pencil
