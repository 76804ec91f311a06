#include "lgm/wci.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "lgm/errors.hpp"

namespace lgm::wci {

long long WeightedCIModel::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0LL);
}

long long WeightedCIModel::degree_sum() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0LL);
}

long long WeightedCIModel::index() const { return weight_sum() - degree_sum(); }

int WeightedCIModel::dim() const {
  return static_cast<int>(weights.size()) - 1 - static_cast<int>(degrees.size());
}

WeightedCIModel make_model(std::vector<long long> weights,
                           std::vector<long long> degrees) {
  if (weights.empty()) throw InvalidInput("model needs at least one weight");
  for (long long w : weights)
    if (w < 1) throw InvalidInput("weights must be positive");
  for (long long d : degrees)
    if (d < 2) throw InvalidInput("degrees must be at least two");
  std::sort(weights.begin(), weights.end());
  std::sort(degrees.begin(), degrees.end());
  WeightedCIModel m{std::move(weights), std::move(degrees)};
  if (m.index() < 1) throw InvalidInput("model must have positive index");
  return m;
}

namespace {

struct DistinctWeights {
  std::vector<long long> value;        // ascending distinct weights
  std::vector<int> multiplicity;       // how many of each
  std::vector<std::vector<int>> slots; // original indices per value, ascending
};

DistinctWeights split_weights(const WeightedCIModel& m) {
  DistinctWeights out;
  for (size_t i = 0; i < m.weights.size(); ++i) {
    if (out.value.empty() || out.value.back() != m.weights[i]) {
      out.value.push_back(m.weights[i]);
      out.multiplicity.push_back(0);
      out.slots.emplace_back();
    }
    out.multiplicity.back()++;
    out.slots.back().push_back(static_cast<int>(i));
  }
  return out;
}

// Count vectors (n_1..n_t) with sum n_j * w_j = target and n_j <= avail_j,
// in ascending lexicographic order.
void enumerate_count_vectors(const std::vector<long long>& w,
                             const std::vector<int>& avail, long long target,
                             std::vector<int>& current, size_t at,
                             std::vector<std::vector<int>>& out) {
  if (at == w.size()) {
    if (target == 0) out.push_back(current);
    return;
  }
  for (int n = 0; n <= avail[at] && n * w[at] <= target; ++n) {
    current[at] = n;
    enumerate_count_vectors(w, avail, target - n * w[at], current, at + 1, out);
  }
  current[at] = 0;
}

// Orders a part: the distinguished element first, then the remaining slots
// ascending by (weight, index). Parts i >= 1 distinguish their largest
// weight; I_0 prefers a unit so that niceness is visible in the layout.
std::vector<int> order_part(const WeightedCIModel& m, std::vector<int> members,
                            bool pencil_part) {
  std::sort(members.begin(), members.end(), [&](int a, int b) {
    if (m.weights[a] != m.weights[b]) return m.weights[a] < m.weights[b];
    return a < b;
  });
  size_t pick;
  if (pencil_part && m.weights[members.front()] == 1) {
    pick = 0;  // smallest unit
  } else {
    // smallest index among the maximal weights
    pick = members.size() - 1;
    while (pick > 0 && m.weights[members[pick - 1]] == m.weights[members.back()])
      --pick;
  }
  std::vector<int> out;
  out.push_back(members[pick]);
  for (size_t i = 0; i < members.size(); ++i)
    if (i != pick) out.push_back(members[i]);
  return out;
}

NefPartition assemble(const WeightedCIModel& m, const DistinctWeights& dw,
                      const std::vector<std::vector<int>>& counts) {
  // Hand out concrete indices: for each weight value, parts take the
  // ascending indices in part order.
  std::vector<size_t> cursor(dw.value.size(), 0);
  NefPartition p;
  for (const auto& count : counts) {
    std::vector<int> members;
    for (size_t j = 0; j < count.size(); ++j)
      for (int c = 0; c < count[j]; ++c)
        members.push_back(dw.slots[j][cursor[j]++]);
    p.parts.push_back(order_part(m, std::move(members), p.parts.empty()));
  }
  p.nice = m.weights[p.parts[0][0]] == 1;
  p.strong = p.nice;
  for (size_t i = 1; i < p.parts[0].size() && p.strong; ++i)
    if (m.weights[p.parts[0][i]] != 1) p.strong = false;
  for (size_t i = 1; i < p.parts.size() && p.strong; ++i)
    for (int member : p.parts[i])
      if (m.degrees[i - 1] % m.weights[member] != 0) p.strong = false;
  return p;
}

void search(const WeightedCIModel& m, const DistinctWeights& dw,
            std::vector<int>& remaining, long long last_target,
            std::vector<std::vector<int>>& chosen, size_t part,
            std::vector<NefPartition>& out) {
  size_t k = m.degrees.size();
  if (part == k) {
    long long rest = 0;
    for (size_t j = 0; j < dw.value.size(); ++j)
      rest += remaining[j] * dw.value[j];
    if (rest != last_target) return;
    chosen.push_back(remaining);
    out.push_back(assemble(m, dw, chosen));
    chosen.pop_back();
    return;
  }
  long long target = part == 0 ? m.index() : m.degrees[part - 1];
  std::vector<std::vector<int>> vectors;
  std::vector<int> current(dw.value.size(), 0);
  enumerate_count_vectors(dw.value, remaining, target, current, 0, vectors);
  for (const auto& v : vectors) {
    for (size_t j = 0; j < v.size(); ++j) remaining[j] -= v[j];
    chosen.push_back(v);
    search(m, dw, remaining, last_target, chosen, part + 1, out);
    chosen.pop_back();
    for (size_t j = 0; j < v.size(); ++j) remaining[j] += v[j];
  }
}

}  // namespace

std::vector<NefPartition> find_nef_partitions(const WeightedCIModel& model,
                                              int max_weights) {
  if (static_cast<int>(model.weights.size()) > max_weights)
    throw CapExceeded("model has " + std::to_string(model.weights.size()) +
                      " weights, cap is " + std::to_string(max_weights));
  DistinctWeights dw = split_weights(model);
  std::vector<int> remaining = dw.multiplicity;
  std::vector<std::vector<int>> chosen;
  std::vector<NefPartition> out;
  long long last_target =
      model.degrees.empty() ? model.index() : model.degrees.back();
  search(model, dw, remaining, last_target, chosen, 0, out);
  return out;
}

std::vector<VarSlot> variable_slots(const WeightedCIModel& model,
                                    const NefPartition& p) {
  std::vector<VarSlot> out;
  auto push_part = [&](size_t part) {
    for (size_t i = 1; i < p.parts[part].size(); ++i) {
      int idx = p.parts[part][i];
      out.push_back({static_cast<int>(part), idx, model.weights[idx]});
    }
  };
  for (size_t part = 1; part < p.parts.size(); ++part) push_part(part);
  push_part(0);
  return out;
}

laurent::LaurentPolynomial givental_polynomial(const WeightedCIModel& model,
                                               const NefPartition& p) {
  if (!p.nice)
    throw InvalidInput("givental polynomial requires a nice partition");
  auto slots = variable_slots(model, p);
  int n = static_cast<int>(slots.size());
  using laurent::LaurentPolynomial;

  auto var = [&](int slot) {
    laurent::Exponents e(n, 0);
    e[slot] = 1;
    return LaurentPolynomial::monomial(n, e, rat_ll(1));
  };

  LaurentPolynomial numerator = LaurentPolynomial::constant(n, rat_ll(1));
  for (size_t part = 1; part < p.parts.size(); ++part) {
    LaurentPolynomial linear = LaurentPolynomial::constant(n, rat_ll(1));
    for (int s = 0; s < n; ++s)
      if (slots[s].part == static_cast<int>(part))
        linear = laurent::add(linear, var(s));
    numerator =
        laurent::multiply(numerator, laurent::pow(linear, model.degrees[part - 1]));
  }

  laurent::Exponents denom(n, 0);
  for (int s = 0; s < n; ++s) denom[s] = slots[s].weight;
  LaurentPolynomial f = laurent::multiply(
      numerator,
      laurent::pow(LaurentPolynomial::monomial(n, denom, rat_ll(1)), -1));

  for (int s = 0; s < n; ++s)
    if (slots[s].part == 0) f = laurent::add(f, var(s));
  return f;
}

Rat closed_form_period(const WeightedCIModel& model, long long u) {
  if (u < 0) throw InvalidInput("closed form needs a nonnegative power");
  Int num = factorial(model.index() * u);
  for (long long d : model.degrees) num *= factorial(d * u);
  Int den = 1;
  for (long long a : model.weights) den *= factorial(a * u);
  return make_rat(num, den);
}

std::vector<Rat> iseries(const WeightedCIModel& model, int n_terms) {
  std::vector<Rat> out(std::max(n_terms, 0), rat_ll(0));
  long long step = model.index();
  for (long long j = 0; j * step < n_terms; ++j)
    out[j * step] = closed_form_period(model, j);
  return out;
}

std::vector<std::vector<Rat>> dual_matrix(const WeightedCIModel& model,
                                          const NefPartition& p) {
  if (!p.nice) throw InvalidInput("dual matrix requires a nice partition");
  auto slots = variable_slots(model, p);
  int n = static_cast<int>(slots.size());
  Rat ix = rat_ll(model.index());
  std::vector<std::vector<Rat>> rows;

  std::vector<int> zero_cols;
  for (int s = 0; s < n; ++s)
    if (slots[s].part == 0) zero_cols.push_back(s);

  auto base_row = [&]() {
    std::vector<Rat> row(n, rat_ll(0));
    for (int c : zero_cols) row[c] = rat_ll(-1);
    return row;
  };

  for (size_t part = 1; part < p.parts.size(); ++part) {
    std::vector<int> cols;
    for (int s = 0; s < n; ++s)
      if (slots[s].part == static_cast<int>(part)) cols.push_back(s);
    for (int c : cols) {
      auto row = base_row();
      row[c] = ix / rat_ll(slots[c].weight);
      rows.push_back(std::move(row));
    }
    auto repeat = base_row();
    long long dist_weight = model.weights[p.parts[part][0]];
    for (int c : cols) repeat[c] = -ix / rat_ll(dist_weight);
    rows.push_back(std::move(repeat));
  }

  for (int c : zero_cols) {
    auto row = base_row();
    row[c] = ix / rat_ll(slots[c].weight) - rat_ll(1);
    rows.push_back(std::move(row));
  }
  return rows;
}

long long anticanonical_sections(const WeightedCIModel& model) {
  if (model.index() != 1)
    throw Unsupported("section count is only kept for index-one models");
  long long units = 0;
  for (long long w : model.weights)
    if (w == 1) ++units;
  return units;
}

std::vector<long long> ambient_factors(const NefPartition& p) {
  std::vector<long long> out;
  for (size_t i = 1; i < p.parts.size(); ++i)
    out.push_back(static_cast<long long>(p.parts[i].size()) - 1);
  return out;
}

CoveringModel covering_model(long long a, long long d) {
  if (a < 2) throw InvalidInput("covering degree must be at least two");
  if (d < 1) throw InvalidInput("branch parameter must be positive");
  long long alpha = (a - 1) * d;
  std::vector<long long> weights(alpha + 1, 1);
  weights.push_back(d);
  return {a, d, make_model(std::move(weights), {a * d})};
}

NefPartition covering_partition(const CoveringModel& c) {
  auto ps = find_nef_partitions(c.model);
  if (ps.size() != 1)
    throw InvalidInput("covering model must have a unique partition class");
  return ps[0];
}

}  // namespace lgm::wci
