#include <cstdint>
#include <map>
#include <vector>

#include "lgm/errors.hpp"
#include "lgm/laurent.hpp"
#include "lgm/polytope.hpp"

namespace lgm::laurent {

namespace {

// Reachability filter: a partial exponent m with r factors still to come can
// reach zero only if -m lies in r * conv(support(f)). Facet inequalities give
// the exact test when the support spans; the coordinate box works always and
// is the fallback for degenerate supports.
struct Pruner {
  explicit Pruner(const LaurentPolynomial& f) {
    int n = f.num_vars();
    lo.assign(n, 0);
    hi.assign(n, 0);
    bool first = true;
    for (const auto& t : f.terms()) {
      for (int j = 0; j < n; ++j) {
        if (first || t.exp[j] < lo[j]) lo[j] = t.exp[j];
        if (first || t.exp[j] > hi[j]) hi[j] = t.exp[j];
      }
      first = false;
    }
    try {
      facets = polytope::newton_polytope(f).facets();
      have_facets = true;
    } catch (const InvalidInput&) {
      have_facets = false;
    }
  }

  bool feasible(const Exponents& m, long long r) const {
    for (size_t j = 0; j < m.size(); ++j)
      if (-m[j] < r * lo[j] || -m[j] > r * hi[j]) return false;
    if (!have_facets) return true;
    for (const auto& fc : facets) {
      Int lhs = 0;
      for (size_t j = 0; j < m.size(); ++j) lhs += fc.normal[j] * Int(-m[j]);
      if (Rat(lhs) < rat_ll(r) * fc.offset) return false;
    }
    return true;
  }

  std::vector<std::int64_t> lo, hi;
  std::vector<polytope::Facet> facets;
  bool have_facets = false;
};

}  // namespace

Rat constant_term_power_pruned(const LaurentPolynomial& f, long long u) {
  if (u < 0) throw InvalidInput("negative power in a period computation");
  if (u == 0) return rat_ll(1);
  if (f.is_zero()) return rat_ll(0);

  Pruner pruner(f);
  Exponents zero(f.num_vars(), 0);
  std::map<Exponents, Rat> states;
  states[zero] = rat_ll(1);
  Exponents e(f.num_vars());
  for (long long i = 0; i < u; ++i) {
    long long remaining = u - i - 1;
    std::map<Exponents, Rat> next;
    for (const auto& [m, c] : states)
      for (const auto& t : f.terms()) {
        for (int j = 0; j < f.num_vars(); ++j) e[j] = m[j] + t.exp[j];
        if (!pruner.feasible(e, remaining)) continue;
        next[e] += c * t.coeff;
      }
    states.swap(next);
  }
  auto it = states.find(zero);
  return it == states.end() ? rat_ll(0) : it->second;
}

std::vector<Rat> period_sequence(const LaurentPolynomial& f, int n_terms,
                                 Engine engine) {
  if (n_terms <= 0) return {};
  std::vector<Rat> out(n_terms, rat_ll(0));
  out[0] = rat_ll(1);
  if (engine == Engine::naive) {
    LaurentPolynomial acc = LaurentPolynomial::constant(f.num_vars(), rat_ll(1));
    for (int u = 1; u < n_terms; ++u) {
      acc = multiply_serial(acc, f);
      out[u] = acc.constant_term();
    }
    return out;
  }
#pragma omp parallel for schedule(dynamic)
  for (int u = 1; u < n_terms; ++u) out[u] = constant_term_power_pruned(f, u);
  return out;
}

}  // namespace lgm::laurent
