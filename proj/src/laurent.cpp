#include "lgm/laurent.hpp"

#include <algorithm>
#include <map>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lgm/errors.hpp"

namespace lgm::laurent {

bool term_order_before(const Exponents& a, const Exponents& b) { return a > b; }

namespace {

using Accumulator = std::map<Exponents, Rat>;

// Canonical order is descending lexicographic, so walking the ascending map
// backwards emits terms already in order.
std::vector<Term> drain(const Accumulator& acc) {
  std::vector<Term> out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) out.push_back({it->first, it->second});
  return out;
}

void check_same_arity(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.num_vars() != b.num_vars())
    throw InvalidInput("polynomials over different variable sets");
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(int num_vars, const Rat& c) {
  return monomial(num_vars, Exponents(num_vars, 0), c);
}

LaurentPolynomial LaurentPolynomial::monomial(int num_vars, const Exponents& e,
                                              const Rat& c) {
  return from_terms(num_vars, {{e, c}});
}

LaurentPolynomial LaurentPolynomial::from_terms(int num_vars,
                                                std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) {
    if (static_cast<int>(t.exp.size()) != num_vars)
      throw InvalidInput("term arity does not match the variable count");
    acc[std::move(t.exp)] += t.coeff;
  }
  LaurentPolynomial out(num_vars);
  out.terms_ = drain(acc);
  return out;
}

Rat LaurentPolynomial::constant_term() const {
  Exponents zero(num_vars_, 0);
  for (const auto& t : terms_)
    if (t.exp == zero) return t.coeff;
  return rat_ll(0);
}

std::vector<Exponents> LaurentPolynomial::support() const {
  std::vector<Exponents> out;
  for (const auto& t : terms_) out.push_back(t.exp);
  return out;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
  if (num_vars_ != o.num_vars_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  check_same_arity(a, b);
  std::vector<Term> ts = a.terms();
  ts.insert(ts.end(), b.terms().begin(), b.terms().end());
  return LaurentPolynomial::from_terms(a.num_vars(), std::move(ts));
}

LaurentPolynomial negate(const LaurentPolynomial& a) {
  std::vector<Term> ts;
  for (const auto& t : a.terms()) ts.push_back({t.exp, -t.coeff});
  return LaurentPolynomial::from_terms(a.num_vars(), std::move(ts));
}

LaurentPolynomial sub(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return add(a, negate(b));
}

namespace {

void accumulate_products(Accumulator& acc, const std::vector<Term>& left,
                         size_t begin, size_t end,
                         const std::vector<Term>& right, int nvars) {
  Exponents e(nvars);
  for (size_t i = begin; i < end; ++i)
    for (const auto& t : right) {
      for (int j = 0; j < nvars; ++j) e[j] = left[i].exp[j] + t.exp[j];
      acc[e] += left[i].coeff * t.coeff;
    }
}

}  // namespace

LaurentPolynomial multiply_serial(const LaurentPolynomial& a,
                                  const LaurentPolynomial& b) {
  check_same_arity(a, b);
  Accumulator acc;
  accumulate_products(acc, a.terms(), 0, a.terms().size(), b.terms(),
                      a.num_vars());
  return LaurentPolynomial::from_terms(a.num_vars(), drain(acc));
}

LaurentPolynomial multiply_parallel(const LaurentPolynomial& a,
                                    const LaurentPolynomial& b) {
  check_same_arity(a, b);
#ifdef _OPENMP
  const auto& left = a.terms();
  int threads = omp_get_max_threads();
  std::vector<Accumulator> partial(threads);
#pragma omp parallel num_threads(threads)
  {
    int id = omp_get_thread_num();
    size_t chunk = (left.size() + threads - 1) / threads;
    size_t begin = std::min(left.size(), id * chunk);
    size_t end = std::min(left.size(), begin + chunk);
    accumulate_products(partial[id], left, begin, end, b.terms(), a.num_vars());
  }
  // Exact arithmetic: merge order cannot change the sums.
  Accumulator acc;
  for (auto& p : partial)
    for (auto& [e, c] : p) acc[e] += c;
  return LaurentPolynomial::from_terms(a.num_vars(), drain(acc));
#else
  return multiply_serial(a, b);
#endif
}

LaurentPolynomial multiply(const LaurentPolynomial& a,
                           const LaurentPolynomial& b) {
  if (a.terms().size() * b.terms().size() >= 4096)
    return multiply_parallel(a, b);
  return multiply_serial(a, b);
}

LaurentPolynomial pow(const LaurentPolynomial& f, long long u) {
  if (u == 0) return LaurentPolynomial::constant(f.num_vars(), rat_ll(1));
  if (u < 0) {
    if (!f.is_monomial())
      throw InvalidInput("negative power of a non-monomial");
    const Term& t = f.terms()[0];
    Exponents e(f.num_vars());
    for (int i = 0; i < f.num_vars(); ++i) e[i] = t.exp[i] * u;
    Rat inv = make_rat(rat_den(t.coeff), rat_num(t.coeff));
    Rat c = rat_ll(1);
    for (long long i = 0; i < -u; ++i) c *= inv;
    return LaurentPolynomial::monomial(f.num_vars(), e, c);
  }
  LaurentPolynomial acc = f;
  for (long long i = 1; i < u; ++i) acc = multiply(acc, f);
  return acc;
}

std::vector<std::string> default_var_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::string to_canonical_string(const LaurentPolynomial& f,
                                const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != f.num_vars())
    throw InvalidInput("variable name count does not match the polynomial");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = t.coeff < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    Rat mag = negative ? Rat(-t.coeff) : t.coeff;
    std::string varpart;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!varpart.empty()) varpart += '*';
      varpart += vars[i];
      if (t.exp[i] != 1) varpart += '^' + std::to_string(t.exp[i]);
    }
    if (varpart.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += varpart;
    } else {
      out += to_string(mag) + '*' + varpart;
    }
  }
  return out;
}

}  // namespace lgm::laurent
