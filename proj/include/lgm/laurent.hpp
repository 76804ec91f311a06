#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgm/numeric.hpp"

namespace lgm::laurent {

using Exponents = std::vector<std::int64_t>;

struct Term {
  Exponents exp;
  Rat coeff;
};

// Returns true when a precedes b in the canonical term order: strictly
// decreasing lexicographic comparison of exponent vectors, variable 0 most
// significant.
bool term_order_before(const Exponents& a, const Exponents& b);

// Exact multivariate Laurent polynomial over Q. Terms are stored in the
// canonical order with no zero coefficients; that order is the serialization
// order everywhere (printer, JSON, iteration).
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(int num_vars = 0) : num_vars_(num_vars) {}

  static LaurentPolynomial constant(int num_vars, const Rat& c);
  static LaurentPolynomial monomial(int num_vars, const Exponents& e, const Rat& c);
  // Sorts, merges equal exponents, strips zeros.
  static LaurentPolynomial from_terms(int num_vars, std::vector<Term> terms);

  int num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // [f]: the coefficient of the zero exponent vector.
  Rat constant_term() const;

  std::vector<Exponents> support() const;

  bool operator==(const LaurentPolynomial& o) const;
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

 private:
  int num_vars_;
  std::vector<Term> terms_;
};

LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial sub(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial negate(const LaurentPolynomial& a);

// Product kernels. multiply_serial is the reference implementation;
// multiply_parallel partitions the left factor across OpenMP threads and
// merges thread-local accumulators (exact arithmetic, so the result is
// identical to the serial kernel). multiply dispatches by problem size.
LaurentPolynomial multiply_serial(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial multiply_parallel(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Iterated multiplication. Negative u requires a monomial base (the inverse
// of a monomial is a monomial; anything else is an error).
LaurentPolynomial pow(const LaurentPolynomial& f, long long u);

enum class Engine { naive, pruned };

// Coefficients [f^u] for u = 0..n_terms-1, with [f^0] = 1 by convention.
// naive: serial incremental powers through multiply_serial (the reference
// path). pruned: each power is evaluated independently by
// constant_term_power_pruned; powers run under OpenMP and are aggregated in
// index order, so both engines produce identical sequences.
std::vector<Rat> period_sequence(const LaurentPolynomial& f, int n_terms,
                                 Engine engine = Engine::pruned);

// [f^u] without materializing the full power. During the iterated product a
// partial monomial m is discarded as soon as -m cannot be a sum of the
// remaining factors' support, tested against (u-i) * conv(support(f)) (facet
// inequalities when the support spans R^n, coordinate bounds always).
Rat constant_term_power_pruned(const LaurentPolynomial& f, long long u);

struct ParsedPolynomial {
  LaurentPolynomial poly;
  std::vector<std::string> vars;
};

// Grammar (ASCII, whitespace ignored, no implicit multiplication):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' ['-'] integer)?
//   atom   := integer | variable | '(' expr ')'
//   variable := letter (letter | digit)*
// Division requires a single-monomial divisor; '^' binds tighter than '/'
// (so "6/2^2" is 6/(2^2)). Rational literals like "3/4" come out of the
// term-level division of the two integer atoms.
// With var_names given, unknown identifiers are errors and the exponent
// layout follows var_names; otherwise variables are registered in order of
// first appearance.
ParsedPolynomial parse_laurent(const std::string& text,
                               const std::vector<std::string>& var_names = {});

// Canonical form: terms in canonical order, explicit '*', '^' for exponents
// other than 1, coefficients as "p/q". parse_laurent round-trips it.
std::string to_canonical_string(const LaurentPolynomial& f,
                                const std::vector<std::string>& vars);

// x1..xn.
std::vector<std::string> default_var_names(int n);

}  // namespace lgm::laurent
