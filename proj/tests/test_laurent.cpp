#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "lgm/errors.hpp"
#include "lgm/laurent.hpp"

using namespace lgm;
using namespace lgm::laurent;

namespace {

// Test-local expansion oracle, deliberately independent of the library
// kernels: dense map representation, schoolbook product.
using SlowPoly = std::map<Exponents, Rat>;

SlowPoly slow_from(const LaurentPolynomial& f) {
  SlowPoly m;
  for (const auto& t : f.terms()) m[t.exp] = t.coeff;
  return m;
}

SlowPoly slow_mul(const SlowPoly& a, const SlowPoly& b, int nvars) {
  SlowPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e(nvars);
      for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

Rat slow_constant_term_power(const LaurentPolynomial& f, int u) {
  SlowPoly acc;
  acc[Exponents(f.num_vars(), 0)] = rat_ll(1);
  SlowPoly ff = slow_from(f);
  for (int i = 0; i < u; ++i) acc = slow_mul(acc, ff, f.num_vars());
  auto it = acc.find(Exponents(f.num_vars(), 0));
  return it == acc.end() ? rat_ll(0) : it->second;
}

LaurentPolynomial random_poly(std::mt19937& rng, int nvars, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> expd(-3, 3);
  std::uniform_int_distribution<int> numd(-5, 5);
  std::uniform_int_distribution<int> dend(1, 3);
  std::vector<Term> ts;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Exponents e(nvars);
    for (auto& x : e) x = expd(rng);
    ts.push_back({e, make_rat(Int(numd(rng)), Int(dend(rng)))});
  }
  return LaurentPolynomial::from_terms(nvars, std::move(ts));
}

}  // namespace

TEST_CASE("parser expands the shifted cubic") {
  auto p = parse_laurent("(x+y+1)^3/(x*y)");
  CHECK(p.vars == std::vector<std::string>{"x", "y"});
  CHECK(p.poly.num_vars() == 2);
  CHECK(p.poly.terms().size() == 10);
  CHECK(p.poly.constant_term() == rat_ll(6));
}

TEST_CASE("canonical order is strictly decreasing") {
  auto p = parse_laurent("(x+y+1)^3/(x*y)").poly;
  for (size_t i = 1; i < p.terms().size(); ++i)
    CHECK(term_order_before(p.terms()[i - 1].exp, p.terms()[i].exp));
}

TEST_CASE("canonical printer output is pinned and round-trips") {
  auto p = parse_laurent("(x+y+1)^3/(x*y)");
  std::string s = to_canonical_string(p.poly, p.vars);
  CHECK(s ==
        "x^2*y^-1 + 3*x + 3*x*y^-1 + 3*y + 6 + 3*y^-1 + x^-1*y^2 + 3*x^-1*y + "
        "3*x^-1 + x^-1*y^-1");
  auto back = parse_laurent(s, p.vars);
  CHECK(back.poly == p.poly);
}

TEST_CASE("printer handles signs, rational coefficients and zero") {
  auto p = parse_laurent("-x^2 + 3/4 - y");
  std::string s = to_canonical_string(p.poly, p.vars);
  CHECK(s == "-x^2 - y + 3/4");
  CHECK(parse_laurent(s, p.vars).poly == p.poly);
  CHECK(to_canonical_string(LaurentPolynomial(2), {"x", "y"}) == "0");
  CHECK(parse_laurent("0").poly.is_zero());
}

TEST_CASE("explicit variable list fixes layout and rejects strangers") {
  auto p = parse_laurent("y", {"x", "y"});
  CHECK(p.poly.num_vars() == 2);
  CHECK(p.poly.terms()[0].exp == Exponents{0, 1});
  CHECK_THROWS_AS(parse_laurent("z", {"x", "y"}), ParseError);
}

TEST_CASE("division is restricted to single monomials") {
  CHECK(parse_laurent("x/(2*x)").poly ==
        LaurentPolynomial::constant(1, make_rat(Int(1), Int(2))));
  CHECK_THROWS_AS(parse_laurent("(x+y)/(x+y)"), ParseError);
  CHECK_THROWS_AS(parse_laurent("1/0"), ParseError);
  CHECK_THROWS_AS(parse_laurent("1/(x-x)"), ParseError);
}

TEST_CASE("power binds tighter than division") {
  CHECK(parse_laurent("6/2^2").poly ==
        LaurentPolynomial::constant(0, make_rat(Int(3), Int(2))));
}

TEST_CASE("negative powers need monomial bases") {
  auto p = parse_laurent("(2*x)^-3");
  CHECK(p.poly == LaurentPolynomial::monomial(1, {-3}, make_rat(Int(1), Int(8))));
  CHECK_THROWS_AS(parse_laurent("(x+y)^-1"), ParseError);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_laurent(""), ParseError);
  CHECK_THROWS_AS(parse_laurent("x y"), ParseError);
  CHECK_THROWS_AS(parse_laurent("2x"), ParseError);
  CHECK_THROWS_AS(parse_laurent("x^"), ParseError);
  CHECK_THROWS_AS(parse_laurent("x^2^3"), ParseError);
  CHECK_THROWS_AS(parse_laurent("x$y"), ParseError);
  CHECK_THROWS_AS(parse_laurent("(x+y"), ParseError);
  CHECK_THROWS_AS(parse_laurent("x+"), ParseError);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_laurent("x + $");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("period sequence of the shifted cubic") {
  auto f = parse_laurent("(x+y+1)^3/(x*y)").poly;
  std::vector<Rat> want = {rat_ll(1), rat_ll(6), rat_ll(90), rat_ll(1680)};
  CHECK(period_sequence(f, 4, Engine::naive) == want);
  CHECK(period_sequence(f, 4, Engine::pruned) == want);
}

TEST_CASE("period sequence with index-three gaps") {
  auto f = parse_laurent("x+y+1/(x*y)").poly;
  std::vector<Rat> want = {rat_ll(1), rat_ll(0), rat_ll(0),  rat_ll(6),
                           rat_ll(0), rat_ll(0), rat_ll(90)};
  CHECK(period_sequence(f, 7, Engine::naive) == want);
  CHECK(period_sequence(f, 7, Engine::pruned) == want);
}

TEST_CASE("period sequence of a constant") {
  auto f = LaurentPolynomial::constant(0, rat_ll(5));
  std::vector<Rat> want = {rat_ll(1), rat_ll(5), rat_ll(25)};
  CHECK(period_sequence(f, 3, Engine::naive) == want);
  CHECK(period_sequence(f, 3, Engine::pruned) == want);
}

TEST_CASE("period sequence of zero uses the empty-power convention") {
  std::vector<Rat> want = {rat_ll(1), rat_ll(0), rat_ll(0)};
  CHECK(period_sequence(LaurentPolynomial(2), 3, Engine::naive) == want);
  CHECK(period_sequence(LaurentPolynomial(2), 3, Engine::pruned) == want);
}

TEST_CASE("pruned constant term matches the multinomial closed form") {
  auto f = parse_laurent("(x+y+1)^3/(x*y)").poly;
  CHECK(constant_term_power_pruned(f, 6) == rat_ll(17153136));
  CHECK(slow_constant_term_power(f, 6) == rat_ll(17153136));
}

TEST_CASE("pruned kernel survives degenerate supports") {
  CHECK(constant_term_power_pruned(parse_laurent("x").poly, 3) == rat_ll(0));
  CHECK(constant_term_power_pruned(parse_laurent("x+1").poly, 3) == rat_ll(1));
  CHECK(constant_term_power_pruned(parse_laurent("x+1/x", {"x", "y"}).poly, 4) ==
        rat_ll(6));
}

TEST_CASE("quartic surface polynomial constant term") {
  auto f = parse_laurent("(x+y+1)^4/(x*y)").poly;
  CHECK(f.constant_term() == rat_ll(12));
}

TEST_CASE("product kernels agree with each other and the oracle") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    int nvars = 1 + int(rng() % 3);
    auto a = random_poly(rng, nvars, 6);
    auto b = random_poly(rng, nvars, 6);
    auto ab_s = multiply_serial(a, b);
    auto ab_p = multiply_parallel(a, b);
    CHECK(ab_s == ab_p);
    CHECK(slow_from(ab_s) == slow_mul(slow_from(a), slow_from(b), nvars));
  }
}

TEST_CASE("ring identities on random inputs") {
  std::mt19937 rng(977);
  for (int trial = 0; trial < 30; ++trial) {
    int nvars = 1 + int(rng() % 2);
    auto a = random_poly(rng, nvars, 5);
    auto b = random_poly(rng, nvars, 5);
    auto c = random_poly(rng, nvars, 5);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c)));
    CHECK(pow(a, 3) == multiply(a, multiply(a, a)));
  }
}

TEST_CASE("engines agree on random polynomials") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 15; ++trial) {
    int nvars = 1 + int(rng() % 2);
    auto f = random_poly(rng, nvars, 4);
    auto navie = period_sequence(f, 5, Engine::naive);
    auto pruned = period_sequence(f, 5, Engine::pruned);
    CHECK(navie == pruned);
    for (int u = 0; u < 5; ++u) CHECK(navie[u] == slow_constant_term_power(f, u));
  }
}

TEST_CASE("monomial inverses cancel") {
  auto f = parse_laurent("x*x^-1").poly;
  CHECK(f == LaurentPolynomial::constant(1, rat_ll(1)));
  CHECK(parse_laurent("x - x").poly.is_zero());
}
