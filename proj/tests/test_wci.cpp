#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "lgm/errors.hpp"
#include "lgm/laurent.hpp"
#include "lgm/polytope.hpp"
#include "lgm/wci.hpp"

using namespace lgm;
using namespace lgm::wci;

namespace {

std::set<std::vector<Rat>> row_set(const std::vector<std::vector<Rat>>& rows) {
  return {rows.begin(), rows.end()};
}

std::set<std::vector<Rat>> vertex_set(const polytope::RationalPolytope& p) {
  return {p.vertices().begin(), p.vertices().end()};
}

}  // namespace

TEST_CASE("model bookkeeping") {
  auto m = make_model({3, 1, 2, 1}, {6});
  CHECK(m.weights == std::vector<long long>{1, 1, 2, 3});
  CHECK(m.weight_sum() == 7);
  CHECK(m.degree_sum() == 6);
  CHECK(m.index() == 1);
  CHECK(m.dim() == 2);
  auto p2 = make_model({1, 1, 1}, {});
  CHECK(p2.index() == 3);
  CHECK(p2.dim() == 2);
  CHECK(make_model({1, 1, 1, 1, 2}, {3, 2}).degrees ==
        std::vector<long long>{2, 3});
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(make_model({}, {}), InvalidInput);
  CHECK_THROWS_AS(make_model({1, 0, 1}, {2}), InvalidInput);
  CHECK_THROWS_AS(make_model({1, 1, 1}, {1}), InvalidInput);
  CHECK_THROWS_AS(make_model({1, 1}, {2}), InvalidInput);  // index 0
  CHECK_THROWS_AS(make_model({1, 1, 1}, {4}), InvalidInput);
}

TEST_CASE("unique partition of the cubic surface model") {
  auto m = make_model({1, 1, 1, 1}, {3});
  auto ps = find_nef_partitions(m);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].parts == std::vector<std::vector<int>>{{0}, {1, 2, 3}});
  CHECK(ps[0].nice);
  CHECK(ps[0].strong);
  CHECK(ambient_factors(ps[0]) == std::vector<long long>{2});
}

TEST_CASE("distinguished element is the heaviest") {
  auto m = make_model({1, 1, 1, 2}, {4});
  auto ps = find_nef_partitions(m);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].parts == std::vector<std::vector<int>>{{0}, {3, 1, 2}});
  CHECK(ps[0].strong);
  auto slots = variable_slots(m, ps[0]);
  REQUIRE(slots.size() == 2);
  CHECK(slots[0].part == 1);
  CHECK(slots[0].index == 1);
  CHECK(slots[0].weight == 1);
  CHECK(slots[1].part == 1);
  CHECK(slots[1].index == 2);
  CHECK(slots[1].weight == 1);
}

TEST_CASE("two classes, one strong") {
  auto m = make_model({1, 1, 1, 1, 2}, {2, 3});
  auto ps = find_nef_partitions(m);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].nice);
  CHECK(ps[0].strong);
  CHECK(ambient_factors(ps[0]) == std::vector<long long>{0, 2});
  CHECK(ps[1].nice);
  CHECK_FALSE(ps[1].strong);
  CHECK(ambient_factors(ps[1]) == std::vector<long long>{1, 1});
}

TEST_CASE("partition can fail to exist or to be nice") {
  CHECK(find_nef_partitions(make_model({3, 3, 3}, {4})).empty());
  auto ps = find_nef_partitions(make_model({2, 2, 2}, {4}));
  REQUIRE(ps.size() == 1);
  CHECK_FALSE(ps[0].nice);
  CHECK_THROWS_AS(
      givental_polynomial(make_model({2, 2, 2}, {4}), ps[0]), InvalidInput);
  CHECK_THROWS_AS(dual_matrix(make_model({2, 2, 2}, {4}), ps[0]), InvalidInput);
}

TEST_CASE("pencil part prefers a unit distinguished element") {
  auto m = make_model({1, 1, 1, 3}, {3});
  auto ps = find_nef_partitions(m);
  REQUIRE(ps.size() == 2);
  CHECK_FALSE(ps[0].nice);  // pencil part {3}
  CHECK(ps[1].nice);        // pencil part {1,1,1}
  CHECK(ps[1].strong);
  CHECK(ps[1].parts == std::vector<std::vector<int>>{{0, 1, 2}, {3}});
  auto f = givental_polynomial(m, ps[1]);
  CHECK(f == laurent::parse_laurent("x1+x2+1/(x1*x2)", {"x1", "x2"}).poly);
}

TEST_CASE("givental polynomials of the del pezzo chain") {
  auto dp3 = make_model({1, 1, 1, 1}, {3});
  auto f3 = givental_polynomial(dp3, find_nef_partitions(dp3)[0]);
  CHECK(f3 ==
        laurent::parse_laurent("(1+x1+x2)^3/(x1*x2)", {"x1", "x2"}).poly);

  auto dp2 = make_model({1, 1, 1, 2}, {4});
  auto f2 = givental_polynomial(dp2, find_nef_partitions(dp2)[0]);
  CHECK(f2 ==
        laurent::parse_laurent("(1+x1+x2)^4/(x1*x2)", {"x1", "x2"}).poly);

  auto dp1 = make_model({1, 1, 2, 3}, {6});
  auto f1 = givental_polynomial(dp1, find_nef_partitions(dp1)[0]);
  CHECK(f1 ==
        laurent::parse_laurent("(1+x1+x2)^6/(x1*x2^2)", {"x1", "x2"}).poly);
}

TEST_CASE("pencil variables reappear as summands") {
  auto m = make_model({1, 1, 1, 1}, {2});
  auto ps = find_nef_partitions(m);
  // Classes: pencil part {1,1} with surface part {1,1}.
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].parts == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  auto f = givental_polynomial(m, ps[0]);
  CHECK(f ==
        laurent::parse_laurent("(1+x1)^2/(x1*x2)+x2", {"x1", "x2"}).poly);
}

TEST_CASE("closed form periods") {
  auto dp3 = make_model({1, 1, 1, 1}, {3});
  CHECK(closed_form_period(dp3, 0) == rat_ll(1));
  CHECK(closed_form_period(dp3, 1) == rat_ll(6));
  CHECK(closed_form_period(dp3, 2) == rat_ll(90));
  CHECK(closed_form_period(dp3, 3) == rat_ll(1680));

  auto dp2 = make_model({1, 1, 1, 2}, {4});
  CHECK(closed_form_period(dp2, 1) == rat_ll(12));
  CHECK(closed_form_period(dp2, 2) == rat_ll(420));
  CHECK(closed_form_period(dp2, 3) == rat_ll(18480));

  auto dp1 = make_model({1, 1, 2, 3}, {6});
  CHECK(closed_form_period(dp1, 1) == rat_ll(60));
  CHECK(closed_form_period(dp1, 2) == rat_ll(13860));
  CHECK(closed_form_period(dp1, 3) == rat_ll(4084080));

  auto sextic = covering_model(2, 3).model;
  CHECK(closed_form_period(sextic, 1) == rat_ll(120));
  CHECK(closed_form_period(sextic, 2) == rat_ll(83160));

  auto quartic = covering_model(4, 1).model;
  CHECK(closed_form_period(quartic, 1) == rat_ll(24));
  CHECK(closed_form_period(quartic, 2) == rat_ll(2520));
}

TEST_CASE("iseries spacing follows the index") {
  auto dp3 = make_model({1, 1, 1, 1}, {3});
  CHECK(iseries(dp3, 4) ==
        std::vector<Rat>{rat_ll(1), rat_ll(6), rat_ll(90), rat_ll(1680)});
  auto p2 = make_model({1, 1, 1}, {});
  CHECK(iseries(p2, 7) == std::vector<Rat>{rat_ll(1), rat_ll(0), rat_ll(0),
                                           rat_ll(6), rat_ll(0), rat_ll(0),
                                           rat_ll(90)});
  auto conic = make_model({1, 1, 1, 1}, {2});
  CHECK(iseries(conic, 5) == std::vector<Rat>{rat_ll(1), rat_ll(0), rat_ll(4),
                                              rat_ll(0), rat_ll(36)});
}

TEST_CASE("period sequence of the givental polynomial matches the closed form") {
  for (auto& m : {make_model({1, 1, 1, 1}, {3}), make_model({1, 1, 1, 2}, {4}),
                  make_model({1, 1, 2, 3}, {6}), make_model({1, 1, 1, 1}, {2}),
                  make_model({1, 1, 1}, {})}) {
    for (const auto& p : find_nef_partitions(m)) {
      if (!p.nice) continue;
      auto f = givental_polynomial(m, p);
      int n = int(3 * m.index() + 1);
      CHECK(laurent::period_sequence(f, n, laurent::Engine::naive) ==
            iseries(m, n));
      CHECK(laurent::period_sequence(f, n, laurent::Engine::pruned) ==
            iseries(m, n));
    }
  }
}

TEST_CASE("different classes share one period sequence") {
  auto m = make_model({1, 1, 1, 1, 2}, {2, 3});
  auto ps = find_nef_partitions(m);
  REQUIRE(ps.size() == 2);
  auto fa = givental_polynomial(m, ps[0]);
  auto fb = givental_polynomial(m, ps[1]);
  auto want = iseries(m, 4);
  CHECK(want == std::vector<Rat>{rat_ll(1), rat_ll(6), rat_ll(90), rat_ll(1680)});
  CHECK(laurent::period_sequence(fa, 4) == want);
  CHECK(laurent::period_sequence(fb, 4) == want);
}

TEST_CASE("dual matrix reproduces the polar dual") {
  for (auto& m : {make_model({1, 1, 1, 1}, {3}), make_model({1, 1, 1, 2}, {4}),
                  make_model({1, 1, 2, 3}, {6}), make_model({1, 1, 1, 1}, {2})}) {
    auto p = find_nef_partitions(m)[0];
    auto f = givental_polynomial(m, p);
    auto dual = polytope::polar_dual(polytope::newton_polytope(f));
    CHECK(row_set(dual_matrix(m, p)) == vertex_set(dual));
  }
}

TEST_CASE("dual matrix rows for the plane sit inside the dual") {
  auto m = make_model({1, 1, 1}, {});
  auto p = find_nef_partitions(m)[0];
  auto rows = dual_matrix(m, p);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<Rat>{rat_ll(2), rat_ll(-1)});
  CHECK(rows[1] == std::vector<Rat>{rat_ll(-1), rat_ll(2)});
  auto dual = polytope::polar_dual(
      polytope::newton_polytope(givental_polynomial(m, p)));
  auto vs = vertex_set(dual);
  for (const auto& r : rows) CHECK(vs.count(r) == 1);
}

TEST_CASE("anticanonical sections count unit weights") {
  CHECK(anticanonical_sections(make_model({1, 1, 1, 1}, {3})) == 4);
  CHECK(anticanonical_sections(make_model({1, 1, 1, 2}, {4})) == 3);
  CHECK(anticanonical_sections(make_model({1, 1, 2, 3}, {6})) == 2);
  CHECK(anticanonical_sections(covering_model(2, 3).model) == 4);
  CHECK(anticanonical_sections(covering_model(3, 2).model) == 5);
  CHECK(anticanonical_sections(covering_model(4, 1).model) == 5);
  CHECK_THROWS_AS(anticanonical_sections(make_model({1, 1, 1}, {})),
                  Unsupported);
}

TEST_CASE("partition search cap") {
  std::vector<long long> w(21, 1);
  auto m = make_model(w, {20});
  CHECK_THROWS_AS(find_nef_partitions(m), CapExceeded);
  CHECK(find_nef_partitions(m, 25).size() >= 1);
}

TEST_CASE("covering models") {
  auto c = covering_model(2, 3);
  CHECK(c.model.weights == std::vector<long long>{1, 1, 1, 1, 3});
  CHECK(c.model.degrees == std::vector<long long>{6});
  CHECK(c.model.index() == 1);
  CHECK(c.model.dim() == 3);
  CHECK(covering_model(2, 2).model == make_model({1, 1, 1, 2}, {4}));
  CHECK(covering_model(3, 2).model == make_model({1, 1, 1, 1, 1, 2}, {6}));
  CHECK(covering_model(4, 1).model == make_model({1, 1, 1, 1, 1}, {4}));
  CHECK(covering_model(4, 1).model.dim() == 3);
  CHECK(covering_model(3, 2).model.dim() == 4);
  CHECK_THROWS_AS(covering_model(1, 3), InvalidInput);
  CHECK_THROWS_AS(covering_model(2, 0), InvalidInput);
}

TEST_CASE("covering partition is the unique class") {
  for (auto [a, d] : {std::pair{2LL, 3LL}, {2LL, 2LL}, {3LL, 2LL}, {4LL, 1LL}}) {
    auto c = covering_model(a, d);
    auto ps = find_nef_partitions(c.model);
    REQUIRE(ps.size() == 1);
    auto p = covering_partition(c);
    CHECK(p.parts == ps[0].parts);
    CHECK(p.nice);
    CHECK(p.strong);
  }
}

TEST_CASE("quartic threefold periods") {
  auto c = covering_model(4, 1);
  auto f = givental_polynomial(c.model, covering_partition(c));
  CHECK(f == laurent::parse_laurent("(1+x1+x2+x3)^4/(x1*x2*x3)",
                                    {"x1", "x2", "x3"})
                 .poly);
  std::vector<Rat> want = {rat_ll(1), rat_ll(24), rat_ll(2520),
                           rat_ll(369600)};
  CHECK(laurent::period_sequence(f, 4, laurent::Engine::pruned) == want);
  CHECK(iseries(c.model, 4) == want);
}
