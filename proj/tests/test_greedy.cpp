#include <doctest.h>

#include <algorithm>

#include "dropk/greedy.hpp"
#include "dropk/oracle.hpp"
#include "support/brute_force.hpp"

using namespace dropk;
using dropk::testing::words;

TEST_CASE("hill_foot") {
  CHECK(hill_foot(seq("8766678")).index == 4);
  CHECK(hill_foot(seq("5")).index == 0);
  CHECK(hill_foot(seq("19")).index == 0);
  CHECK(hill_foot(seq("3321")).index == 3);
  CHECK_THROWS_AS(hill_foot(seq("")), PreconditionError);

  for (const auto& xs : words(seq("abc"), 1, 8)) {
    const auto i = hill_foot(xs).index;
    REQUIRE(i < xs.size());
    for (std::size_t j = 0; j < i; ++j) REQUIRE(xs[j] >= xs[j + 1]);
    REQUIRE((i + 1 == xs.size() || xs[i] < xs[i + 1]));
  }
}

TEST_CASE("gstep") {
  CHECK(gstep(seq("8766678")) == seq("876678"));
  CHECK(gstep(seq("x")) == seq(""));
  CHECK(gstep(seq("1934")) == seq("934"));
  CHECK(gstep_recursive(seq("8766678")) == seq("876678"));
  CHECK_THROWS_AS(gstep(seq("")), PreconditionError);
  CHECK_THROWS_AS(gstep_recursive(seq("")), PreconditionError);
}

TEST_CASE("gstep is the best single drop") {
  for (const auto& xs : words(seq("abc"), 1, 9)) {
    const auto g = gstep(xs);
    const auto ds = drops(xs);
    REQUIRE(g == max_lex(ds));
    REQUIRE(g == gstep_recursive(xs));
    REQUIRE(g == remove_at(xs, hill_foot(xs).index));
    REQUIRE(std::find(ds.begin(), ds.end(), g) != ds.end());
    for (const auto& d : ds) REQUIRE(lex_le(d, g));
  }
}

TEST_CASE("tail bound: xs is below gstep(y:xs)") {
  for (const auto& xs : words(seq("abc"), 0, 7)) {
    for (char y : {'a', 'b', 'c'}) {
      Seq<char> yxs{y};
      yxs.insert(yxs.end(), xs.begin(), xs.end());
      REQUIRE(lex_le(xs, gstep(yxs)));
    }
  }
}

TEST_CASE("equal neighbours keep the foot moving right") {
  CHECK(hill_foot(seq("5559")).index == 2);
  CHECK(gstep(seq("5559")) == seq("559"));
}

TEST_CASE("solve_greedy") {
  CHECK(solve_greedy(3, seq("6782334")) == seq("8334"));
  CHECK(solve_greedy(0, seq("987")) == seq("987"));
  CHECK(solve_greedy(2, seq("987")) == seq("9"));
  CHECK(solve_greedy(7, seq("6782334")) == seq(""));
  CHECK_THROWS_AS(solve_greedy(4, seq("987")), PreconditionError);

  auto g = [](Seq<char> xs) { return gstep(xs); };
  for (const auto& xs : words(seq("abc"), 0, 6)) {
    for (std::size_t k = 0; k <= xs.size(); ++k) {
      const auto r = solve_greedy(k, xs);
      REQUIRE(r == apply_k(k, g, xs));
      REQUIRE(r == solve_naive(k, xs));
      REQUIRE(r == dropk::testing::brute_solve(k, xs));
    }
  }
}

TEST_CASE("Better-Global fails on 1934 / 4234") {
  const auto xs = seq("1934");
  const auto ys = seq("4234");
  REQUIRE(lex_le(xs, ys));
  const auto ds = drops(xs);
  CHECK(std::find(ds.begin(), ds.end(), seq("934")) != ds.end());
  for (const auto& zs : drops(ys)) CHECK_FALSE(lex_le(seq("934"), zs));

  const auto v = find_better_global_violation(xs, ys);
  REQUIRE(v.has_value());
  CHECK(v->from_xs == seq("934"));
  CHECK(v->best_from_ys == seq("434"));
  CHECK_FALSE(lex_le(v->from_xs, v->best_from_ys));
}

TEST_CASE("Better-Global check stays quiet where it holds") {
  CHECK_FALSE(find_better_global_violation(seq("123"), seq("123")).has_value());
  // premise false
  CHECK_FALSE(find_better_global_violation(seq("4234"), seq("1934")).has_value());
}
