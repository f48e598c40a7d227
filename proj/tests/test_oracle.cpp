#include <doctest.h>

#include <set>

#include "dropk/greedy.hpp"
#include "dropk/oracle.hpp"
#include "support/brute_force.hpp"

using namespace dropk;
using namespace dropk::testing;

TEST_CASE("step concatenates drops of each candidate") {
  CHECK(step(std::vector<Seq<char>>{seq("ab")}) == std::vector<Seq<char>>{seq("b"), seq("a")});
  CHECK(step(std::vector<Seq<char>>{seq("b"), seq("a")}) ==
        std::vector<Seq<char>>{seq(""), seq("")});
  CHECK(step(std::vector<Seq<char>>{seq("abcd")}) ==
        std::vector<Seq<char>>{seq("bcd"), seq("acd"), seq("abd"), seq("abc")});
  CHECK_THROWS_AS(step(std::vector<Seq<char>>{seq("ab"), seq("")}), PreconditionError);
}

TEST_CASE("apply_k") {
  auto g = [](Seq<char> xs) { return gstep(xs); };
  CHECK(apply_k(0, g, seq("6782334")) == seq("6782334"));
  CHECK(apply_k(1, g, seq("6782334")) == seq("782334"));
  CHECK(apply_k(3, g, seq("6782334")) == seq("8334"));
  CHECK(apply_k(4, [](int x) { return x * 2; }, 3) == 48);
}

TEST_CASE("solve_naive") {
  CHECK(solve_naive(1, seq("6782334")) == seq("782334"));
  CHECK(solve_naive(3, seq("6782334")) == seq("8334"));
  CHECK(solve_naive(2, seq("abc")) == seq("c"));
  CHECK(solve_naive(0, seq("abc")) == seq("abc"));
  CHECK(solve_naive(3, seq("abc")) == seq(""));
  CHECK(solve_naive(0, seq("")) == seq(""));
  CHECK_THROWS_WITH_AS(solve_naive(4, seq("abc")), "cannot drop more elements than present",
                       PreconditionError);
}

TEST_CASE("candidate multiset size is the falling factorial") {
  for (const auto& xs : words(seq("ab"), 0, 6)) {
    for (std::size_t k = 0; k <= xs.size(); ++k) {
      REQUIRE(candidates(k, xs).size() == falling_factorial(xs.size(), k));
    }
  }
}

TEST_CASE("candidates are exactly the subsequences of length n-k") {
  for (const auto& xs : words(seq("abc"), 0, 7)) {
    for (std::size_t k = 0; k <= xs.size(); ++k) {
      const auto cs = candidates(k, xs, Dedup::yes);
      for (const auto& c : cs) {
        REQUIRE(c.size() == xs.size() - k);
        REQUIRE(is_subsequence(c, xs));
      }
      const std::set<Seq<char>> got(cs.begin(), cs.end());
      REQUIRE(got == subsequences_of_length(xs, xs.size() - k));
    }
  }
}

TEST_CASE("dedup leaves the maximum unchanged") {
  for (const auto& xs : words(seq("abc"), 0, 6)) {
    for (std::size_t k = 0; k <= xs.size(); ++k) {
      REQUIRE(solve_naive(k, xs, Dedup::yes) == solve_naive(k, xs, Dedup::no));
      REQUIRE(solve_naive(k, xs) == brute_solve(k, xs));
    }
  }
}
