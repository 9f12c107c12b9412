#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "strongext/dice.hpp"
#include "strongext/dicut.hpp"

using namespace strongext;

namespace {

const DiceSet kEfronLike({{1, 5, 9}, {3, 4, 8}, {2, 6, 7}});

DiceSet random_dice(std::mt19937_64& rng, int n, int k) {
  std::vector<Face> faces(static_cast<std::size_t>(n * k));
  for (std::size_t i = 0; i < faces.size(); ++i) faces[i] = static_cast<Face>(i * 3 + 1);
  std::shuffle(faces.begin(), faces.end(), rng);
  std::vector<Die> dice(n);
  for (int i = 0; i < n * k; ++i) dice[i / k].push_back(faces[i]);
  return DiceSet(std::move(dice));
}

}  // namespace

TEST_CASE("win_probability is exact") {
  CHECK(oracle::win_count({1, 5, 9}, {3, 4, 8}) == 5);
  CHECK(win_probability(std::vector<Face>{1, 5, 9}, std::vector<Face>{3, 4, 8}) == Fraction{5, 9});
  CHECK(win_probability(std::vector<Face>{3, 4, 8}, std::vector<Face>{2, 6, 7}) == Fraction{5, 9});
  CHECK(win_probability(std::vector<Face>{1, 2, 3}, std::vector<Face>{4, 5, 6}) == Fraction{0, 9});
  CHECK(win_probability(std::vector<Face>{9, 1, 5}, std::vector<Face>{8, 4, 3}).num == 5);
  CHECK(Fraction{10, 18} == Fraction{5, 9});
  CHECK(Fraction{1, 2} < Fraction{5, 9});

  CHECK_THROWS_AS(win_probability(std::vector<Face>{1, 2}, std::vector<Face>{2, 3}), Error);
  CHECK_THROWS_AS(win_probability(std::vector<Face>{1, 2}, std::vector<Face>{3}), Error);
}

TEST_CASE("DiceSet validation and canonical form") {
  CHECK_THROWS_AS(DiceSet({{1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(DiceSet({{1, 2}, {3}}), Error);
  CHECK_THROWS_AS(DiceSet(std::vector<Die>{}), Error);
  const DiceSet d({{10, -4}, {7, 30}});
  CHECK(d.die(0) == Die{-4, 10});
  CHECK(d.canonical() == DiceSet({{1, 3}, {2, 4}}));
}

TEST_CASE("beats_digraph") {
  const StrictDigraph g = beats_digraph(kEfronLike);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(is_strong(g));
  CHECK(beats_digraph(kEfronLike, EdgeConvention::loser_to_winner) == g.reversed());

  const StrictDigraph ordered = beats_digraph(DiceSet({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  CHECK(ordered.edges() == std::vector<Edge>{{1, 0}, {2, 0}, {2, 1}});

  const StrictDigraph single = beats_digraph(DiceSet({{4, 2, 9}}));
  CHECK(single.order() == 1);
  CHECK(single.size() == 0);

  // Even sides allow a 1/2 split, which leaves the pair non-adjacent.
  const StrictDigraph even = beats_digraph(DiceSet({{1, 4}, {2, 3}}));
  CHECK(even.size() == 0);
}

TEST_CASE("is_balanced") {
  Balance b = is_balanced(kEfronLike);
  CHECK(b.balanced);
  CHECK(b.p == Fraction{5, 9});
  CHECK(b.kind == BalanceKind::proper);

  b = is_balanced(DiceSet({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  CHECK(b.balanced);
  CHECK(b.p == Fraction{1, 1});
  CHECK(b.kind == BalanceKind::deterministic);

  const DiceSet mixed({{1, 2, 9}, {3, 4, 8}, {5, 6, 7}});
  const std::int64_t c01 = oracle::win_count({1, 2, 9}, {3, 4, 8});
  const std::int64_t c12 = oracle::win_count({3, 4, 8}, {5, 6, 7});
  const std::int64_t c02 = oracle::win_count({1, 2, 9}, {5, 6, 7});
  const bool expected = std::max(c01, 9 - c01) == std::max(c12, 9 - c12) &&
                        std::max(c12, 9 - c12) == std::max(c02, 9 - c02);
  b = is_balanced(mixed);
  CHECK(b.balanced == expected);
  CHECK(b.p == Fraction{std::max(c01, 9 - c01), 9});

  CHECK(is_balanced(DiceSet({{1, 4}, {2, 3}})).kind == BalanceKind::even);
  CHECK_FALSE(is_balanced(DiceSet({{1, 5, 9}, {3, 4, 8}, {2, 6, 7}, {10, 11, 12}})).balanced);
  CHECK_THROWS_AS(is_balanced(DiceSet(std::vector<Die>{{1}})), Error);
}

TEST_CASE("realizes") {
  const StrictDigraph cycle = StrictDigraph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(realizes(kEfronLike, cycle));
  CHECK(realizes(kEfronLike, StrictDigraph::from_edges(3, std::vector<Edge>{{1, 2}})));
  CHECK_FALSE(realizes(kEfronLike, cycle.reversed()));
  CHECK(realizes(kEfronLike, cycle.reversed(), EdgeConvention::loser_to_winner));
  CHECK_THROWS_AS(realizes(kEfronLike, StrictDigraph(4)), Error);
}

TEST_CASE("win matrix properties on random dice") {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 6);
    const DiceSet d = random_dice(rng, n, k);
    const WinMatrix w(d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        REQUIRE(w.favorable(i, j) == oracle::win_count(d.die(i), d.die(j)));
        REQUIRE(w.favorable(i, j) + w.favorable(j, i) == w.denominator());
        REQUIRE(w.favorable(i, j) >= 0);
        REQUIRE(w.favorable(i, j) <= w.denominator());
      }

    const StrictDigraph g = beats_digraph(d);
    if (k % 2 == 1) REQUIRE(g.is_tournament());

    // Strictly increasing relabelling preserves everything.
    std::vector<Die> shifted = d.dice();
    for (Die& die : shifted)
      for (Face& f : die) f = 2 * f + 7;
    const DiceSet moved(shifted);
    REQUIRE(beats_digraph(moved) == g);
    const WinMatrix wm(moved);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) REQUIRE(wm.favorable(i, j) == w.favorable(i, j));
    if (n >= 2) {
      const Balance a = is_balanced(d), b = is_balanced(moved);
      REQUIRE(a.balanced == b.balanced);
      REQUIRE(a.kind == b.kind);
    }
    REQUIRE(beats_digraph(d.canonical()) == g);
  }
}

TEST_CASE("labeled_partition_count") {
  CHECK(labeled_partition_count(3, 3) == 1680);
  CHECK(labeled_partition_count(4, 3) == 369600);
  CHECK(labeled_partition_count(2, 1) == 2);
  CHECK(labeled_partition_count(40, 40) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("search_balanced_realization") {
  const StrictDigraph cycle = StrictDigraph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  auto found = search_balanced_realization(cycle, 3);
  REQUIRE(found);
  CHECK(is_balanced(*found).balanced);
  CHECK(*is_balanced(*found).p > Fraction{1, 2});
  CHECK(realizes(*found, cycle));

  const StrictDigraph transitive =
      StrictDigraph::from_edges(3, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK_FALSE(search_balanced_realization(transitive, 3));

  // Balanced with p = 2/3 yet transitive, so it is not an answer.
  const DiceSet transitive_set({{1, 2, 9}, {3, 4, 8}, {5, 6, 7}});
  CHECK(is_balanced(transitive_set).p == Fraction{2, 3});
  CHECK(realizes(transitive_set, transitive.reversed()));
  CHECK_FALSE(search_balanced_realization(transitive.reversed(), 3));

  // 0 beats everyone, the rest form a cycle: non-transitive but not strong.
  const StrictDigraph king = StrictDigraph::from_edges(
      4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
  CHECK(find_complete_dicut(king));
  CHECK_FALSE(search_balanced_realization(king, 3));

  const StrictDigraph one_edge = StrictDigraph::from_edges(3, std::vector<Edge>{{0, 1}});
  found = search_balanced_realization(one_edge, 3);
  REQUIRE(found);
  CHECK(realizes(*found, one_edge));
  CHECK(is_balanced(*found).balanced);

  // Searching with the flipped convention realizes the reversed graph.
  found = search_balanced_realization(cycle, 3, EdgeConvention::loser_to_winner);
  REQUIRE(found);
  CHECK(realizes(*found, cycle.reversed()));

  CHECK_THROWS_AS(search_balanced_realization(StrictDigraph(2), 3), Error);
  try {
    search_balanced_realization(StrictDigraph(5), 5);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
  }
}

TEST_CASE("search agrees with the complete-dicut criterion on 4 vertices, k = 3") {
  // A sample of 4-vertex graphs; the full 3-vertex sweep lives in the
  // acceptance suite.
  std::mt19937_64 rng(12);
  int checked = 0;
  oracle::for_each_strict_digraph(4, [&](const StrictDigraph& h) {
    if (rng() % 40 != 0) return;
    const auto found = search_balanced_realization(h, 3);
    REQUIRE(found.has_value() == !find_complete_dicut(h).has_value());
    if (found) REQUIRE(realizes(*found, h));
    ++checked;
  });
  CHECK(checked > 5);
}
