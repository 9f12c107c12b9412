#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "strongext/dicut.hpp"
#include "strongext/extend.hpp"

using namespace strongext;

namespace {

StrictDigraph make(int n, std::vector<Edge> edges) { return StrictDigraph::from_edges(n, edges); }

const StrictDigraph kTransitive3 = make(3, {{0, 1}, {0, 2}, {1, 2}});
const StrictDigraph kPath = make(3, {{0, 1}, {1, 2}});
const StrictDigraph kTriangle = make(3, {{0, 1}, {1, 2}, {2, 0}});
const StrictDigraph kK22MinusOne = make(4, {{0, 2}, {0, 3}, {1, 2}});

// Independent scan of every subset by bitmask, checking the definition.
std::vector<std::vector<Vertex>> all_complete_dicuts(const StrictDigraph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> found;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    bool ok = true;
    for (Vertex x = 0; x < n && ok; ++x) {
      if (!(mask >> x & 1)) continue;
      for (Vertex y = 0; y < n && ok; ++y)
        if (!(mask >> y & 1)) ok = g.has_edge(x, y) && !g.has_edge(y, x);
    }
    if (!ok) continue;
    std::vector<Vertex> side;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) side.push_back(v);
    found.push_back(side);
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

TEST_CASE("verify_complete_dicut") {
  CHECK(verify_complete_dicut(kTransitive3, {{0}}));
  CHECK_FALSE(verify_complete_dicut(kPath, {{0}}));  // 0->2 missing
  CHECK_FALSE(verify_complete_dicut(kPath, {{1}}));  // back edge 0->1
  CHECK(verify_complete_dicut(kTransitive3, {{0, 1}}));

  for (const DicutCertificate& bad : {DicutCertificate{{}}, DicutCertificate{{0, 1, 2}},
                                      DicutCertificate{{0, 0}}, DicutCertificate{{7}}}) {
    try {
      verify_complete_dicut(kTransitive3, bad);
      FAIL("expected invalid certificate");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::invalid_certificate);
    }
  }
}

TEST_CASE("find_complete_dicut examples") {
  CHECK(find_complete_dicut(kTransitive3) == DicutCertificate{{0}});
  CHECK(all_complete_dicuts(kPath).empty());
  CHECK_FALSE(find_complete_dicut(kPath));
  CHECK(all_complete_dicuts(kK22MinusOne).empty());
  CHECK_FALSE(find_complete_dicut(kK22MinusOne));
  CHECK_FALSE(find_complete_dicut(kTriangle));
  CHECK_FALSE(find_complete_dicut(StrictDigraph(1)));
  CHECK_FALSE(find_complete_dicut(StrictDigraph(0)));
  // Out-star: center is a complete dicut.
  CHECK(find_complete_dicut(make(3, {{0, 1}, {0, 2}})) == DicutCertificate{{0}});
}

TEST_CASE("brute_force_complete_dicut examples") {
  CHECK(brute_force_complete_dicut(make(3, {{0, 1}, {0, 2}})) == DicutCertificate{{0}});
  CHECK_FALSE(brute_force_complete_dicut(kTriangle));
  const StrictDigraph two = make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(all_complete_dicuts(two).empty());
  CHECK_FALSE(brute_force_complete_dicut(two));
  // Lexicographic order of sorted lists prefers {0, 1} over {1}.
  const StrictDigraph sink_first = make(3, {{1, 0}, {1, 2}, {0, 2}});
  CHECK(all_complete_dicuts(sink_first) ==
        std::vector<std::vector<Vertex>>{{0, 1}, {1}});
  CHECK(brute_force_complete_dicut(sink_first) == DicutCertificate{{0, 1}});
  CHECK(find_complete_dicut(sink_first) == DicutCertificate{{0, 1}});

  try {
    brute_force_complete_dicut(StrictDigraph(kSubsetBudgetOrder + 1));
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
  }
}

TEST_CASE("dicut_deficiency") {
  auto d = dicut_deficiency(kTransitive3);
  REQUIRE(d);
  CHECK(d->missing == 0);
  CHECK(d->witness == DicutCertificate{{0}});

  d = dicut_deficiency(kPath);
  REQUIRE(d);
  CHECK(d->missing == 1);
  CHECK(d->witness == DicutCertificate{{0}});

  CHECK_FALSE(dicut_deficiency(kTriangle));
}

TEST_CASE("polynomial detector matches brute force, all graphs n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_strict_digraph(n, [&](const StrictDigraph& g) {
      const auto fast = find_complete_dicut(g);
      const auto slow = brute_force_complete_dicut(g);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        REQUIRE(*fast == *slow);
        REQUIRE(verify_complete_dicut(g, *fast));
      }
      const auto all = all_complete_dicuts(g);
      REQUIRE(all.empty() == !slow.has_value());
      if (slow) REQUIRE(all.front() == slow->side);

      const auto def = dicut_deficiency(g);
      REQUIRE(def.has_value() == !oracle::strong(g));
      if (def) REQUIRE((def->missing == 0) == fast.has_value());
    });
  }
}

TEST_CASE("polynomial detector matches brute force on random graphs n <= 12") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 1200; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const double density = std::uniform_real_distribution<double>(0.4, 1.0)(rng);
    const StrictDigraph g = oracle::random_strict_digraph(rng, n, density);
    const auto fast = find_complete_dicut(g);
    const auto slow = brute_force_complete_dicut(g);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      REQUIRE(*fast == *slow);
      REQUIRE(verify_complete_dicut(g, *fast));
    }
  }
}

TEST_CASE("a complete dicut rules out every completion (n <= 5)") {
  for (int n = 3; n <= 5; ++n) {
    std::mt19937_64 rng(static_cast<unsigned>(n));
    int checked = 0;
    oracle::for_each_strict_digraph(n, [&](const StrictDigraph& g) {
      if (n == 5 && rng() % 20 != 0) return;  // sample n = 5
      if (find_complete_dicut(g)) {
        REQUIRE_FALSE(oracle::some_completion_strong(g));
        ++checked;
      }
    });
    CHECK(checked > 0);
  }
}
