#include "strongext/dice.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace strongext {

DiceSet::DiceSet(std::vector<Die> dice) : dice_(std::move(dice)) {
  if (dice_.empty()) throw Error(Errc::invalid_dice, "a dice set needs at least one die");
  const std::size_t k = dice_[0].size();
  std::vector<Face> all;
  for (std::size_t i = 0; i < dice_.size(); ++i) {
    if (dice_[i].empty())
      throw Error(Errc::invalid_dice, "die " + std::to_string(i) + " has no faces");
    if (dice_[i].size() != k) {
      throw Error(Errc::invalid_dice, "die " + std::to_string(i) + " has " +
                                          std::to_string(dice_[i].size()) + " faces, expected " +
                                          std::to_string(k));
    }
    std::sort(dice_[i].begin(), dice_[i].end());
    all.insert(all.end(), dice_[i].begin(), dice_[i].end());
  }
  std::sort(all.begin(), all.end());
  if (auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end())
    throw Error(Errc::invalid_dice, "face " + std::to_string(*dup) + " appears more than once");
}

DiceSet DiceSet::canonical() const {
  std::vector<Face> all;
  for (const Die& d : dice_) all.insert(all.end(), d.begin(), d.end());
  std::sort(all.begin(), all.end());
  std::vector<Die> ranked = dice_;
  for (Die& d : ranked)
    for (Face& f : d) f = std::lower_bound(all.begin(), all.end(), f) - all.begin() + 1;
  return DiceSet(std::move(ranked));
}

namespace {

// Pairs (x, y) with x > y; both inputs sorted.
std::int64_t count_wins(std::span<const Face> a, std::span<const Face> b) {
  std::int64_t wins = 0;
  std::size_t below = 0;
  for (Face x : a) {
    while (below < b.size() && b[below] < x) ++below;
    wins += static_cast<std::int64_t>(below);
  }
  return wins;
}

}  // namespace

Fraction win_probability(std::span<const Face> a, std::span<const Face> b) {
  if (a.size() != b.size() || a.empty())
    throw Error(Errc::invalid_dice, "dice must be nonempty and of equal size");
  Die sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<Face> shared;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));
  if (!shared.empty())
    throw Error(Errc::invalid_dice, "dice share face " + std::to_string(shared.front()));
  const auto k = static_cast<std::int64_t>(a.size());
  return {count_wins(sa, sb), k * k};
}

WinMatrix::WinMatrix(const DiceSet& dice)
    : n_(dice.count()),
      den_(static_cast<std::int64_t>(dice.sides()) * dice.sides()),
      counts_(static_cast<std::size_t>(n_) * n_, 0) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j) counts_[i * n_ + j] = count_wins(dice.die(i), dice.die(j));
}

StrictDigraph beats_digraph(const DiceSet& dice, EdgeConvention convention) {
  const WinMatrix wins(dice);
  StrictDigraph g(dice.count());
  for (int i = 0; i < dice.count(); ++i) {
    for (int j = 0; j < dice.count(); ++j) {
      if (i == j || 2 * wins.favorable(i, j) <= wins.denominator()) continue;
      if (convention == EdgeConvention::winner_to_loser)
        g.add_edge(i, j);
      else
        g.add_edge(j, i);
    }
  }
  return g;
}

Balance is_balanced(const DiceSet& dice) {
  if (dice.count() < 2) throw Error(Errc::invalid_dice, "balance needs at least two dice");
  const WinMatrix wins(dice);
  const std::int64_t common = std::max(wins.favorable(0, 1), wins.favorable(1, 0));
  Balance result;
  for (int i = 0; i < dice.count(); ++i)
    for (int j = i + 1; j < dice.count(); ++j)
      if (std::max(wins.favorable(i, j), wins.favorable(j, i)) != common) return result;

  result.balanced = true;
  result.p = Fraction{common, wins.denominator()};
  if (2 * common == wins.denominator())
    result.kind = BalanceKind::even;
  else if (common == wins.denominator())
    result.kind = BalanceKind::deterministic;
  else
    result.kind = BalanceKind::proper;
  return result;
}

bool realizes(const DiceSet& dice, const StrictDigraph& h, EdgeConvention convention) {
  if (h.order() != dice.count()) {
    throw Error(Errc::invalid_input, "digraph has " + std::to_string(h.order()) +
                                         " vertices but there are " +
                                         std::to_string(dice.count()) + " dice");
  }
  const StrictDigraph beats = beats_digraph(dice, convention);
  for (const Edge& e : h.edges())
    if (!beats.has_edge(e.from, e.to)) return false;
  return true;
}

std::uint64_t labeled_partition_count(int n, int k) {
  if (n < 0 || k < 0) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 total = 1;
  int remaining = n * k;
  for (int die = 0; die < n; ++die) {
    // C(remaining, k), built incrementally so every step is exact.
    unsigned __int128 binom = 1;
    for (int i = 1; i <= k; ++i) {
      binom = binom * static_cast<unsigned>(remaining - k + i) / static_cast<unsigned>(i);
      if (binom > kMax) return kMax;
    }
    total *= binom;
    if (total > kMax) return kMax;
    remaining -= k;
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

struct RealizationSearch {
  int n;
  int k;
  std::vector<Edge> required;  // winner -> loser pairs
  std::vector<Die> dice;
  std::vector<std::int64_t> wins;  // n*n favorable counts

  bool accept() const {
    const std::int64_t den = static_cast<std::int64_t>(k) * k;
    const std::int64_t common = std::max(wins[1], wins[n]);
    if (2 * common <= den) return false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::max(wins[i * n + j], wins[j * n + i]) != common) return false;
    if (!std::all_of(required.begin(), required.end(),
                     [&](const Edge& e) { return 2 * wins[e.from * n + e.to] > den; }))
      return false;
    return beats_strong(den);
  }

  // Every die reaches and is reached by die 0 along "beats" steps.
  bool beats_strong(std::int64_t den) const {
    for (const bool forward : {true, false}) {
      std::vector<char> seen(n, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int count = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
          const std::int64_t c = forward ? wins[v * n + w] : wins[w * n + v];
          if (w == v || seen[w] || 2 * c <= den) continue;
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
      if (count < n) return false;
    }
    return true;
  }

  // Face values arrive in increasing order, so the new face beats every face
  // already placed on the other dice.
  bool place(Face value) {
    if (value > static_cast<Face>(n) * k) return accept();
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(dice[i].size()) == k) continue;
      dice[i].push_back(value);
      for (int j = 0; j < n; ++j)
        if (j != i) wins[i * n + j] += static_cast<std::int64_t>(dice[j].size());
      if (place(value + 1)) return true;
      for (int j = 0; j < n; ++j)
        if (j != i) wins[i * n + j] -= static_cast<std::int64_t>(dice[j].size());
      dice[i].pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<DiceSet> search_balanced_realization(const StrictDigraph& h, int sides,
                                                   EdgeConvention convention) {
  const int n = h.order();
  if (n < 3) throw Error(Errc::too_small, "realization search needs at least 3 vertices");
  if (sides < 1) throw Error(Errc::invalid_input, "dice need at least one side");
  const std::uint64_t partitions = labeled_partition_count(n, sides);
  if (partitions > kRealizationBudget) {
    throw Error(Errc::budget_exceeded,
                "search over " + std::to_string(partitions) + " partitions exceeds budget of " +
                    std::to_string(kRealizationBudget));
  }

  RealizationSearch search{n, sides, {}, std::vector<Die>(n), std::vector<std::int64_t>(n * n, 0)};
  for (const Edge& e : h.edges()) {
    if (convention == EdgeConvention::winner_to_loser)
      search.required.push_back(e);
    else
      search.required.push_back({e.to, e.from});
  }
  if (!search.place(1)) return std::nullopt;
  return DiceSet(search.dice);
}

}  // namespace strongext
