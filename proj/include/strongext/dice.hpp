#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strongext/graph.hpp"

namespace strongext {

using Face = std::int64_t;
using Die = std::vector<Face>;

/// Exact non-negative rational; comparisons cross-multiply and never reduce.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// n dice with k faces each; all n*k faces distinct. Faces are stored sorted
/// within each die.
class DiceSet {
 public:
  /// Throws invalid_dice for empty dice, uneven sizes, or repeated faces.
  explicit DiceSet(std::vector<Die> dice);

  int count() const noexcept { return static_cast<int>(dice_.size()); }
  int sides() const noexcept { return dice_.empty() ? 0 : static_cast<int>(dice_[0].size()); }
  const Die& die(int i) const { return dice_[i]; }
  const std::vector<Die>& dice() const noexcept { return dice_; }

  /// Same win relations with faces renumbered 1..n*k by rank.
  DiceSet canonical() const;

  friend bool operator==(const DiceSet&, const DiceSet&) = default;

 private:
  std::vector<Die> dice_;
};

/// Favorable pair counts over k^2 for every ordered pair of distinct dice.
class WinMatrix {
 public:
  explicit WinMatrix(const DiceSet& dice);

  int count() const noexcept { return n_; }
  std::int64_t denominator() const noexcept { return den_; }
  std::int64_t favorable(int i, int j) const { return counts_[i * n_ + j]; }
  Fraction at(int i, int j) const { return {favorable(i, j), den_}; }

 private:
  int n_ = 0;
  std::int64_t den_ = 1;
  std::vector<std::int64_t> counts_;
};

/// Probability that a face of `a` exceeds a face of `b`. Throws invalid_dice
/// when the dice share a face or differ in size.
Fraction win_probability(std::span<const Face> a, std::span<const Face> b);

/// Which way an edge points between a winner and a loser.
enum class EdgeConvention {
  winner_to_loser,  // u -> v when u's die beats v's (default)
  loser_to_winner,  // u -> v when v's die beats u's
};

/// An edge for every pair with p != 1/2; a tournament whenever k is odd.
StrictDigraph beats_digraph(const DiceSet& dice,
                            EdgeConvention convention = EdgeConvention::winner_to_loser);

enum class BalanceKind {
  unbalanced,
  even,           // every pair splits 1/2 : 1/2
  proper,         // common p with 1/2 < p < 1
  deterministic,  // common p = 1
};

struct Balance {
  bool balanced = false;
  std::optional<Fraction> p;  // the larger value of the common pair
  BalanceKind kind = BalanceKind::unbalanced;
};

/// Throws invalid_dice for fewer than two dice.
Balance is_balanced(const DiceSet& dice);

/// h is a subgraph of beats_digraph(dice). Throws invalid_input on an order
/// mismatch.
bool realizes(const DiceSet& dice, const StrictDigraph& h,
              EdgeConvention convention = EdgeConvention::winner_to_loser);

inline constexpr std::uint64_t kRealizationBudget = 10'000'000;

/// (nk)! / (k!)^n, saturating at UINT64_MAX.
std::uint64_t labeled_partition_count(int n, int k);

/// Exhaustive search over ordered partitions of {1..n*k} into n dice of k
/// faces. Faces are placed in increasing order, each on the lowest-index die
/// with room first; returns the first set that is balanced with p > 1/2,
/// whose beats digraph is strongly connected, and which realizes h. A set with
/// a transitive or otherwise non-strong beats digraph does not count, so p = 1
/// never qualifies. Throws too_small for n < 3, invalid_input for k < 1, and
/// budget_exceeded above kRealizationBudget partitions.
std::optional<DiceSet> search_balanced_realization(
    const StrictDigraph& h, int sides,
    EdgeConvention convention = EdgeConvention::winner_to_loser);

}  // namespace strongext
