#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "strongext/dice.hpp"
#include "strongext/dicut.hpp"
#include "strongext/extend.hpp"
#include "strongext/graph.hpp"

namespace strongext {

// Edge-list text: a header line `n <N>`, then one `<u> <v>` per edge. Blank
// lines and lines starting with '#' are skipped anywhere. Repeated edges are
// collapsed. Errors are ParseError with the 1-based line number.
StrictDigraph parse_edge_list(std::string_view text);

/// Header plus edges in lexicographic order, newline-terminated.
std::string serialize_edge_list(const StrictDigraph& g);

/// `digraph { ... }` for visualization only; isolated vertices are listed.
std::string to_dot(const StrictDigraph& g);

/// `dicut: {0, 2}`
std::string format_dicut(const DicutCertificate& cert);

/// `+ u v` per added edge, then the resulting edge list.
std::string format_plan(const ExtensionPlan& plan);

/// `key: value` lines in a fixed order; absent values print as `none`.
std::string format_bounds(const BoundsReport& report);

struct ExtensionCertificate {
  std::vector<Edge> added;
  std::optional<StrictDigraph> resulting;
};

using Certificate = std::variant<DicutCertificate, ExtensionCertificate>;

/// Reads either certificate kind back from format_dicut / format_plan text.
Certificate parse_certificate(std::string_view text);

/// Dice text: one die per line, faces separated by whitespace.
DiceSet parse_dice(std::string_view text);

std::string format_dice(const DiceSet& dice);

/// Rows of exact fractions `a/b`, `-` on the diagonal.
std::string format_win_matrix(const WinMatrix& wins);

}  // namespace strongext
