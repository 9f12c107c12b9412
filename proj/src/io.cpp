#include "strongext/io.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace strongext {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_tokens(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != '#') lines.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return lines;
}

template <typename Int>
bool parse_int(std::string_view token, Int& value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

Edge parse_edge_tokens(const Line& line, std::size_t offset) {
  if (line.tokens.size() != offset + 2)
    throw ParseError(Errc::malformed_line, line.number, "expected two vertex indices");
  long long u = 0, v = 0;
  if (!parse_int(line.tokens[offset], u) || !parse_int(line.tokens[offset + 1], v))
    throw ParseError(Errc::malformed_line, line.number, "vertex indices must be decimal integers");
  if (u < std::numeric_limits<int>::min() || u > std::numeric_limits<int>::max() ||
      v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(Errc::vertex_out_of_range, line.number, "vertex index out of range");
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

StrictDigraph parse_graph_lines(const std::vector<Line>& lines, std::size_t first) {
  if (first >= lines.size())
    throw ParseError(Errc::malformed_line, lines.empty() ? 1 : lines.back().number + 1,
                     "missing header `n <N>`");
  const Line& header = lines[first];
  int n = 0;
  if (header.tokens.size() != 2 || header.tokens[0] != "n" || !parse_int(header.tokens[1], n) ||
      n < 0)
    throw ParseError(Errc::malformed_line, header.number, "expected header `n <N>`");

  StrictDigraph g(n);
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    const Edge e = parse_edge_tokens(lines[i], 0);
    try {
      g.add_edge(e.from, e.to);
    } catch (const Error& err) {
      throw ParseError(err.code(), lines[i].number, err.what());
    }
  }
  return g;
}

}  // namespace

StrictDigraph parse_edge_list(std::string_view text) {
  return parse_graph_lines(content_lines(text), 0);
}

std::string serialize_edge_list(const StrictDigraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
  return out.str();
}

std::string to_dot(const StrictDigraph& g) {
  std::ostringstream out;
  out << "digraph {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.out_neighbors(v).empty() && g.in_neighbors(v).empty()) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.from << " -> " << e.to << ";\n";
  out << "}\n";
  return out.str();
}

std::string format_dicut(const DicutCertificate& cert) {
  std::string text = "dicut: {";
  for (std::size_t i = 0; i < cert.side.size(); ++i) {
    if (i) text += ", ";
    text += std::to_string(cert.side[i]);
  }
  return text + "}";
}

std::string format_plan(const ExtensionPlan& plan) {
  std::string text;
  for (const Edge& e : plan.added)
    text += "+ " + std::to_string(e.from) + " " + std::to_string(e.to) + "\n";
  return text + serialize_edge_list(plan.resulting);
}

std::string format_bounds(const BoundsReport& report) {
  auto value = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
  std::ostringstream out;
  out << "lower: " << report.lower << '\n';
  out << "lower_matched: " << value(report.lower_matched) << '\n';
  out << "upper_theorem: " << report.upper_theorem << '\n';
  out << "upper_cyclic: " << value(report.upper_cyclic) << '\n';
  out << "upper_cyclic_sorted: " << value(report.upper_cyclic_sorted) << '\n';
  out << "upper_cyclic_method: "
      << (!report.upper_cyclic ? "none" : report.cyclic_exhaustive ? "exhaustive" : "heuristic")
      << '\n';
  out << "upper_prop: " << value(report.upper_prop) << '\n';
  out << "u_minus_c_prime: " << value(report.u_minus_c_prime) << '\n';
  out << "brute_min: " << value(report.brute_min) << '\n';
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(Errc::malformed_line, 1, "empty certificate");

  if (lines.front().tokens.front().starts_with("dicut:")) {
    if (lines.size() != 1)
      throw ParseError(Errc::malformed_line, lines[1].number, "unexpected text after dicut");
    // Re-join and strip the braces: `dicut: {0, 2}`.
    std::string body;
    for (auto tok : lines.front().tokens) body += std::string(tok) + " ";
    body.erase(0, std::string("dicut:").size());
    const auto open = body.find('{');
    const auto close = body.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open ||
        body.find_first_not_of(' ') != open || body.find_first_not_of(' ', close + 1) != std::string::npos)
      throw ParseError(Errc::malformed_line, lines.front().number, "expected `dicut: {v, ...}`");
    DicutCertificate cert;
    std::string inner = body.substr(open + 1, close - open - 1);
    for (char& ch : inner)
      if (ch == ',') ch = ' ';
    for (auto tok : split_tokens(inner)) {
      Vertex v = 0;
      if (!parse_int(tok, v))
        throw ParseError(Errc::malformed_line, lines.front().number, "bad vertex in dicut");
      cert.side.push_back(v);
    }
    return cert;
  }

  ExtensionCertificate cert;
  std::size_t i = 0;
  for (; i < lines.size() && lines[i].tokens.front() == "+"; ++i)
    cert.added.push_back(parse_edge_tokens(lines[i], 1));
  if (i < lines.size()) cert.resulting = parse_graph_lines(lines, i);
  return cert;
}

DiceSet parse_dice(std::string_view text) {
  std::vector<Die> dice;
  for (const Line& line : content_lines(text)) {
    Die die;
    for (auto tok : line.tokens) {
      Face f = 0;
      if (!parse_int(tok, f))
        throw ParseError(Errc::malformed_line, line.number, "faces must be decimal integers");
      die.push_back(f);
    }
    dice.push_back(std::move(die));
  }
  if (dice.empty()) throw ParseError(Errc::malformed_line, 1, "no dice given");
  return DiceSet(std::move(dice));
}

std::string format_dice(const DiceSet& dice) {
  std::string text;
  for (const Die& d : dice.dice()) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i) text += ' ';
      text += std::to_string(d[i]);
    }
    text += '\n';
  }
  return text;
}

std::string format_win_matrix(const WinMatrix& wins) {
  std::string text;
  for (int i = 0; i < wins.count(); ++i) {
    for (int j = 0; j < wins.count(); ++j) {
      if (j) text += ' ';
      text += i == j ? std::string("-") : wins.at(i, j).str();
    }
    text += '\n';
  }
  return text;
}

}  // namespace strongext
