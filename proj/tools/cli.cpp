#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "strongext/analysis.hpp"
#include "strongext/dice.hpp"
#include "strongext/io.hpp"

namespace strongext::cli {

namespace {

using nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StrictDigraph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : edges) arr.push_back({e.from, e.to});
  return arr;
}

ordered_json graph_json(const StrictDigraph& g) {
  return {{"n", g.order()}, {"edges", edges_json(g.edges())}};
}

ordered_json optional_json(const std::optional<int>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json bounds_json(const BoundsReport& b) {
  return {{"lower", b.lower},
          {"lower_matched", optional_json(b.lower_matched)},
          {"upper_theorem", b.upper_theorem},
          {"upper_cyclic", optional_json(b.upper_cyclic)},
          {"upper_cyclic_sorted", optional_json(b.upper_cyclic_sorted)},
          {"upper_cyclic_method",
           !b.upper_cyclic ? ordered_json(nullptr)
                           : ordered_json(b.cyclic_exhaustive ? "exhaustive" : "heuristic")},
          {"upper_prop", optional_json(b.upper_prop)},
          {"u_minus_c_prime", optional_json(b.u_minus_c_prime)},
          {"brute_min", optional_json(b.brute_min)}};
}

ordered_json summary_json(const CondensationSummary& s) {
  return {{"n", s.n}, {"r", s.r}, {"s", s.s}, {"t", s.t},
          {"c", s.c}, {"c_prime", s.c_prime}, {"u", s.u}};
}

ordered_json plan_json(const ExtensionPlan& plan) {
  return {{"added", edges_json(plan.added)}, {"resulting", graph_json(plan.resulting)}};
}

ordered_json report_json(const AnalysisReport& r) {
  ordered_json j = {{"verdict", to_string(r.verdict)}, {"summary", summary_json(r.summary)}};
  j["dicut"] = r.certificate ? ordered_json(r.certificate->side) : ordered_json(nullptr);
  j["plan"] = r.plan ? plan_json(*r.plan) : ordered_json(nullptr);
  j["bounds"] = r.bounds ? bounds_json(*r.bounds) : ordered_json(nullptr);
  return j;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::strongly_connectable:
    case Verdict::already_strong: return kSuccess;
    case Verdict::not_connectable: return kNegative;
    case Verdict::too_small: return kInputError;
  }
  return kInputError;
}

EdgeConvention parse_convention(const std::string& name) {
  if (name == "winner-to-loser") return EdgeConvention::winner_to_loser;
  if (name == "loser-to-winner") return EdgeConvention::loser_to_winner;
  throw InputError("unknown convention " + name);
}

const char* convention_note(EdgeConvention c) {
  return c == EdgeConvention::winner_to_loser ? "u -> v means die u beats die v"
                                              : "u -> v means die v beats die u";
}

const char* balance_name(BalanceKind kind) {
  switch (kind) {
    case BalanceKind::unbalanced: return "unbalanced";
    case BalanceKind::even: return "even";
    case BalanceKind::proper: return "proper";
    case BalanceKind::deterministic: return "deterministic";
  }
  return "unknown";
}

// --- commands ----------------------------------------------------------------

struct Options {
  std::string file;
  std::string verify;
  std::string convention = "winner-to-loser";
  std::string family;
  std::vector<int> params;
  int sides = 0;
  bool json = false;
  bool minimize = false;
  bool dot = false;
  bool no_brute_force = false;
};

int cmd_analyze(const Options& opt, std::ostream& out) {
  const AnalysisReport report = analyze(load_graph(opt.file), {!opt.no_brute_force});
  if (opt.json)
    out << report_json(report).dump(2) << '\n';
  else
    out << format_report(report);
  return verdict_exit(report.verdict);
}

int cmd_certify(const Options& opt, std::ostream& out) {
  const StrictDigraph g = load_graph(opt.file);
  if (!opt.verify.empty()) {
    const Certificate cert = parse_certificate(read_file(opt.verify));
    const bool ok = verify_certificate(g, cert);
    const char* kind = std::holds_alternative<DicutCertificate>(cert) ? "dicut" : "extension";
    if (opt.json)
      out << ordered_json{{"kind", kind}, {"valid", ok}}.dump(2) << '\n';
    else
      out << kind << ": " << (ok ? "valid" : "invalid") << '\n';
    return ok ? kSuccess : kNegative;
  }
  const AnalysisReport report = analyze(g, {false});
  if (report.verdict == Verdict::too_small) {
    out << "verdict: too-small\n";
    return kInputError;
  }
  if (report.certificate) {
    out << (opt.json ? ordered_json{{"dicut", report.certificate->side}}.dump(2)
                     : format_dicut(*report.certificate))
        << '\n';
    return kNegative;
  }
  const ExtensionPlan plan = report.plan ? *report.plan : ExtensionPlan{{}, g};
  if (opt.json)
    out << plan_json(plan).dump(2) << '\n';
  else
    out << format_plan(plan);
  return kSuccess;
}

int cmd_extend(const Options& opt, std::ostream& out) {
  const StrictDigraph g = load_graph(opt.file);
  if (g.order() < 3) {
    out << "verdict: too-small\n";
    return kInputError;
  }
  if (auto cert = find_complete_dicut(g)) {
    out << "verdict: not-connectable\n" << format_dicut(*cert) << '\n';
    return kNegative;
  }
  ExtensionPlan plan;
  if (opt.minimize) {
    auto exact = brute_force_min_extension(g);
    plan = exact->plan;
  } else {
    plan = extend(g);
  }
  if (opt.json)
    out << plan_json(plan).dump(2) << '\n';
  else if (opt.dot)
    out << to_dot(plan.resulting);
  else
    out << format_plan(plan);
  return kSuccess;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
  const StrictDigraph g = load_graph(opt.file);
  if (g.order() < 3) {
    out << "verdict: too-small\n";
    return kInputError;
  }
  if (auto cert = find_complete_dicut(g)) {
    out << "verdict: not-connectable\n" << format_dicut(*cert) << '\n';
    return kNegative;
  }
  const BoundsReport report = bounds(g, {!opt.no_brute_force});
  if (opt.json)
    out << bounds_json(report).dump(2) << '\n';
  else
    out << format_bounds(report);
  return kSuccess;
}

int cmd_dice_eval(const Options& opt, std::ostream& out) {
  const DiceSet dice = parse_dice(read_file(opt.file));
  const EdgeConvention convention = parse_convention(opt.convention);
  const WinMatrix wins(dice);
  const StrictDigraph beats = beats_digraph(dice, convention);
  std::optional<Balance> balance;
  if (dice.count() >= 2) balance = is_balanced(dice);

  if (opt.json) {
    ordered_json matrix = ordered_json::array();
    for (int i = 0; i < wins.count(); ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < wins.count(); ++j)
        row.push_back(i == j ? ordered_json(nullptr) : ordered_json(wins.at(i, j).str()));
      matrix.push_back(row);
    }
    ordered_json j = {{"convention", convention_note(convention)},
                      {"dice", dice.dice()},
                      {"wins", matrix}};
    j["balanced"] = balance ? ordered_json(balance->balanced) : ordered_json(nullptr);
    j["p"] = balance && balance->p ? ordered_json(balance->p->str()) : ordered_json(nullptr);
    j["balance_kind"] = balance ? ordered_json(balance_name(balance->kind)) : ordered_json(nullptr);
    j["beats"] = graph_json(beats);
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  out << "convention: " << convention_note(convention) << '\n';
  out << "dice:\n" << format_dice(dice);
  out << "wins:\n" << format_win_matrix(wins);
  if (balance) {
    out << "balanced: " << (balance->balanced ? "yes" : "no") << '\n';
    out << "p: " << (balance->p ? balance->p->str() : "none") << '\n';
    out << "balance_kind: " << balance_name(balance->kind) << '\n';
  } else {
    out << "balanced: none\np: none\nbalance_kind: none\n";
  }
  out << "beats:\n" << serialize_edge_list(beats);
  return kSuccess;
}

int cmd_dice_realize(const Options& opt, std::ostream& out) {
  const StrictDigraph h = load_graph(opt.file);
  const EdgeConvention convention = parse_convention(opt.convention);
  const auto found = search_balanced_realization(h, opt.sides, convention);
  if (found) {
    const Balance balance = is_balanced(*found);
    out << "convention: " << convention_note(convention) << '\n';
    out << "realization:\n" << format_dice(*found);
    out << "wins:\n" << format_win_matrix(WinMatrix(*found));
    out << "p: " << balance.p->str() << '\n';
    out << "beats:\n" << serialize_edge_list(beats_digraph(*found, convention));
    return kSuccess;
  }
  out << "no balanced realization with " << opt.sides << " sides\n";
  if (auto cert = find_complete_dicut(h))
    out << "reason: complete dicut, so no strong extension exists\n" << format_dicut(*cert) << '\n';
  return kNegative;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  auto need = [&](std::size_t count) {
    if (opt.params.size() != count)
      throw InputError("family " + opt.family + " takes " + std::to_string(count) + " parameters");
  };
  StrictDigraph g;
  if (opt.family == "tt-minus-path") {
    need(1);
    g = gen_tt_minus_path(opt.params[0]);
  } else if (opt.family == "bipartite") {
    need(2);
    g = gen_bipartite_plus_isolated(opt.params[0], opt.params[1]);
  } else if (opt.family == "cycles") {
    need(2);
    g = gen_disjoint_cycles(opt.params[0], opt.params[1]);
  } else {
    throw InputError("unknown family " + opt.family);
  }
  out << (opt.dot ? to_dot(g) : serialize_edge_list(g));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong connectability of strict digraphs and balanced dice"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze_cmd = app.add_subcommand("analyze", "decide strong connectability with a certificate");
  analyze_cmd->add_option("file", opt.file, "edge-list file")->required();
  analyze_cmd->add_flag("--json", opt.json, "machine-readable output");
  analyze_cmd->add_flag("--no-brute-force", opt.no_brute_force, "skip the exact minimum");

  auto* certify_cmd = app.add_subcommand("certify", "emit or check a certificate");
  certify_cmd->add_option("file", opt.file, "edge-list file")->required();
  certify_cmd->add_option("--verify", opt.verify, "certificate file to check");
  certify_cmd->add_flag("--json", opt.json, "machine-readable output");

  auto* extend_cmd = app.add_subcommand("extend", "construct a strong extension");
  extend_cmd->add_option("file", opt.file, "edge-list file")->required();
  extend_cmd->add_flag("--minimize", opt.minimize, "exact minimum by enumeration");
  extend_cmd->add_flag("--dot", opt.dot, "emit the resulting graph as DOT");
  extend_cmd->add_flag("--json", opt.json, "machine-readable output");

  auto* bounds_cmd = app.add_subcommand("bounds", "edge-addition bounds");
  bounds_cmd->add_option("file", opt.file, "edge-list file")->required();
  bounds_cmd->add_flag("--json", opt.json, "machine-readable output");
  bounds_cmd->add_flag("--no-brute-force", opt.no_brute_force, "skip the exact minimum");

  auto* dice_cmd = app.add_subcommand("dice", "evaluate or search dice sets");
  dice_cmd->require_subcommand(1);
  auto* eval_cmd = dice_cmd->add_subcommand("eval", "win matrix, balance and beats digraph");
  eval_cmd->add_option("file", opt.file, "dice file")->required();
  eval_cmd->add_option("--convention", opt.convention, "winner-to-loser or loser-to-winner");
  eval_cmd->add_flag("--json", opt.json, "machine-readable output");
  auto* realize_cmd = dice_cmd->add_subcommand("realize", "search balanced dice realizing a digraph");
  realize_cmd->add_option("file", opt.file, "edge-list file")->required();
  realize_cmd->add_option("-k,--sides", opt.sides, "faces per die")->required();
  realize_cmd->add_option("--convention", opt.convention, "winner-to-loser or loser-to-winner");

  auto* gen_cmd = app.add_subcommand("gen", "generate example families");
  gen_cmd->add_option("family", opt.family, "tt-minus-path | bipartite | cycles")->required();
  gen_cmd->add_option("params", opt.params, "family parameters")->required();
  gen_cmd->add_flag("--dot", opt.dot, "emit DOT instead of an edge list");

  std::vector<std::string> argv_storage{"strongext"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(opt, out);
    if (*certify_cmd) return cmd_certify(opt, out);
    if (*extend_cmd) return cmd_extend(opt, out);
    if (*bounds_cmd) return cmd_bounds(opt, out);
    if (*eval_cmd) return cmd_dice_eval(opt, out);
    if (*realize_cmd) return cmd_dice_realize(opt, out);
    if (*gen_cmd) return cmd_gen(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::budget_exceeded ? kBudgetExceeded : kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace strongext::cli
