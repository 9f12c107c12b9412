#include "strongext/analysis.hpp"

#include <sstream>

namespace strongext {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::strongly_connectable: return "strongly-connectable";
    case Verdict::not_connectable: return "not-connectable";
    case Verdict::already_strong: return "already-strong";
    case Verdict::too_small: return "too-small";
  }
  return "unknown";
}

CondensationSummary summarize(const StrictDigraph& g) {
  const Condensation cond = strong_components(g);
  return {g.order(), cond.r(), cond.s(), cond.t(), cond.c(), cond.c_prime(), cond.u()};
}

AnalysisReport analyze(const StrictDigraph& g, const BoundsOptions& options) {
  if (g.order() == 0) throw Error(Errc::empty_graph, "graph has no vertices");
  AnalysisReport report;
  report.summary = summarize(g);
  if (g.order() < 3) {
    report.verdict = Verdict::too_small;
  } else if (report.summary.r == 1) {
    report.verdict = Verdict::already_strong;
  } else if (auto cert = find_complete_dicut(g)) {
    report.verdict = Verdict::not_connectable;
    report.certificate = std::move(cert);
  } else {
    report.verdict = Verdict::strongly_connectable;
    report.plan = extend(g);
    report.bounds = bounds(g, options);
  }
  return report;
}

std::string format_summary(const CondensationSummary& s) {
  std::ostringstream out;
  out << "n: " << s.n << "\nr: " << s.r << "\ns: " << s.s << "\nt: " << s.t << "\nc: " << s.c
      << "\nc_prime: " << s.c_prime << "\nu: " << s.u << '\n';
  return out.str();
}

std::string format_report(const AnalysisReport& report) {
  std::string text = std::string("verdict: ") + to_string(report.verdict) + "\n";
  text += format_summary(report.summary);
  if (report.certificate) text += format_dicut(*report.certificate) + "\n";
  if (report.plan) {
    text += "added: " + std::to_string(report.plan->added.size()) + "\nplan:\n";
    text += format_plan(*report.plan);
  }
  if (report.bounds) text += "bounds:\n" + format_bounds(*report.bounds);
  return text;
}

bool verify_certificate(const StrictDigraph& g, const Certificate& cert) {
  if (const auto* dicut = std::get_if<DicutCertificate>(&cert)) {
    try {
      return verify_complete_dicut(g, *dicut);
    } catch (const Error&) {
      return false;
    }
  }
  const auto& ext = std::get<ExtensionCertificate>(cert);
  StrictDigraph h = g;
  for (const Edge& e : ext.added) {
    try {
      if (!h.add_edge(e.from, e.to)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  if (ext.resulting && !(*ext.resulting == h)) return false;
  return is_strong(h);
}

}  // namespace strongext
