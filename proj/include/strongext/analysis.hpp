#pragma once

#include <optional>

#include "strongext/dicut.hpp"
#include "strongext/extend.hpp"
#include "strongext/graph.hpp"
#include "strongext/io.hpp"

namespace strongext {

enum class Verdict { strongly_connectable, not_connectable, already_strong, too_small };

const char* to_string(Verdict verdict);

struct CondensationSummary {
  int n = 0;
  int r = 0;
  int s = 0;
  int t = 0;
  int c = 0;
  int c_prime = 0;
  int u = 0;
};

CondensationSummary summarize(const StrictDigraph& g);

struct AnalysisReport {
  Verdict verdict = Verdict::too_small;
  CondensationSummary summary;
  std::optional<DicutCertificate> certificate;  // iff not_connectable
  std::optional<ExtensionPlan> plan;            // iff strongly_connectable
  std::optional<BoundsReport> bounds;           // iff strongly_connectable
};

/// Decision procedure with its certificate. Throws empty_graph for n = 0.
AnalysisReport analyze(const StrictDigraph& g, const BoundsOptions& options = {});

std::string format_summary(const CondensationSummary& summary);
std::string format_report(const AnalysisReport& report);

/// Checks a certificate of either kind against g. Structurally broken
/// certificates (bad vertices, duplicated or conflicting edges) are invalid.
bool verify_certificate(const StrictDigraph& g, const Certificate& cert);

}  // namespace strongext
