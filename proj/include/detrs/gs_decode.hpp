#pragma once

#include <optional>
#include <vector>

#include "detrs/interpolate.hpp"
#include "detrs/split.hpp"

namespace detrs {

// Sum of (deg_Y - 1) over the members.
long potential(const std::vector<BiPoly>& members);

struct RefineEvent {
  BiPoly chosen;
  std::size_t witness;
  SplitOutcome out;
  long phi_before, phi_after;
};

// Canonically ordered, content-free, useful members plus the audit trail.
struct RefinementSet {
  std::vector<BiPoly> members;
  std::vector<RefineEvent> trace;
};

// Splits unstable members of Y-degree >= 2 at their first unstable point
// until every such member is stable. Throws PotentialNotDecreasing if an
// iteration fails to lower the potential.
RefinementSet refine(const BiPoly& qprime, const ReceivedWord& w, SplitStats* stats = nullptr);

std::vector<UniPoly> extract(const RefinementSet& s, const ReceivedWord& w, int k, int t);

struct GsReport {
  DecodeParams params;
  BiPoly q, qprime;
  UniPoly content;
  bool below_threshold = false;  // t > n, nothing can qualify
  bool useless = false;
  RefinementSet set;
  SplitStats stats;
  std::vector<UniPoly> list;
};

// t defaults to floor(sqrt((k-1)n)) + 1.
GsReport gs_decode_report(const ReceivedWord& w, int k, std::optional<int> t = std::nullopt);
std::vector<UniPoly> gs_decode(const ReceivedWord& w, int k, std::optional<int> t = std::nullopt);

}  // namespace detrs
