#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mergesplit/partition.hpp"
#include "mergesplit/relation.hpp"

namespace mergesplit {

enum class StabilityMethod {
  dp,         // maximality among partitions of N
  dp_direct,  // defection by every partition of N, through the frame
  dc_direct,  // defection by every collection in N, through the frame
  dc_lemma,   // merge condition inside blocks + split condition on incompatible coalitions
};

std::string_view to_string(StabilityMethod method) noexcept;

struct StabilityVerdict {
  bool stable = true;
  /// The deviating collection C whose frame C[P] is not preferred to it
  /// (for dp, a partition P' with P not preferred to P'). Present iff
  /// !stable.
  std::optional<Collection> witness;
  StabilityMethod method = StabilityMethod::dp;
  /// For dc_lemma failures: "merge" (condition on a pair inside a block) or
  /// "split" (condition on a P-incompatible coalition).
  std::string detail;
};

/// D_p-stability. The default checks that P is preferred to every other
/// partition of N; dp_direct evaluates the defection definition instead.
StabilityVerdict is_dp_stable(const Partition& p, const ComparisonRelation& rel,
                              StabilityMethod method = StabilityMethod::dp);

/// D_c-stability by definition: C[P] preferred to C for every collection C
/// in N with C[P] != C. Enumerates B(n+1) - 1 collections.
StabilityVerdict is_dc_stable_direct(const Partition& p, const ComparisonRelation& rel);

/// D_c-stability through the characterization: {A u B} preferred to {A, B}
/// for disjoint A, B inside one block, and {T}[P] preferred to {T} for
/// every P-incompatible T.
StabilityVerdict is_dc_stable_lemma(const Partition& p, const ComparisonRelation& rel);

/// The D_c-stable partition of {1..n}, if any, found with the lemma check.
/// A comparison relation admits at most one; finding two raises
/// Errc::multiple_stable.
std::optional<Partition> find_dc_stable(const ComparisonRelation& rel, int n);

}  // namespace mergesplit
