#pragma once

#include <functional>
#include <optional>
#include <string>

#include "mergesplit/orders.hpp"
#include "mergesplit/partition.hpp"

namespace mergesplit {

/// What the order compares: coalition values v(A), individual payoffs
/// phi(A), or a relation defined directly on collections (hedonic,
/// exchange, fixtures).
enum class ValueBasis { v, phi, intrinsic };

std::string_view to_string(ValueBasis basis) noexcept;

/// Engine use requires a comparison relation; harness mode allows any order
/// so that its axiom failures can be exhibited.
enum class RelationMode { engine, harness };

struct RelationInfo {
  std::string source;  // "tu", "hedonic-friends", ...
  std::optional<OrderKind> order;
  ValueBasis basis = ValueBasis::intrinsic;
  bool engine_admissible = false;

  std::string describe() const;
};

/// A strict preference between collections over the same players.
///
/// prefers(a, b) is only meaningful when support(a) == support(b); a
/// mismatch raises Errc::support_mismatch.
class ComparisonRelation {
public:
  using Predicate = std::function<bool(const Collection&, const Collection&)>;

  ComparisonRelation(RelationInfo info, Predicate predicate);

  bool prefers(const Collection& a, const Collection& b) const;
  bool operator()(const Collection& a, const Collection& b) const { return prefers(a, b); }

  const RelationInfo& info() const noexcept { return info_; }

private:
  RelationInfo info_;
  Predicate predicate_;
};

/// Errc::inadmissible_order unless the relation may drive the engine.
void require_engine_admissible(const ComparisonRelation& rel);

}  // namespace mergesplit
