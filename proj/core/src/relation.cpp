#include "mergesplit/relation.hpp"

#include "mergesplit/error.hpp"

namespace mergesplit {

std::string_view to_string(ValueBasis basis) noexcept {
  switch (basis) {
    case ValueBasis::v: return "v";
    case ValueBasis::phi: return "phi";
    case ValueBasis::intrinsic: return "intrinsic";
  }
  return "unknown";
}

std::string RelationInfo::describe() const {
  std::string out = source;
  if (order) out += "/" + std::string(to_string(*order));
  out += "/" + std::string(to_string(basis));
  return out;
}

ComparisonRelation::ComparisonRelation(RelationInfo info, Predicate predicate)
    : info_(std::move(info)), predicate_(std::move(predicate)) {}

bool ComparisonRelation::prefers(const Collection& a, const Collection& b) const {
  if (a.support() != b.support()) {
    throw Error(Errc::support_mismatch,
                "cannot compare '" + a.literal() + "' with '" + b.literal() + "'");
  }
  return predicate_(a, b);
}

void require_engine_admissible(const ComparisonRelation& rel) {
  if (!rel.info().engine_admissible) {
    throw Error(Errc::inadmissible_order,
                "relation " + rel.info().describe() + " is not a comparison relation");
  }
}

}  // namespace mergesplit
