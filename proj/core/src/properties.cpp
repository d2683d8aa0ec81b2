#include "mergesplit/properties.hpp"

#include <algorithm>

#include "mergesplit/error.hpp"

namespace mergesplit {

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::irreflexive: return "irreflexive";
    case Axiom::transitive: return "transitive";
    case Axiom::m1: return "m1";
    case Axiom::m2: return "m2";
    case Axiom::semi_linear: return "semi-linear";
  }
  return "unknown";
}

WitnessItem describe(const RealMultiset& m) {
  WitnessItem out;
  out.reserve(m.size());
  for (const auto& x : m) out.push_back(x.str());
  return out;
}

WitnessItem describe(const PayoffVector& x) {
  WitnessItem out;
  out.reserve(x.size());
  for (const auto& [player, value] : x.entries()) out.push_back(value.str());
  return out;
}

WitnessItem describe(const Collection& c) {
  WitnessItem out;
  out.reserve(c.size());
  for (PlayerSet b : c.blocks()) out.push_back(b.str());
  return out;
}

namespace {

void check_grid(std::span<const Rational> grid, int max_size) {
  if (grid.empty()) throw Error(Errc::invalid_argument, "grid must not be empty");
  if (max_size < 1) throw Error(Errc::invalid_argument, "max size must be at least 1");
}

// Non-decreasing index sequences enumerate multisets without repetition.
void multisets_of_size(std::span<const Rational> grid, std::size_t size, std::size_t from,
                       RealMultiset& current, std::vector<RealMultiset>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < grid.size(); ++i) {
    current.push_back(grid[i]);
    multisets_of_size(grid, size, i, current, out);
    current.pop_back();
  }
}

}  // namespace

PropertyDomain<RealMultiset> multiset_domain(std::span<const Rational> grid, int max_size) {
  check_grid(grid, max_size);
  std::vector<Rational> values(grid.begin(), grid.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  PropertyDomain<RealMultiset> domain;
  domain.groups.emplace_back();
  for (int size = 1; size <= max_size; ++size) {
    RealMultiset current;
    multisets_of_size(values, static_cast<std::size_t>(size), 0, current, domain.groups.back());
  }
  domain.joinable = [](std::size_t, std::size_t) { return true; };
  domain.join = [](const RealMultiset& a, const RealMultiset& b) {
    RealMultiset out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
  };
  domain.describe = [](const RealMultiset& m) { return describe(m); };
  return domain;
}

PropertyDomain<PayoffVector> vector_domain(std::span<const Rational> grid, int max_length) {
  check_grid(grid, max_length);
  std::vector<Rational> values(grid.begin(), grid.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  PropertyDomain<PayoffVector> domain;
  for (int length = 1; length <= max_length; ++length) {
    std::vector<PayoffVector> group;
    std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
    while (true) {
      std::vector<Rational> entries;
      entries.reserve(digits.size());
      for (std::size_t d : digits) entries.push_back(values[d]);
      group.emplace_back(std::move(entries));
      std::size_t pos = digits.size();
      while (pos > 0 && ++digits[pos - 1] == values.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
    domain.groups.push_back(std::move(group));
  }
  domain.joinable = [](std::size_t, std::size_t) { return true; };
  domain.join = [](const PayoffVector& x, const PayoffVector& z) {
    std::vector<std::pair<PlayerId, Rational>> entries(x.entries().begin(), x.entries().end());
    const auto offset = static_cast<PlayerId>(x.size());
    for (const auto& [player, value] : z.entries()) entries.emplace_back(player + offset, value);
    return PayoffVector(std::move(entries));
  };
  domain.describe = [](const PayoffVector& x) { return describe(x); };
  return domain;
}

PropertyDomain<Collection> collection_domain(int n) {
  check_player_count(n);
  PropertyDomain<Collection> domain;
  std::vector<PlayerSet> supports;
  const std::uint32_t limit = PlayerSet::grand(n).mask();
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    supports.push_back(PlayerSet::from_mask(mask));
    domain.groups.push_back(all_partitions(supports.back()));
  }
  domain.joinable = [supports](std::size_t g1, std::size_t g2) {
    return !supports[g1].intersects(supports[g2]);
  };
  domain.join = [](const Collection& a, const Collection& b) { return join(a, b); };
  domain.describe = [](const Collection& c) { return describe(c); };
  return domain;
}

PropertyReport check_order_properties(OrderKind kind, std::span<const Rational> grid, int max_size) {
  if (basis_of(kind) == Basis::vector) {
    auto prefers = [kind](const PayoffVector& x, const PayoffVector& y) {
      return compare_vectors(kind, x, y);
    };
    return check_relation_properties(prefers, vector_domain(grid, max_size));
  }
  auto prefers = [kind](const RealMultiset& a, const RealMultiset& b) {
    return compare_multisets(kind, a, b);
  };
  return check_relation_properties(prefers, multiset_domain(grid, max_size));
}

PropertyReport check_relation_properties(const ComparisonRelation& rel,
                                         const PropertyDomain<Collection>& domain) {
  auto prefers = [&rel](const Collection& a, const Collection& b) { return rel.prefers(a, b); };
  return check_relation_properties(prefers, domain);
}

std::vector<Axiom> expected_axioms(OrderKind kind) {
  if (is_engine_admissible(kind)) {
    return {Axiom::irreflexive, Axiom::transitive, Axiom::m1, Axiom::m2};
  }
  if (kind == OrderKind::majority) return {Axiom::irreflexive, Axiom::m1, Axiom::m2};
  return {Axiom::irreflexive, Axiom::transitive};
}

namespace {

RealMultiset multiset_union(const RealMultiset& a, const RealMultiset& b) {
  RealMultiset out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

bool satisfies_m1(OrderKind kind, const RealMultiset& a, const RealMultiset& b,
                  const RealMultiset& c, const RealMultiset& d) {
  if (!compare_multisets(kind, a, b) || !compare_multisets(kind, c, d)) return true;
  return compare_multisets(kind, multiset_union(a, c), multiset_union(b, d));
}

bool satisfies_m2(OrderKind kind, const RealMultiset& a, const RealMultiset& b,
                  const RealMultiset& c) {
  if (!compare_multisets(kind, a, b)) return true;
  return compare_multisets(kind, multiset_union(a, c), multiset_union(b, c));
}

}  // namespace mergesplit
