#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mergesplit/orders.hpp"
#include "mergesplit/partition.hpp"
#include "mergesplit/relation.hpp"

namespace mergesplit {

enum class Axiom { irreflexive, transitive, m1, m2, semi_linear };

inline constexpr std::array<Axiom, 5> kAllAxioms{
    Axiom::irreflexive, Axiom::transitive, Axiom::m1, Axiom::m2, Axiom::semi_linear};

std::string_view to_string(Axiom axiom) noexcept;

/// One element of a witness, rendered as strings (rationals for multisets
/// and vectors, block literals for collections).
using WitnessItem = std::vector<std::string>;

struct AxiomResult {
  Axiom axiom = Axiom::irreflexive;
  bool holds = true;
  std::uint64_t violations = 0;
  /// First violation in enumeration order:
  ///   irreflexive  [a]
  ///   transitive   [a, b, c]            a > b, b > c, not a > c
  ///   m1           [a, b, c, d, a+c, b+d]
  ///   m2           [a, b, c, a+c, b+c]
  ///   semi_linear  [a, b]
  std::vector<WitnessItem> witness;
};

struct PropertyReport {
  std::array<AxiomResult, 5> results{};
  /// Semi-linearity failures split by cause: neither direction holds (a tie
  /// under a strict order) versus both directions hold.
  std::uint64_t semi_linear_ties = 0;
  std::uint64_t semi_linear_other = 0;

  AxiomResult& operator[](Axiom a) { return results[static_cast<std::size_t>(a)]; }
  const AxiomResult& operator[](Axiom a) const { return results[static_cast<std::size_t>(a)]; }
};

/// Elements to test, grouped so that elements of one group are mutually
/// comparable (same support). m1/m2 combine elements of two joinable
/// groups (disjoint supports) with `join`.
template <class T>
struct PropertyDomain {
  std::vector<std::vector<T>> groups;
  std::function<bool(std::size_t, std::size_t)> joinable;
  std::function<T(const T&, const T&)> join;
  std::function<WitnessItem(const T&)> describe;
};

/// Exhaustive check of irreflexivity, transitivity, m1, m2 and
/// semi-linearity of `prefers` over the domain. Counts every violation and
/// keeps the first one found as the witness.
template <class T, class Prefers>
PropertyReport check_relation_properties(const Prefers& prefers, const PropertyDomain<T>& domain) {
  PropertyReport report;
  for (Axiom a : kAllAxioms) report[a].axiom = a;

  auto record = [&](Axiom a, std::initializer_list<const T*> items) {
    AxiomResult& r = report[a];
    if (r.violations++ == 0) {
      for (const T* item : items) r.witness.push_back(domain.describe(*item));
    }
    r.holds = false;
  };

  // related[g][i * size + j] caches prefers(g_i, g_j).
  std::vector<std::vector<char>> related(domain.groups.size());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(domain.groups.size());

  for (std::size_t g = 0; g < domain.groups.size(); ++g) {
    const auto& items = domain.groups[g];
    const std::size_t n = items.size();
    related[g].assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool r = prefers(items[i], items[j]);
        related[g][i * n + j] = r ? 1 : 0;
        if (r && i != j) pairs[g].emplace_back(i, j);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (related[g][i * n + i]) record(Axiom::irreflexive, {&items[i]});
    }
    for (const auto& [i, j] : pairs[g]) {
      for (std::size_t k = 0; k < n; ++k) {
        if (related[g][j * n + k] && !related[g][i * n + k]) {
          record(Axiom::transitive, {&items[i], &items[j], &items[k]});
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool ij = related[g][i * n + j] != 0;
        const bool ji = related[g][j * n + i] != 0;
        if (ij == ji) {
          if (ij) {
            ++report.semi_linear_other;
          } else {
            ++report.semi_linear_ties;
          }
          record(Axiom::semi_linear, {&items[i], &items[j]});
        }
      }
    }
  }

  for (std::size_t g1 = 0; g1 < domain.groups.size(); ++g1) {
    for (std::size_t g2 = 0; g2 < domain.groups.size(); ++g2) {
      if (!domain.joinable(g1, g2)) continue;
      const auto& left = domain.groups[g1];
      const auto& right = domain.groups[g2];
      for (const auto& [a, b] : pairs[g1]) {
        for (const auto& [c, d] : pairs[g2]) {
          const T ac = domain.join(left[a], right[c]);
          const T bd = domain.join(left[b], right[d]);
          if (!prefers(ac, bd)) {
            record(Axiom::m1, {&left[a], &left[b], &right[c], &right[d], &ac, &bd});
          }
        }
        for (const auto& c : right) {
          const T ac = domain.join(left[a], c);
          const T bc = domain.join(left[b], c);
          if (!prefers(ac, bc)) record(Axiom::m2, {&left[a], &left[b], &c, &ac, &bc});
        }
      }
    }
  }
  return report;
}

/// All multisets of size 1..max_size over the grid, as one group.
PropertyDomain<RealMultiset> multiset_domain(std::span<const Rational> grid, int max_size);

/// All vectors of length 1..max_length over the grid (players 1..length),
/// grouped by length; joining relabels the right operand's players.
PropertyDomain<PayoffVector> vector_domain(std::span<const Rational> grid, int max_length);

/// Every collection in {1..n}, grouped by support.
PropertyDomain<Collection> collection_domain(int n);

PropertyReport check_order_properties(OrderKind kind, std::span<const Rational> grid, int max_size);
PropertyReport check_relation_properties(const ComparisonRelation& rel, const PropertyDomain<Collection>& domain);

/// Axioms an order is known to satisfy: all four comparison-relation axioms
/// for the admissible orders, irreflexivity and transitivity for average,
/// elitist and egalitarian, and irreflexivity, m1, m2 for majority.
std::vector<Axiom> expected_axioms(OrderKind kind);

/// Direct checks of a single m1 / m2 instance, for exhibiting witnesses.
bool satisfies_m1(OrderKind kind, const RealMultiset& a, const RealMultiset& b,
                  const RealMultiset& c, const RealMultiset& d);
bool satisfies_m2(OrderKind kind, const RealMultiset& a, const RealMultiset& b,
                  const RealMultiset& c);

WitnessItem describe(const RealMultiset& m);
WitnessItem describe(const PayoffVector& x);
WitnessItem describe(const Collection& c);

}  // namespace mergesplit
