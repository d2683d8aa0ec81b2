#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mergesplit/partition.hpp"
#include "mergesplit/rational.hpp"

namespace mergesplit {

/// The orders on payoffs. The first six compare multisets of coalition
/// values (or of individual payoffs); majority and Pareto compare payoff
/// vectors indexed by player.
enum class OrderKind {
  utilitarian,
  nash,
  leximin,
  average,
  elitist,
  egalitarian,
  majority,
  pareto,
};

enum class Basis { multiset, vector };

Basis basis_of(OrderKind kind) noexcept;

/// Orders that are comparison relations (irreflexive, transitive, m1, m2)
/// and may therefore drive the merge/split engine. The others exist for the
/// axiom harness only.
bool is_engine_admissible(OrderKind kind) noexcept;

std::string_view to_string(OrderKind kind) noexcept;
std::optional<OrderKind> parse_order_kind(std::string_view name) noexcept;

/// Unordered; duplicates are significant.
using RealMultiset = std::vector<Rational>;

/// Payoffs indexed by player over an explicit support.
class PayoffVector {
public:
  PayoffVector() = default;
  /// Players 1..values.size() in order.
  explicit PayoffVector(std::vector<Rational> values);
  /// Entries are sorted by player; a repeated player is an invalid_argument.
  explicit PayoffVector(std::vector<std::pair<PlayerId, Rational>> entries);

  std::span<const std::pair<PlayerId, Rational>> entries() const noexcept { return entries_; }
  PlayerSet support() const;
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const PayoffVector&, const PayoffVector&) = default;

private:
  std::vector<std::pair<PlayerId, Rational>> entries_;
};

/// Extended lexicographic order on sequences of possibly different length:
/// the first difference decides, and a proper extension beats its prefix.
bool extended_lex_greater(std::span<const Rational> s, std::span<const Rational> t);

/// a >_kind b for the multiset orders, in exact arithmetic.
///
/// Leximin sorts both multisets in *decreasing* order and compares them with
/// extended_lex_greater. Note that the textbook leximin sorts increasing
/// (worst-off first); this one behaves like a leximax.
///
/// Nash multiplies literally, so a single 0 makes the product 0.
///
/// Errors: wrong_basis for majority/Pareto; invalid_argument for an empty
/// multiset under average, elitist or egalitarian.
bool compare_multisets(OrderKind kind, const RealMultiset& a, const RealMultiset& b);

/// x >_kind y for majority and Pareto, player by player.
/// Errors: wrong_basis for multiset kinds; support_mismatch.
bool compare_vectors(OrderKind kind, const PayoffVector& x, const PayoffVector& y);

}  // namespace mergesplit
