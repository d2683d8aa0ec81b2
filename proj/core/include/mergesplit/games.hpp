#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mergesplit/orders.hpp"
#include "mergesplit/partition.hpp"
#include "mergesplit/rational.hpp"
#include "mergesplit/relation.hpp"

namespace mergesplit {

/// Coalitional TU-game (N, v) with exact non-negative values and v(empty) = 0.
class TUGame {
public:
  /// values[mask] is v of the coalition with that bitmask; the vector must
  /// have exactly 2^n entries. Errors: invalid_game, too_many_players.
  TUGame(int n, std::vector<Rational> values);

  template <class F>
  static TUGame from_function(int n, F&& value_of) {
    check_player_count(n);
    std::vector<Rational> values(std::size_t{1} << n);
    for (std::uint32_t mask = 1; mask < values.size(); ++mask) {
      values[mask] = value_of(PlayerSet::from_mask(mask));
    }
    return TUGame(n, std::move(values));
  }

  int players() const noexcept { return n_; }
  PlayerSet grand() const noexcept { return PlayerSet::grand(n_); }
  const Rational& value(PlayerSet coalition) const;

private:
  int n_;
  std::vector<Rational> values_;
};

/// v(C): the multiset of block values.
RealMultiset value_multiset(const TUGame& game, const Collection& c);

/// A over B iff v(A) >_kind v(B). Errors: wrong_basis for vector orders;
/// inadmissible_order for harness-only orders in engine mode.
ComparisonRelation induced_relation_v(const TUGame& game, OrderKind kind,
                                      RelationMode mode = RelationMode::engine);

/// phi^v_i(A): how a coalition's value is shared among its members.
class IndividualValueFunction {
public:
  using Rule = std::function<Rational(const TUGame&, PlayerId, PlayerSet)>;

  IndividualValueFunction(std::string name, Rule rule);

  /// Payoff of player i (a member of `coalition`) in that coalition.
  Rational payoff(const TUGame& game, PlayerId i, PlayerSet coalition) const;
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
  Rule rule_;
};

/// phi^v_i(A) = v(A) / |A|.
IndividualValueFunction equal_split_phi();

/// phi^v(C) as a multiset: one payoff per covered player.
RealMultiset payoff_multiset(const TUGame& game, const IndividualValueFunction& phi, const Collection& c);
/// phi^v(C) indexed by player.
PayoffVector payoff_vector(const TUGame& game, const IndividualValueFunction& phi, const Collection& c);

/// Multiset orders compare payoff_multiset; majority and Pareto compare
/// payoff_vector player by player.
ComparisonRelation induced_relation_phi(const TUGame& game, const IndividualValueFunction& phi,
                                        OrderKind kind, RelationMode mode = RelationMode::engine);

struct EfficiencyCheck {
  bool efficient = true;
  std::optional<PlayerSet> witness;  // a coalition whose payoffs do not sum to v
};
EfficiencyCheck check_efficiency(const TUGame& game, const IndividualValueFunction& phi);

struct AnonymityCheck {
  bool anonymous = true;
  /// permutation[i-1] = pi(i), and a coalition A with v(A) != v(pi(A)).
  std::vector<PlayerId> permutation;
  std::optional<PlayerSet> coalition;
};
AnonymityCheck check_anonymous_v(const TUGame& game);

struct SuperadditivityCheck {
  bool strictly_superadditive = true;
  std::optional<std::pair<PlayerSet, PlayerSet>> witness;  // v(A) + v(B) >= v(A u B)
};
/// Checks v(A) + v(B) < v(A u B) for all disjoint non-empty A, B inside `within`.
SuperadditivityCheck is_strictly_superadditive(const TUGame& game, PlayerSet within);
SuperadditivityCheck is_strictly_superadditive(const TUGame& game);

/// A game that only matters on subsets of `block`: values of coalitions
/// leaving the block are ignored by the composition and must be zero.
struct BlockGame {
  PlayerSet block;
  TUGame game;
};

struct SemiUnion {
  TUGame game;         // composition minus epsilon on P-incompatible coalitions
  TUGame composition;  // sum_i v_i(P_i n A)
};

/// Semi-union of strictly superadditive block games. epsilon must be
/// positive and below the smallest composition value of a P-incompatible
/// coalition, so every value stays non-negative.
/// Errors: block_mismatch, component_not_superadditive, epsilon_too_large,
/// invalid_argument (epsilon <= 0).
SemiUnion semi_union(const std::vector<BlockGame>& components, const Partition& p, const Rational& epsilon);

/// Inside each block: v = 1 on singletons and
///   v(A) = max over splits A = B u C of f(v(B), v(C)) + 1,
/// with f the sum, product or max for utilitarian, Nash, leximin.
/// v = 0 on P-incompatible coalitions. P is then the unique stable outcome
/// under the v-basis relation of that order.
TUGame build_example61(const Partition& p, OrderKind kind);

struct GameWithPhi {
  TUGame game;
  IndividualValueFunction phi;
};

/// Same recursion with f(x, y) = n * max(x, y) + 1 for leximin and Pareto,
/// x + y otherwise, paired with the equal split. Intended for the phi-basis
/// relation of the same order.
GameWithPhi build_example62(const Partition& p, OrderKind kind);

/// Friends preference of player i: S over T iff T is a proper subset of S
/// and S lies within P(i), or S lies within P(i) and T does not.
bool hedonic_strictly_prefers(const Partition& p, PlayerId i, PlayerSet s, PlayerSet t);

/// Q over Q' iff every player weakly prefers Q(i) to Q'(i) (strictly, or
/// the same coalition) and at least one strictly. Two different coalitions
/// that both leave P(i) are unrelated for i.
ComparisonRelation hedonic_relation(const Partition& p);

/// Largest amount of good j that player j can hold in an outcome reachable
/// by trading inside `s`: |s n P(j)|.
int exchange_own_good_bound(const Partition& p, PlayerId j, PlayerSet s);

/// Exchange-economy friends relation in closed form: A over B iff A != B and
/// for every block A_l of A not in B and every j in A_l,
///   g(A_l) > g(B(j)), or g(A_l) >= g(B(j)) and |A_l| < |B(j)|,
/// where g(S) = exchange_own_good_bound(p, j, S).
///
/// The defining condition quantifies over the infinite outcome sets V(S).
/// Player j only values units of good j, and in V(A_l) the allocation that
/// hands each member all units of their own good reaching A_l is feasible
/// for all members at once. It dominates every other outcome for each j,
/// and the best outcome of B(j) gives j exactly g(B(j)), which turns the
/// quantifiers into the integer comparisons above.
ComparisonRelation exchange_relation(const Partition& p);

/// Three-player relation under which no partition is D_c-stable: on
/// partitions of {1,2,3}
///   {123} > {1}{2}{3} > {12}{3} > {13}{2} > {1}{23}
/// (a total order) and on every two-player support {a}{b} > {ab}.
ComparisonRelation build_example5_relation();

}  // namespace mergesplit
