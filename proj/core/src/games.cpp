#include "mergesplit/games.hpp"

#include <algorithm>
#include <map>

#include "mergesplit/error.hpp"

namespace mergesplit {

TUGame::TUGame(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  check_player_count(n);
  if (values_.size() != (std::size_t{1} << n)) {
    throw Error(Errc::invalid_game, "a game on " + std::to_string(n) + " players needs " +
                                        std::to_string(std::size_t{1} << n) + " values");
  }
  if (!values_[0].is_zero()) throw Error(Errc::invalid_game, "v(empty set) must be 0");
  for (std::uint32_t mask = 1; mask < values_.size(); ++mask) {
    if (values_[mask].is_negative()) {
      throw Error(Errc::invalid_game, "v({" + PlayerSet::from_mask(mask).str() + "}) = " +
                                          values_[mask].str() + " is negative");
    }
  }
}

const Rational& TUGame::value(PlayerSet coalition) const {
  if (!coalition.subset_of(grand())) {
    throw Error(Errc::out_of_range, "coalition {" + coalition.str() + "} is not inside N");
  }
  return values_[coalition.mask()];
}

RealMultiset value_multiset(const TUGame& game, const Collection& c) {
  RealMultiset out;
  out.reserve(c.size());
  for (PlayerSet b : c.blocks()) out.push_back(game.value(b));
  return out;
}

namespace {

bool admit(OrderKind kind, RelationMode mode) {
  const bool admissible = is_engine_admissible(kind);
  if (mode == RelationMode::engine && !admissible) {
    throw Error(Errc::inadmissible_order,
                std::string(to_string(kind)) + " is not a comparison relation; use harness mode");
  }
  return admissible;
}

int players_of(const Partition& p) {
  const int n = p.support().max_player();
  check_player_count(n);
  require_partition_of(p, PlayerSet::grand(n));
  return n;
}

}  // namespace

ComparisonRelation induced_relation_v(const TUGame& game, OrderKind kind, RelationMode mode) {
  if (basis_of(kind) != Basis::multiset) {
    throw Error(Errc::wrong_basis,
                std::string(to_string(kind)) + " needs individual payoffs (phi basis)");
  }
  const bool admissible = admit(kind, mode);
  auto shared = std::make_shared<const TUGame>(game);
  return ComparisonRelation(
      RelationInfo{"tu", kind, ValueBasis::v, admissible},
      [shared, kind](const Collection& a, const Collection& b) {
        return compare_multisets(kind, value_multiset(*shared, a), value_multiset(*shared, b));
      });
}

IndividualValueFunction::IndividualValueFunction(std::string name, Rule rule)
    : name_(std::move(name)), rule_(std::move(rule)) {}

Rational IndividualValueFunction::payoff(const TUGame& game, PlayerId i, PlayerSet coalition) const {
  if (!coalition.contains(i)) {
    throw Error(Errc::invalid_argument,
                "player " + std::to_string(i) + " is not in {" + coalition.str() + "}");
  }
  return rule_(game, i, coalition);
}

IndividualValueFunction equal_split_phi() {
  return IndividualValueFunction("equal-split", [](const TUGame& game, PlayerId, PlayerSet a) {
    return game.value(a) / Rational(a.size());
  });
}

RealMultiset payoff_multiset(const TUGame& game, const IndividualValueFunction& phi, const Collection& c) {
  RealMultiset out;
  for (PlayerSet b : c.blocks()) {
    for (PlayerId i : b.members()) out.push_back(phi.payoff(game, i, b));
  }
  return out;
}

PayoffVector payoff_vector(const TUGame& game, const IndividualValueFunction& phi, const Collection& c) {
  std::vector<std::pair<PlayerId, Rational>> entries;
  for (PlayerSet b : c.blocks()) {
    for (PlayerId i : b.members()) entries.emplace_back(i, phi.payoff(game, i, b));
  }
  return PayoffVector(std::move(entries));
}

ComparisonRelation induced_relation_phi(const TUGame& game, const IndividualValueFunction& phi,
                                        OrderKind kind, RelationMode mode) {
  const bool admissible = admit(kind, mode);
  auto shared_game = std::make_shared<const TUGame>(game);
  auto shared_phi = std::make_shared<const IndividualValueFunction>(phi);
  RelationInfo info{"tu", kind, ValueBasis::phi, admissible};
  if (basis_of(kind) == Basis::vector) {
    return ComparisonRelation(std::move(info), [shared_game, shared_phi, kind](const Collection& a,
                                                                               const Collection& b) {
      return compare_vectors(kind, payoff_vector(*shared_game, *shared_phi, a),
                             payoff_vector(*shared_game, *shared_phi, b));
    });
  }
  return ComparisonRelation(std::move(info), [shared_game, shared_phi, kind](const Collection& a,
                                                                             const Collection& b) {
    return compare_multisets(kind, payoff_multiset(*shared_game, *shared_phi, a),
                             payoff_multiset(*shared_game, *shared_phi, b));
  });
}

EfficiencyCheck check_efficiency(const TUGame& game, const IndividualValueFunction& phi) {
  const std::uint32_t limit = game.grand().mask();
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    const PlayerSet a = PlayerSet::from_mask(mask);
    Rational total;
    for (PlayerId i : a.members()) total += phi.payoff(game, i, a);
    if (total != game.value(a)) return {false, a};
  }
  return {};
}

AnonymityCheck check_anonymous_v(const TUGame& game) {
  const int n = game.players();
  // v is anonymous iff it is constant on coalitions of each size.
  std::vector<std::optional<PlayerSet>> first_of_size(static_cast<std::size_t>(n) + 1);
  const std::uint32_t limit = game.grand().mask();
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    const PlayerSet b = PlayerSet::from_mask(mask);
    auto& first = first_of_size[static_cast<std::size_t>(b.size())];
    if (!first) {
      first = b;
      continue;
    }
    if (game.value(*first) == game.value(b)) continue;
    // Swap the players of first \ b with those of b \ first: pi(first) = b.
    AnonymityCheck out;
    out.anonymous = false;
    out.coalition = *first;
    out.permutation.resize(static_cast<std::size_t>(n));
    for (PlayerId i = 1; i <= n; ++i) out.permutation[static_cast<std::size_t>(i - 1)] = i;
    const auto from = (*first - b).members();
    const auto to = (b - *first).members();
    for (std::size_t k = 0; k < from.size(); ++k) {
      out.permutation[static_cast<std::size_t>(from[k] - 1)] = to[k];
      out.permutation[static_cast<std::size_t>(to[k] - 1)] = from[k];
    }
    return out;
  }
  return {};
}

SuperadditivityCheck is_strictly_superadditive(const TUGame& game, PlayerSet within) {
  const std::uint32_t outer = within.mask();
  // Every union U inside `within`, and every split of U whose first part
  // holds U's lowest player (each unordered pair once).
  for (std::uint32_t u = outer; u != 0; u = (u - 1) & outer) {
    if (std::popcount(u) < 2) continue;
    const std::uint32_t low = u & (~u + 1);
    const std::uint32_t rest = u & ~low;
    for (std::uint32_t s = rest;; s = (s - 1) & rest) {
      const std::uint32_t a = low | s;
      if (a != u) {
        const PlayerSet pa = PlayerSet::from_mask(a);
        const PlayerSet pb = PlayerSet::from_mask(u & ~a);
        if (game.value(pa) + game.value(pb) >= game.value(PlayerSet::from_mask(u))) {
          return {false, std::make_pair(pa, pb)};
        }
      }
      if (s == 0) break;
    }
  }
  return {};
}

SuperadditivityCheck is_strictly_superadditive(const TUGame& game) {
  return is_strictly_superadditive(game, game.grand());
}

SemiUnion semi_union(const std::vector<BlockGame>& components, const Partition& p, const Rational& epsilon) {
  const int n = players_of(p);
  if (!epsilon.is_positive()) throw Error(Errc::invalid_argument, "epsilon must be positive");

  std::vector<PlayerSet> blocks;
  for (const auto& c : components) blocks.push_back(c.block);
  std::vector<PlayerSet> expected(p.blocks().begin(), p.blocks().end());
  std::sort(blocks.begin(), blocks.end());
  std::sort(expected.begin(), expected.end());
  if (blocks != expected) {
    throw Error(Errc::block_mismatch, "component blocks do not form the partition " + p.literal());
  }

  for (const auto& c : components) {
    if (c.game.players() != n) {
      throw Error(Errc::block_mismatch, "component on {" + c.block.str() + "} has " +
                                            std::to_string(c.game.players()) + " players, expected " +
                                            std::to_string(n));
    }
    const std::uint32_t limit = PlayerSet::grand(n).mask();
    for (std::uint32_t mask = 1; mask <= limit; ++mask) {
      const PlayerSet a = PlayerSet::from_mask(mask);
      const Rational& value = c.game.value(a);
      if (!a.subset_of(c.block)) {
        if (!value.is_zero()) {
          throw Error(Errc::block_mismatch, "component on {" + c.block.str() + "} assigns a value to {" +
                                                a.str() + "} outside its block");
        }
      } else if (!value.is_positive()) {
        throw Error(Errc::component_not_superadditive,
                    "component on {" + c.block.str() + "} is not positive on {" + a.str() + "}");
      }
    }
    if (auto check = is_strictly_superadditive(c.game, c.block); !check.strictly_superadditive) {
      throw Error(Errc::component_not_superadditive,
                  "component on {" + c.block.str() + "} fails strict superadditivity on {" +
                      check.witness->first.str() + "} and {" + check.witness->second.str() + "}");
    }
  }

  auto composed = [&](PlayerSet a) {
    Rational total;
    for (const auto& c : components) total += c.game.value(a & c.block);
    return total;
  };
  TUGame composition = TUGame::from_function(n, composed);

  std::optional<Rational> bound;
  const std::uint32_t limit = PlayerSet::grand(n).mask();
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    const PlayerSet a = PlayerSet::from_mask(mask);
    if (is_compatible(a, p)) continue;
    const Rational& value = composition.value(a);
    if (!bound || value < *bound) bound = value;
  }
  if (bound && epsilon >= *bound) {
    throw Error(Errc::epsilon_too_large, "epsilon " + epsilon.str() + " must be below " + bound->str() +
                                             " to keep every value non-negative");
  }

  TUGame game = TUGame::from_function(n, [&](PlayerSet a) {
    Rational value = composition.value(a);
    if (!is_compatible(a, p)) value -= epsilon;
    return value;
  });
  return SemiUnion{std::move(game), std::move(composition)};
}

namespace {

template <class F>
TUGame recursive_block_game(const Partition& p, F&& combine) {
  const int n = players_of(p);
  std::vector<Rational> values(std::size_t{1} << n);
  // Submasks are numerically smaller, so they are final when a mask is reached.
  for (std::uint32_t u = 1; u < values.size(); ++u) {
    const PlayerSet coalition = PlayerSet::from_mask(u);
    if (coalition.size() == 1) {
      values[u] = Rational{1};
      continue;
    }
    if (!is_compatible(coalition, p)) continue;  // stays 0
    const std::uint32_t low = u & (~u + 1);
    const std::uint32_t rest = u & ~low;
    std::optional<Rational> best;
    for (std::uint32_t s = rest;; s = (s - 1) & rest) {
      const std::uint32_t b = low | s;
      if (b != u) {
        Rational candidate = combine(values[b], values[u & ~b]);
        if (!best || candidate > *best) best = std::move(candidate);
      }
      if (s == 0) break;
    }
    values[u] = *best + Rational{1};
  }
  return TUGame(n, std::move(values));
}

}  // namespace

TUGame build_example61(const Partition& p, OrderKind kind) {
  switch (kind) {
    case OrderKind::utilitarian:
      return recursive_block_game(p, [](const Rational& x, const Rational& y) { return x + y; });
    case OrderKind::nash:
      return recursive_block_game(p, [](const Rational& x, const Rational& y) { return x * y; });
    case OrderKind::leximin:
      return recursive_block_game(p, [](const Rational& x, const Rational& y) { return std::max(x, y); });
    default:
      throw Error(Errc::invalid_argument, "example61 is defined for utilitarian, nash and leximin, not " +
                                              std::string(to_string(kind)));
  }
}

GameWithPhi build_example62(const Partition& p, OrderKind kind) {
  switch (kind) {
    case OrderKind::utilitarian:
    case OrderKind::nash:
      return {recursive_block_game(p, [](const Rational& x, const Rational& y) { return x + y; }),
              equal_split_phi()};
    case OrderKind::leximin:
    case OrderKind::pareto: {
      const Rational n{p.support().size()};
      return {recursive_block_game(
                  p, [n](const Rational& x, const Rational& y) { return n * std::max(x, y) + Rational{1}; }),
              equal_split_phi()};
    }
    default:
      throw Error(Errc::invalid_argument, "example62 is defined for utilitarian, nash, leximin and pareto, not " +
                                              std::string(to_string(kind)));
  }
}

bool hedonic_strictly_prefers(const Partition& p, PlayerId i, PlayerSet s, PlayerSet t) {
  const PlayerSet friends = p.block_of(i);
  if (!s.subset_of(friends)) return false;
  return !t.subset_of(friends) || (t.subset_of(s) && t != s);
}

ComparisonRelation hedonic_relation(const Partition& p) {
  players_of(p);
  return ComparisonRelation(RelationInfo{"hedonic-friends", std::nullopt, ValueBasis::intrinsic, true},
                            [p](const Collection& a, const Collection& b) {
                              bool strict = false;
                              for (PlayerId i : a.support().members()) {
                                const PlayerSet s = a.block_of(i);
                                const PlayerSet t = b.block_of(i);
                                if (s == t) continue;
                                if (!hedonic_strictly_prefers(p, i, s, t)) return false;
                                strict = true;
                              }
                              return strict;
                            });
}

int exchange_own_good_bound(const Partition& p, PlayerId j, PlayerSet s) {
  return (s & p.block_of(j)).size();
}

ComparisonRelation exchange_relation(const Partition& p) {
  players_of(p);
  return ComparisonRelation(
      RelationInfo{"exchange-friends", std::nullopt, ValueBasis::intrinsic, true},
      [p](const Collection& a, const Collection& b) {
        if (a == b) return false;
        for (PlayerSet block : a.blocks()) {
          if (b.contains_block(block)) continue;
          for (PlayerId j : block.members()) {
            const PlayerSet other = b.block_of(j);
            const int mine = exchange_own_good_bound(p, j, block);
            const int theirs = exchange_own_good_bound(p, j, other);
            const bool better = mine > theirs || (mine >= theirs && block.size() < other.size());
            if (!better) return false;
          }
        }
        return true;
      });
}

ComparisonRelation build_example5_relation() {
  // Rank 0 is best. Keyed by the canonical literal of the collection.
  auto ranks = std::make_shared<std::map<std::string, int>>();
  const char* order3[] = {"1,2,3", "1|2|3", "1,2|3", "1,3|2", "1|2,3"};
  for (int r = 0; r < 5; ++r) (*ranks)[order3[r]] = r;
  for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    (*ranks)[std::to_string(a) + "|" + std::to_string(b)] = 0;
    (*ranks)[std::to_string(a) + "," + std::to_string(b)] = 1;
  }
  return ComparisonRelation(RelationInfo{"example5", std::nullopt, ValueBasis::intrinsic, true},
                            [ranks](const Collection& a, const Collection& b) {
                              if (!a.support().subset_of(PlayerSet::grand(3))) {
                                throw Error(Errc::out_of_range, "example5 is a three-player relation");
                              }
                              if (a.support().size() < 2) return false;
                              return ranks->at(a.literal()) < ranks->at(b.literal());
                            });
}

}  // namespace mergesplit
