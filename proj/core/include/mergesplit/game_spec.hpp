#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mergesplit/games.hpp"
#include "mergesplit/orders.hpp"
#include "mergesplit/partition.hpp"
#include "mergesplit/relation.hpp"

namespace mergesplit {

enum class GameKind { tu, generator, semi_union, hedonic_friends, exchange_friends, example5 };

std::string_view to_string(GameKind kind) noexcept;

/// A validated game file. Which optional members are set depends on `kind`:
///   tu           game
///   generator    game, phi, target, generator_name, generator_order
///   semi_union   game, target
///   hedonic_friends / exchange_friends   target
///   example5     nothing beyond n = 3
struct GameInstance {
  GameKind kind = GameKind::tu;
  int n = 0;
  std::optional<TUGame> game;
  std::optional<IndividualValueFunction> phi;
  std::optional<Partition> target;
  std::string generator_name;
  std::optional<OrderKind> generator_order;
  /// Non-fatal loader notes (e.g. subsets defaulted to 0).
  std::vector<std::string> warnings;
};

/// Parses the JSON game format. Numbers are string rationals; unknown
/// fields are rejected. Errors: parse_error, and the validation errors of
/// the underlying constructors.
GameInstance load_game_spec(std::string_view json_text);
GameInstance load_game_file(const std::string& path);

/// The comparison relation a game induces. For TU-based kinds `order`
/// defaults to the generator's order; `basis` picks v(A) or phi (the file's
/// phi, else the equal split). Relations defined directly on collections
/// ignore order and basis.
ComparisonRelation relation_for(const GameInstance& instance, std::optional<OrderKind> order,
                                ValueBasis basis, RelationMode mode = RelationMode::engine);

}  // namespace mergesplit
