#include "mergesplit/game_spec.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mergesplit/error.hpp"

namespace mergesplit {

using nlohmann::json;

std::string_view to_string(GameKind kind) noexcept {
  switch (kind) {
    case GameKind::tu: return "tu";
    case GameKind::generator: return "generator";
    case GameKind::semi_union: return "semi-union";
    case GameKind::hedonic_friends: return "hedonic-friends";
    case GameKind::exchange_friends: return "exchange-friends";
    case GameKind::example5: return "example5";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(Errc::parse_error, message); }

void allow_only(const json& object, std::initializer_list<const char*> fields, const std::string& where) {
  if (!object.is_object()) fail(where + " must be a JSON object");
  std::set<std::string> allowed(fields.begin(), fields.end());
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) fail("unknown field '" + key + "' in " + where);
  }
}

const json& require(const json& object, const char* field, const std::string& where) {
  auto it = object.find(field);
  if (it == object.end()) fail("missing field '" + std::string(field) + "' in " + where);
  return *it;
}

std::string require_string(const json& object, const char* field, const std::string& where) {
  const json& value = require(object, field, where);
  if (!value.is_string()) fail("field '" + std::string(field) + "' in " + where + " must be a string");
  return value.get<std::string>();
}

Rational parse_rational_field(const json& value, const std::string& where) {
  if (!value.is_string()) fail(where + " must be a string rational such as \"3/2\"");
  return Rational::parse(value.get<std::string>());
}

int parse_player_count(const json& value) {
  int n = 0;
  if (value.is_number_integer()) {
    n = value.get<int>();
  } else if (value.is_string()) {
    Rational r = Rational::parse(value.get<std::string>());
    if (r.den() != 1 || r.num() > kMaxPlayers) fail("n must be a small positive integer");
    n = static_cast<int>(r.num());
  } else {
    fail("n must be an integer");
  }
  check_player_count(n);
  return n;
}

PlayerSet parse_subset_key(const std::string& key, int n) {
  if (key.empty()) fail("empty subset key; v(empty set) is always 0");
  std::vector<PlayerId> ids;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.size() > 9 || part.find_first_not_of("0123456789") != std::string::npos) {
      fail("malformed subset key '" + key + "'");
    }
    ids.push_back(std::stoi(part));
  }
  if (key.back() == ',') fail("malformed subset key '" + key + "'");
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (ids[k] < 1 || ids[k] > n) {
      throw Error(Errc::out_of_range, "subset key '" + key + "' names a player outside 1.." + std::to_string(n));
    }
    if (k > 0 && ids[k] <= ids[k - 1]) fail("subset key '" + key + "' must list ascending distinct ids");
  }
  return PlayerSet::of(ids);
}

TUGame parse_values(const json& values, int n, const std::string& where, std::vector<std::string>& warnings) {
  if (!values.is_object()) fail(where + " must be an object of subset keys");
  std::vector<Rational> table(std::size_t{1} << n);
  std::vector<bool> given(table.size(), false);
  given[0] = true;
  for (const auto& [key, value] : values.items()) {
    PlayerSet s = parse_subset_key(key, n);
    table[s.mask()] = parse_rational_field(value, where + "[\"" + key + "\"]");
    given[s.mask()] = true;
  }
  std::size_t missing = 0;
  for (bool g : given) missing += g ? 0 : 1;
  if (missing != 0) {
    warnings.push_back(where + ": " + std::to_string(missing) + " subset(s) not listed, defaulting to 0");
  }
  return TUGame(n, std::move(table));
}

Partition parse_partition(const json& value) {
  if (!value.is_array() || value.empty()) fail("partition must be a non-empty array of arrays");
  std::vector<std::vector<PlayerId>> blocks;
  int n = 0;
  for (const auto& block : value) {
    if (!block.is_array()) fail("partition blocks must be arrays of player ids");
    std::vector<PlayerId> ids;
    for (const auto& id : block) {
      if (!id.is_number_integer()) fail("player ids must be integers");
      ids.push_back(id.get<int>());
      n = std::max(n, ids.back());
    }
    blocks.push_back(std::move(ids));
  }
  check_player_count(n);
  Partition p = Collection::from_lists(blocks, n);
  require_partition_of(p, PlayerSet::grand(n));
  return p;
}

OrderKind parse_order(const std::string& name) {
  auto kind = parse_order_kind(name);
  if (!kind) fail("unknown order '" + name + "'");
  return *kind;
}

}  // namespace

GameInstance load_game_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("game file must be a JSON object");
  const std::string kind = require_string(doc, "kind", "game");

  GameInstance out;
  if (kind == "tu") {
    allow_only(doc, {"kind", "n", "values"}, "tu game");
    out.kind = GameKind::tu;
    out.n = parse_player_count(require(doc, "n", "tu game"));
    out.game = parse_values(require(doc, "values", "tu game"), out.n, "values", out.warnings);
  } else if (kind == "generator") {
    allow_only(doc, {"kind", "name", "order", "partition"}, "generator");
    out.kind = GameKind::generator;
    out.generator_name = require_string(doc, "name", "generator");
    out.generator_order = parse_order(require_string(doc, "order", "generator"));
    out.target = parse_partition(require(doc, "partition", "generator"));
    out.n = out.target->support().size();
    if (out.generator_name == "example61") {
      out.game = build_example61(*out.target, *out.generator_order);
    } else if (out.generator_name == "example62") {
      GameWithPhi built = build_example62(*out.target, *out.generator_order);
      out.game = std::move(built.game);
      out.phi = std::move(built.phi);
    } else {
      fail("unknown generator '" + out.generator_name + "' (expected example61 or example62)");
    }
  } else if (kind == "semi-union") {
    allow_only(doc, {"kind", "partition", "epsilon", "components"}, "semi-union");
    out.kind = GameKind::semi_union;
    out.target = parse_partition(require(doc, "partition", "semi-union"));
    out.n = out.target->support().size();
    const Rational epsilon = parse_rational_field(require(doc, "epsilon", "semi-union"), "epsilon");
    const json& components = require(doc, "components", "semi-union");
    if (!components.is_array() || components.size() != out.target->size()) {
      fail("semi-union needs one component per partition block, listed in partition order");
    }
    // Components pair with the blocks in the order the file lists them.
    const json& listed = doc.at("partition");
    std::vector<BlockGame> parts;
    for (std::size_t k = 0; k < components.size(); ++k) {
      const std::string where = "components[" + std::to_string(k) + "]";
      allow_only(components[k], {"values"}, where);
      std::vector<PlayerId> ids = listed[k].get<std::vector<PlayerId>>();
      std::vector<std::string> ignored;
      TUGame game = parse_values(require(components[k], "values", where), out.n, where + ".values", ignored);
      parts.push_back(BlockGame{PlayerSet::of(ids), std::move(game)});
    }
    out.game = semi_union(parts, *out.target, epsilon).game;
  } else if (kind == "hedonic-friends" || kind == "exchange-friends") {
    allow_only(doc, {"kind", "partition"}, kind);
    out.kind = kind == "hedonic-friends" ? GameKind::hedonic_friends : GameKind::exchange_friends;
    out.target = parse_partition(require(doc, "partition", kind));
    out.n = out.target->support().size();
  } else if (kind == "example5") {
    allow_only(doc, {"kind"}, kind);
    out.kind = GameKind::example5;
    out.n = 3;
  } else {
    fail("unknown game kind '" + kind + "'");
  }
  return out;
}

GameInstance load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open game file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_game_spec(buffer.str());
}

ComparisonRelation relation_for(const GameInstance& instance, std::optional<OrderKind> order,
                                ValueBasis basis, RelationMode mode) {
  switch (instance.kind) {
    case GameKind::hedonic_friends:
      return hedonic_relation(*instance.target);
    case GameKind::exchange_friends:
      return exchange_relation(*instance.target);
    case GameKind::example5:
      return build_example5_relation();
    case GameKind::tu:
    case GameKind::generator:
    case GameKind::semi_union:
      break;
  }
  if (!order) order = instance.generator_order;
  if (!order) throw Error(Errc::invalid_argument, "an order is required for " + std::string(to_string(instance.kind)) + " games");
  if (basis == ValueBasis::phi) {
    return induced_relation_phi(*instance.game, instance.phi ? *instance.phi : equal_split_phi(), *order, mode);
  }
  return induced_relation_v(*instance.game, *order, mode);
}

}  // namespace mergesplit
