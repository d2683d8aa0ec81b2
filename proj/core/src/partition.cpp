#include "mergesplit/partition.hpp"

#include <algorithm>
#include <cctype>

#include "mergesplit/error.hpp"

namespace mergesplit {

void check_player_count(int n, int cap) {
  if (n < 1) throw Error(Errc::invalid_argument, "player count must be at least 1");
  if (n > cap || n > kMaxPlayers) {
    throw Error(Errc::too_many_players,
                "n = " + std::to_string(n) + " exceeds the player cap " +
                    std::to_string(std::min(cap, kMaxPlayers)));
  }
}

PlayerSet PlayerSet::of(std::initializer_list<PlayerId> players) {
  return of(std::span<const PlayerId>(players.begin(), players.size()));
}

PlayerSet PlayerSet::of(std::span<const PlayerId> players) {
  std::uint32_t mask = 0;
  for (PlayerId i : players) {
    if (i < 1 || i > kMaxPlayers) {
      throw Error(Errc::out_of_range, "player id " + std::to_string(i) + " out of range");
    }
    mask |= 1u << (i - 1);
  }
  return PlayerSet(mask);
}

std::vector<PlayerId> PlayerSet::members() const {
  std::vector<PlayerId> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string PlayerSet::str() const {
  std::string out;
  for (PlayerId i : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

Collection Collection::from_sets(std::vector<PlayerSet> blocks) {
  std::uint32_t seen = 0;
  for (PlayerSet b : blocks) {
    if (b.empty()) throw Error(Errc::empty_block, "collection contains an empty block");
    if ((seen & b.mask()) != 0) {
      throw Error(Errc::overlap, "blocks overlap on {" + (b & PlayerSet::from_mask(seen)).str() + "}");
    }
    seen |= b.mask();
  }
  if (blocks.empty()) throw Error(Errc::empty_block, "collection has no blocks");
  std::sort(blocks.begin(), blocks.end(),
            [](PlayerSet a, PlayerSet b) { return a.min_player() < b.min_player(); });
  return Collection(std::move(blocks));
}

Collection Collection::from_lists(const std::vector<std::vector<PlayerId>>& blocks, int n) {
  std::vector<PlayerSet> sets;
  sets.reserve(blocks.size());
  for (const auto& block : blocks) {
    std::uint32_t mask = 0;
    for (PlayerId i : block) {
      if (i < 1 || i > n || i > kMaxPlayers) {
        throw Error(Errc::out_of_range,
                    "player id " + std::to_string(i) + " outside 1.." + std::to_string(n));
      }
      if ((mask >> (i - 1)) & 1u) {
        throw Error(Errc::overlap, "player " + std::to_string(i) + " repeated in a block");
      }
      mask |= 1u << (i - 1);
    }
    sets.push_back(PlayerSet::from_mask(mask));
  }
  return from_sets(std::move(sets));
}

PlayerSet Collection::support() const noexcept {
  std::uint32_t mask = 0;
  for (PlayerSet b : blocks_) mask |= b.mask();
  return PlayerSet::from_mask(mask);
}

PlayerSet Collection::block_of(PlayerId i) const noexcept {
  for (PlayerSet b : blocks_) {
    if (b.contains(i)) return b;
  }
  return {};
}

bool Collection::contains_block(PlayerSet block) const noexcept {
  return std::find(blocks_.begin(), blocks_.end(), block) != blocks_.end();
}

std::string Collection::literal() const {
  std::string out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k != 0) out += '|';
    out += blocks_[k].str();
  }
  return out;
}

Collection make_collection(const std::vector<std::vector<PlayerId>>& blocks, int n) {
  return Collection::from_lists(blocks, n);
}

PlayerSet support(const Collection& c) { return c.support(); }

void require_partition_of(const Collection& p, PlayerSet base) {
  if (!p.is_partition_of(base)) {
    throw Error(Errc::not_a_partition,
                "'" + p.literal() + "' does not partition {" + base.str() + "}");
  }
}

Collection join(const Collection& a, const Collection& b) {
  if (a.support().intersects(b.support())) {
    throw Error(Errc::invalid_argument, "join of collections with overlapping supports");
  }
  std::vector<PlayerSet> blocks(a.blocks().begin(), a.blocks().end());
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return Collection::from_sets(std::move(blocks));
}

Collection frame(const Collection& c, const Partition& p) {
  const PlayerSet s = c.support();
  std::vector<PlayerSet> blocks;
  for (PlayerSet b : p.blocks()) {
    PlayerSet part = b & s;
    if (!part.empty()) blocks.push_back(part);
  }
  // Players of C outside p's support stay uncovered by p; keep them together
  // so the result still partitions support(C).
  PlayerSet rest = s - p.support();
  if (!rest.empty()) blocks.push_back(rest);
  return Collection::from_sets(std::move(blocks));
}

bool is_compatible(PlayerSet t, const Partition& p) {
  for (PlayerSet b : p.blocks()) {
    if (t.subset_of(b)) return true;
  }
  return false;
}

Collection parse_collection_literal(std::string_view text, int n) {
  std::vector<std::vector<PlayerId>> blocks(1);
  std::string number;
  auto flush = [&](bool required) {
    if (number.empty()) {
      if (required) throw Error(Errc::parse_error, "malformed collection literal '" + std::string(text) + "'");
      return;
    }
    if (number.size() > 9) throw Error(Errc::out_of_range, "player id '" + number + "' too large");
    blocks.back().push_back(std::stoi(number));
    number.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch >= '0' && ch <= '9') {
      number += ch;
    } else if (ch == ',') {
      flush(true);
    } else if (ch == '|') {
      flush(true);
      blocks.emplace_back();
    } else {
      throw Error(Errc::parse_error, "unexpected '" + std::string(1, ch) + "' in literal '" + std::string(text) + "'");
    }
  }
  flush(true);
  return Collection::from_lists(blocks, n);
}

Partition parse_partition_literal(std::string_view text, int n) {
  Collection c = parse_collection_literal(text, n);
  require_partition_of(c, PlayerSet::grand(n));
  return c;
}

PartitionCursor::PartitionCursor(PlayerSet s) : members_(s.members()) {
  if (members_.empty()) throw Error(Errc::invalid_argument, "cannot enumerate partitions of the empty set");
  growth_.assign(members_.size(), 0);
  prefix_max_.assign(members_.size(), 0);
  rebuild();
}

bool PartitionCursor::next() {
  // Rightmost position that can still grow: growth_[i] <= prefix_max_[i-1].
  const std::size_t len = growth_.size();
  for (std::size_t i = len; i-- > 1;) {
    if (growth_[i] <= prefix_max_[i - 1]) {
      ++growth_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], growth_[i]);
      for (std::size_t j = i + 1; j < len; ++j) {
        growth_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      rebuild();
      return true;
    }
  }
  return false;
}

void PartitionCursor::rebuild() {
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(prefix_max_.back()) + 1, 0);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    masks[static_cast<std::size_t>(growth_[i])] |= 1u << (members_[i] - 1);
  }
  // Block k first appears at a member larger than block k-1's first member,
  // so the blocks are already in canonical order.
  std::vector<PlayerSet> blocks;
  blocks.reserve(masks.size());
  for (std::uint32_t m : masks) blocks.push_back(PlayerSet::from_mask(m));
  current_ = Collection(std::move(blocks));
}

std::vector<Partition> all_partitions(PlayerSet s) {
  std::vector<Partition> out;
  for_each_partition(s, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Collection> all_collections(int n) {
  std::vector<Collection> out;
  for_each_collection(n, [&](const Collection& c) { out.push_back(c); });
  return out;
}

}  // namespace mergesplit
