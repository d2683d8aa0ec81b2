#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mergesplit {

/// Players are numbered 1..n.
using PlayerId = int;

/// Scans over partitions and collections are exponential in n, so every
/// entry point that enumerates checks n against a cap. Exceeding it raises
/// Errc::too_many_players.
inline constexpr int kDefaultPlayerCap = 16;
/// Hard limit imposed by the bitmask representation.
inline constexpr int kMaxPlayers = 31;

void check_player_count(int n, int cap = kDefaultPlayerCap);

/// A set of players stored as a bitmask (bit i-1 <=> player i).
///
/// Used both for coalitions (non-empty by convention, enforced where a
/// Collection is built) and for plain player sets such as supports.
class PlayerSet {
public:
  constexpr PlayerSet() noexcept = default;
  static constexpr PlayerSet from_mask(std::uint32_t mask) noexcept { return PlayerSet(mask); }
  static constexpr PlayerSet singleton(PlayerId i) noexcept { return PlayerSet(1u << (i - 1)); }
  static constexpr PlayerSet grand(int n) noexcept {
    return PlayerSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static PlayerSet of(std::initializer_list<PlayerId> players);
  static PlayerSet of(std::span<const PlayerId> players);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool contains(PlayerId i) const noexcept {
    return i >= 1 && i <= 32 && ((mask_ >> (i - 1)) & 1u) != 0;
  }
  /// Smallest member; 0 for the empty set.
  constexpr PlayerId min_player() const noexcept {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
  }
  /// Largest member; 0 for the empty set.
  constexpr PlayerId max_player() const noexcept {
    return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_);
  }
  constexpr bool subset_of(PlayerSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(PlayerSet other) const noexcept { return (mask_ & other.mask_) != 0; }

  std::vector<PlayerId> members() const;
  /// Comma-joined ascending ids, e.g. "1,2,4".
  std::string str() const;

  friend constexpr PlayerSet operator|(PlayerSet a, PlayerSet b) noexcept { return PlayerSet(a.mask_ | b.mask_); }
  friend constexpr PlayerSet operator&(PlayerSet a, PlayerSet b) noexcept { return PlayerSet(a.mask_ & b.mask_); }
  friend constexpr PlayerSet operator-(PlayerSet a, PlayerSet b) noexcept { return PlayerSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(PlayerSet, PlayerSet) noexcept = default;
  friend constexpr auto operator<=>(PlayerSet, PlayerSet) noexcept = default;

private:
  explicit constexpr PlayerSet(std::uint32_t mask) noexcept : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

using Coalition = PlayerSet;

/// A family of pairwise-disjoint non-empty coalitions.
///
/// Blocks are kept in canonical order (ascending smallest member), so two
/// collections are equal iff they contain the same coalitions. Because the
/// blocks are disjoint this is the same order as comparing the sorted member
/// lists lexicographically.
class Collection {
public:
  /// Validates and canonicalizes. Errors: empty_block, overlap.
  static Collection from_sets(std::vector<PlayerSet> blocks);
  /// Validates ids against 1..n as well. Errors: out_of_range, empty_block, overlap.
  static Collection from_lists(const std::vector<std::vector<PlayerId>>& blocks, int n);

  std::span<const PlayerSet> blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  PlayerSet support() const noexcept;
  /// Block containing player i, or the empty set when i is not covered.
  PlayerSet block_of(PlayerId i) const noexcept;
  bool contains_block(PlayerSet block) const noexcept;
  bool is_partition_of(PlayerSet base) const noexcept { return support() == base; }

  /// Blocks separated by '|', members by ','; e.g. "1,2|3|4,5".
  std::string literal() const;

  friend bool operator==(const Collection&, const Collection&) = default;
  friend auto operator<=>(const Collection&, const Collection&) = default;

private:
  friend class PartitionCursor;
  Collection() = default;
  explicit Collection(std::vector<PlayerSet> blocks) : blocks_(std::move(blocks)) {}
  std::vector<PlayerSet> blocks_;
};

/// A collection whose support is a stated base set (usually the grand
/// coalition). The type is the same; operations that need a partition of N
/// validate it with require_partition_of.
using Partition = Collection;

Collection make_collection(const std::vector<std::vector<PlayerId>>& blocks, int n);
PlayerSet support(const Collection& c);

/// Errc::not_a_partition unless p covers exactly `base`.
void require_partition_of(const Collection& p, PlayerSet base);

/// Union of two collections with disjoint supports (invalid_argument otherwise).
Collection join(const Collection& a, const Collection& b);

/// C in the frame of P: the non-empty intersections of P's blocks with the
/// support of C. The result partitions support(C).
Collection frame(const Collection& c, const Partition& p);

/// True iff t lies inside a single block of p.
bool is_compatible(PlayerSet t, const Partition& p);

/// Parses the literal form; whitespace is ignored. Validates ids against
/// 1..n and disjointness; does not require full coverage.
Collection parse_collection_literal(std::string_view text, int n);
/// As above, additionally requiring the result to partition {1..n}.
Partition parse_partition_literal(std::string_view text, int n);

/// Walks all set partitions of a player set in lexicographic order of their
/// restricted growth strings (the first is the single block, the last the
/// all-singletons partition).
class PartitionCursor {
public:
  explicit PartitionCursor(PlayerSet s);

  const Partition& current() const noexcept { return current_; }
  /// Advances; returns false after the last partition.
  bool next();

private:
  void rebuild();

  std::vector<PlayerId> members_;
  std::vector<int> growth_;      // restricted growth string
  std::vector<int> prefix_max_;  // prefix_max_[i] = max(growth_[0..i])
  Partition current_;
};

template <class F>
void for_each_partition(PlayerSet s, F&& f) {
  PartitionCursor cursor(s);
  do {
    f(cursor.current());
  } while (cursor.next());
}

std::vector<Partition> all_partitions(PlayerSet s);

/// Every collection in {1..n}: for each non-empty S (ascending bitmask
/// order), every partition of S.
template <class F>
void for_each_collection(int n, F&& f) {
  check_player_count(n);
  const std::uint32_t limit = PlayerSet::grand(n).mask();
  for (std::uint32_t mask = 1; mask != 0 && mask <= limit; ++mask) {
    for_each_partition(PlayerSet::from_mask(mask), f);
  }
}

std::vector<Collection> all_collections(int n);

}  // namespace mergesplit
