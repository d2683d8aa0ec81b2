#include "mergesplit/stability.hpp"

#include "mergesplit/error.hpp"

namespace mergesplit {

std::string_view to_string(StabilityMethod method) noexcept {
  switch (method) {
    case StabilityMethod::dp: return "dp";
    case StabilityMethod::dp_direct: return "dp-direct";
    case StabilityMethod::dc_direct: return "dc-direct";
    case StabilityMethod::dc_lemma: return "dc-lemma";
  }
  return "unknown";
}

namespace {

int grand_size(const Partition& p) {
  const int n = p.support().max_player();
  check_player_count(n);
  require_partition_of(p, PlayerSet::grand(n));
  return n;
}

StabilityVerdict unstable(StabilityMethod method, Collection witness, std::string detail = {}) {
  return StabilityVerdict{false, std::move(witness), method, std::move(detail)};
}

}  // namespace

StabilityVerdict is_dp_stable(const Partition& p, const ComparisonRelation& rel, StabilityMethod method) {
  require_engine_admissible(rel);
  const int n = grand_size(p);
  if (method != StabilityMethod::dp && method != StabilityMethod::dp_direct) {
    throw Error(Errc::invalid_argument, "is_dp_stable takes dp or dp-direct");
  }
  std::optional<StabilityVerdict> found;
  for_each_partition(PlayerSet::grand(n), [&](const Partition& other) {
    if (found) return;
    if (method == StabilityMethod::dp) {
      if (other != p && !rel.prefers(p, other)) found = unstable(method, other);
    } else {
      const Collection framed = frame(other, p);
      if (framed != other && !rel.prefers(framed, other)) found = unstable(method, other);
    }
  });
  return found ? *found : StabilityVerdict{true, std::nullopt, method, {}};
}

StabilityVerdict is_dc_stable_direct(const Partition& p, const ComparisonRelation& rel) {
  require_engine_admissible(rel);
  const int n = grand_size(p);
  std::optional<StabilityVerdict> found;
  for_each_collection(n, [&](const Collection& c) {
    if (found) return;
    const Collection framed = frame(c, p);
    if (framed != c && !rel.prefers(framed, c)) found = unstable(StabilityMethod::dc_direct, c);
  });
  return found ? *found : StabilityVerdict{true, std::nullopt, StabilityMethod::dc_direct, {}};
}

StabilityVerdict is_dc_stable_lemma(const Partition& p, const ComparisonRelation& rel) {
  require_engine_admissible(rel);
  const int n = grand_size(p);

  // Merge condition: {A u B} over {A, B} for disjoint A, B inside a block.
  for (PlayerSet block : p.blocks()) {
    const std::uint32_t outer = block.mask();
    for (std::uint32_t u = 1; u <= outer; ++u) {
      if ((u & ~outer) != 0 || std::popcount(u) < 2) continue;
      const Collection whole = Collection::from_sets({PlayerSet::from_mask(u)});
      const std::uint32_t low = u & (~u + 1);
      const std::uint32_t rest = u & ~low;
      for (std::uint32_t s = rest;; s = (s - 1) & rest) {
        const std::uint32_t a = low | s;
        if (a != u) {
          Collection pair = Collection::from_sets({PlayerSet::from_mask(a), PlayerSet::from_mask(u & ~a)});
          if (!rel.prefers(whole, pair)) return unstable(StabilityMethod::dc_lemma, std::move(pair), "merge");
        }
        if (s == 0) break;
      }
    }
  }

  // Split condition: {T}[P] over {T} for every P-incompatible T.
  const std::uint32_t limit = PlayerSet::grand(n).mask();
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    const PlayerSet t = PlayerSet::from_mask(mask);
    if (is_compatible(t, p)) continue;
    Collection single = Collection::from_sets({t});
    if (!rel.prefers(frame(single, p), single)) {
      return unstable(StabilityMethod::dc_lemma, std::move(single), "split");
    }
  }
  return StabilityVerdict{true, std::nullopt, StabilityMethod::dc_lemma, {}};
}

std::optional<Partition> find_dc_stable(const ComparisonRelation& rel, int n) {
  require_engine_admissible(rel);
  check_player_count(n);
  std::optional<Partition> found;
  for_each_partition(PlayerSet::grand(n), [&](const Partition& p) {
    if (!is_dc_stable_lemma(p, rel).stable) return;
    if (found) {
      throw Error(Errc::multiple_stable, "both " + found->literal() + " and " + p.literal() +
                                             " are D_c-stable; the relation violates an axiom");
    }
    found = p;
  });
  return found;
}

}  // namespace mergesplit
