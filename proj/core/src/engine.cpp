#include "mergesplit/engine.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>

#include <json.hpp>

#include "mergesplit/error.hpp"

namespace mergesplit {

std::string_view to_string(MoveKind kind) noexcept {
  return kind == MoveKind::merge ? "merge" : "split";
}

PlayerSet Move::merged() const noexcept {
  PlayerSet out;
  for (PlayerSet part : parts) out = out | part;
  return out;
}

namespace {

void require_partition_of_grand(const Partition& p) {
  const int n = p.support().max_player();
  require_partition_of(p, PlayerSet::grand(n));
}

// Index lists in lexicographic order are the pre-order of this DFS.
void merge_candidates(std::size_t blocks, std::size_t from, std::vector<std::size_t>& current,
                      std::vector<std::vector<std::size_t>>& out) {
  for (std::size_t i = from; i < blocks; ++i) {
    current.push_back(i);
    if (current.size() >= 2) out.push_back(current);
    merge_candidates(blocks, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Move> applicable_moves(const Partition& p, const ComparisonRelation& rel) {
  require_engine_admissible(rel);
  require_partition_of_grand(p);
  const auto blocks = p.blocks();
  std::vector<Move> moves;

  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> scratch;
  merge_candidates(blocks.size(), 0, scratch, candidates);
  for (const auto& indices : candidates) {
    Move move{MoveKind::merge, {}};
    for (std::size_t i : indices) move.parts.push_back(blocks[i]);
    const Collection whole = Collection::from_sets({move.merged()});
    if (rel.prefers(whole, Collection::from_sets(move.parts))) moves.push_back(std::move(move));
  }

  for (PlayerSet block : blocks) {
    if (block.size() < 2) continue;
    const Collection whole = Collection::from_sets({block});
    for_each_partition(block, [&](const Partition& pieces) {
      if (pieces.size() < 2) return;
      if (rel.prefers(pieces, whole)) {
        moves.push_back(Move{MoveKind::split, {pieces.blocks().begin(), pieces.blocks().end()}});
      }
    });
  }
  return moves;
}

Partition apply_move(const Partition& p, const Move& move) {
  if (move.parts.size() < 2) throw Error(Errc::invalid_move, "a move needs at least two parts");
  std::vector<PlayerSet> blocks(p.blocks().begin(), p.blocks().end());
  auto remove_block = [&](PlayerSet b) {
    auto it = std::find(blocks.begin(), blocks.end(), b);
    if (it == blocks.end()) {
      throw Error(Errc::invalid_move, "{" + b.str() + "} is not a block of " + p.literal());
    }
    blocks.erase(it);
  };

  if (move.kind == MoveKind::merge) {
    for (PlayerSet part : move.parts) remove_block(part);
    blocks.push_back(move.merged());
  } else {
    // Validates that the pieces are disjoint and non-empty.
    const Collection pieces = Collection::from_sets(move.parts);
    remove_block(pieces.support());
    blocks.insert(blocks.end(), pieces.blocks().begin(), pieces.blocks().end());
  }
  try {
    return Collection::from_sets(std::move(blocks));
  } catch (const Error& e) {
    throw Error(Errc::invalid_move, e.what());
  }
}

std::uint64_t bell_number(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative Bell index");
  if (n > 25) throw Error(Errc::overflow, "B(" + std::to_string(n) + ") does not fit in 64 bits");
  // Bell triangle: each row starts with the previous row's last entry.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

MoveTrace iterate(const Partition& start, const ComparisonRelation& rel, Schedule schedule,
                  std::optional<std::uint64_t> cap) {
  require_engine_admissible(rel);
  require_partition_of_grand(start);
  const int n = start.support().max_player();
  const std::uint64_t limit = cap ? *cap : bell_number(n) - 1;

  std::mt19937_64 rng(schedule.seed);
  MoveTrace trace{start, {}, start};
  std::set<Partition> seen{start};
  Partition current = start;
  while (true) {
    std::vector<Move> moves = applicable_moves(current, rel);
    if (moves.empty()) break;
    std::size_t pick = 0;
    if (schedule.kind == Schedule::Kind::random) pick = static_cast<std::size_t>(rng() % moves.size());
    Partition next = apply_move(current, moves[pick]);
    if (trace.steps.size() >= limit) {
      throw Error(Errc::cap_exceeded, "iteration from " + start.literal() + " exceeded " +
                                          std::to_string(limit) + " steps");
    }
    if (!seen.insert(next).second) {
      throw Error(Errc::cap_exceeded, "iteration revisited " + next.literal() +
                                          "; the relation is not a comparison relation");
    }
    trace.steps.push_back(TraceStep{std::move(moves[pick]), next});
    current = std::move(next);
  }
  trace.terminal = current;
  return trace;
}

std::vector<Partition> all_terminal_outcomes(const Partition& start, const ComparisonRelation& rel) {
  require_engine_admissible(rel);
  require_partition_of_grand(start);
  check_player_count(start.support().max_player());

  std::set<Partition> visited{start};
  std::set<Partition> terminals;
  std::vector<Partition> stack{start};
  while (!stack.empty()) {
    Partition current = std::move(stack.back());
    stack.pop_back();
    const std::vector<Move> moves = applicable_moves(current, rel);
    if (moves.empty()) {
      terminals.insert(current);
      continue;
    }
    for (const Move& move : moves) {
      Partition next = apply_move(current, move);
      if (visited.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return {terminals.begin(), terminals.end()};
}

TraceCheck check_trace(const MoveTrace& trace, const ComparisonRelation& rel) {
  TraceCheck check;
  std::set<Partition> seen{trace.start};
  const Partition* previous = &trace.start;
  for (const TraceStep& step : trace.steps) {
    if (!seen.insert(step.result).second) check.repeat_free = false;
    if (!rel.prefers(step.result, *previous)) check.descending = false;
    if (step.move.parts.size() < 2) {
      check.locally_descending = false;
    } else {
      try {
        const Collection parts = Collection::from_sets(step.move.parts);
        const Collection whole = Collection::from_sets({step.move.merged()});
        const bool local = step.move.kind == MoveKind::merge ? rel.prefers(whole, parts) : rel.prefers(parts, whole);
        if (!local) check.locally_descending = false;
      } catch (const Error&) {
        check.locally_descending = false;
      }
    }
    try {
      if (apply_move(*previous, step.move) != step.result) check.moves_consistent = false;
    } catch (const Error&) {
      check.moves_consistent = false;
    }
    previous = &step.result;
  }
  if (*previous != trace.terminal || !applicable_moves(trace.terminal, rel).empty()) {
    check.terminal_closed = false;
  }
  return check;
}

void write_trace_jsonl(std::ostream& out, const MoveTrace& trace) {
  using nlohmann::ordered_json;
  out << ordered_json{{"start", trace.start.literal()}}.dump() << '\n';
  for (const TraceStep& step : trace.steps) {
    ordered_json blocks = ordered_json::array();
    for (PlayerSet part : step.move.parts) blocks.push_back(part.members());
    ordered_json line;
    line["move"] = to_string(step.move.kind);
    line["blocks"] = std::move(blocks);
    line["result"] = step.result.literal();
    out << line.dump() << '\n';
  }
  ordered_json last;
  last["terminal"] = trace.terminal.literal();
  last["steps"] = trace.steps.size();
  out << last.dump() << '\n';
}

}  // namespace mergesplit
