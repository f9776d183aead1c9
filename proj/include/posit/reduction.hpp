#pragma once

#include <optional>
#include <span>
#include <vector>

#include "posit/games.hpp"
#include "posit/positionality.hpp"

namespace posit {

/// One comparison made while deciding a merge.
struct OrderQuery {
  LassoWord left, right;
  Relation answer;
};

/// Remove `drop` and send every edge entering it to `keep`.
struct MergePlan {
  MemoryState keep = 0;
  MemoryState drop = 0;
  int merge_case = 0;  // 1..4, see choose_merge
  std::vector<OrderQuery> comparisons;
};

/// Label of the unique infinite path from m.  Throws NotEveOnly when some
/// state on the way does not have exactly one successor.
LassoWord unique_path_lasso(const Strategy& s, MemoryState m);

/// Label of the shortest path from `from` to `to`, if there is one.
std::optional<FiniteWord> path_word(const Strategy& s, MemoryState from, MemoryState to);

/// The merged strategy; states above `drop` shift down by one.  Throws
/// InvalidPlan.
Strategy merge(const Strategy& s, const MergePlan& plan);

/// Where state m ends up after applying `plan`.
MemoryState renumber(MemoryState m, const MergePlan& plan);

/// Decides which of p and q survives.
///   case 1: no path either way; keep the state with the larger lasso.
///   case 2: v from p to q, none back, w from q; keep q iff v^omega <= w.
///   case 3: case 2 with p and q exchanged.
///   case 4: v from p to q, v' back; keep p iff v'^omega <= v^omega.
/// Ties keep the lower id.  Throws IncomparableLassos, PreconditionViolated.
MergePlan choose_merge(const Strategy& s, const Dpa& a, MemoryState p, MemoryState q);

struct ReductionResult {
  Strategy strategy;
  std::vector<MemoryState> initial_states;  // renumbered alongside the merges
  std::vector<MergePlan> merges;
  std::size_t memory_before = 0;
};

/// Merges memory states over a common vertex until the strategy is
/// positional, re-verifying after every merge.  `initial_states` are the
/// states plays are judged from; they must cover the region.
/// Throws NotEveOnly, IncomparableLassos, MergeBrokeWinning,
/// PreconditionViolated.
ReductionResult reduce_to_positional(const Game& g, const Strategy& s,
                                     std::span<const MemoryState> initial_states);

}  // namespace posit
