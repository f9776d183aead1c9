#include "posit/reduction.hpp"

#include <algorithm>
#include <deque>

#include "posit/error.hpp"

namespace posit {
namespace {

MemoryState successor(const Strategy& s, const std::vector<std::vector<std::size_t>>& out,
                      MemoryState m) {
  if (out.at(m).size() != 1)
    throw Error(ErrorKind::NotEveOnly,
                "memory state " + std::to_string(m) + " does not have exactly one successor");
  return s.edges[out[m].front()].dst;
}

}  // namespace

LassoWord unique_path_lasso(const Strategy& s, MemoryState m) {
  const auto out = s.out_edges();
  std::vector<std::ptrdiff_t> position(s.num_states, -1);
  FiniteWord labels;
  MemoryState cur = m;
  while (position.at(cur) < 0) {
    position[cur] = static_cast<std::ptrdiff_t>(labels.size());
    const MemoryState next = successor(s, out, cur);
    labels.push_back(s.edges[out[cur].front()].letter);
    cur = next;
  }
  const auto split = static_cast<std::size_t>(position[cur]);
  return LassoWord(labels.substr(0, split), labels.substr(split));
}

std::optional<FiniteWord> path_word(const Strategy& s, MemoryState from, MemoryState to) {
  const auto out = s.out_edges();
  for (MemoryState m = 0; m < s.num_states; ++m) successor(s, out, m);

  std::vector<std::size_t> parent(s.num_states, kNoChoice);
  std::vector<char> seen(s.num_states, 0);
  std::deque<MemoryState> queue{from};
  seen.at(from) = 1;
  while (!queue.empty()) {
    const MemoryState m = queue.front();
    queue.pop_front();
    if (m == to) break;
    for (std::size_t i : out[m]) {
      const MemoryState t = s.edges[i].dst;
      if (seen[t]) continue;
      seen[t] = 1;
      parent[t] = i;
      queue.push_back(t);
    }
  }
  if (!seen.at(to)) return std::nullopt;
  FiniteWord word;
  for (MemoryState m = to; m != from; m = s.edges[parent[m]].src) word.push_back(s.edges[parent[m]].letter);
  std::reverse(word.begin(), word.end());
  return word;
}

MemoryState renumber(MemoryState m, const MergePlan& plan) {
  if (m == plan.drop) m = plan.keep;
  return m > plan.drop ? m - 1 : m;
}

Strategy merge(const Strategy& s, const MergePlan& plan) {
  if (plan.keep == plan.drop || plan.keep >= s.num_states || plan.drop >= s.num_states)
    throw Error(ErrorKind::InvalidPlan, "keep and drop must be distinct memory states");
  if (s.sigma[plan.keep] != s.sigma[plan.drop])
    throw Error(ErrorKind::InvalidPlan, "keep and drop lie over different vertices");

  Strategy merged;
  merged.num_states = s.num_states - 1;
  for (MemoryState m = 0; m < s.num_states; ++m)
    if (m != plan.drop) merged.sigma.push_back(s.sigma[m]);
  for (const auto& e : s.edges) {
    if (e.src == plan.drop) continue;
    const StrategyEdge moved{renumber(e.src, plan), e.letter, renumber(e.dst, plan)};
    if (std::find(merged.edges.begin(), merged.edges.end(), moved) == merged.edges.end())
      merged.edges.push_back(moved);
  }
  return merged;
}

MergePlan choose_merge(const Strategy& s, const Dpa& a, MemoryState p, MemoryState q) {
  if (p == q || p >= s.num_states || q >= s.num_states || s.sigma[p] != s.sigma[q])
    throw Error(ErrorKind::PreconditionViolated,
                "merge candidates must be distinct states over the same vertex");

  MergePlan plan;
  const MemoryState lower = std::min(p, q);
  auto decide = [&](const LassoWord& left, const LassoWord& right, MemoryState if_left_leq,
                    MemoryState if_right_leq) {
    const auto c = compare_lassos(a, left, right);
    plan.comparisons.push_back({left, right, c.relation});
    switch (c.relation) {
      case Relation::Incomparable:
        throw Error(ErrorKind::IncomparableLassos,
                    left.to_string() + " and " + right.to_string() +
                        " are incomparable (prefixes '" + c.u + "' and '" + c.u_prime + "')");
      case Relation::Equivalent: return lower;
      case Relation::LeftLeq: return if_left_leq;
      case Relation::RightLeq: return if_right_leq;
    }
    return lower;
  };

  const auto p_to_q = path_word(s, p, q);
  const auto q_to_p = path_word(s, q, p);
  if (!p_to_q && !q_to_p) {
    plan.merge_case = 1;
    plan.keep = decide(unique_path_lasso(s, p), unique_path_lasso(s, q), q, p);
  } else if (p_to_q && !q_to_p) {
    plan.merge_case = 2;
    plan.keep = decide(omega_power(*p_to_q), unique_path_lasso(s, q), q, p);
  } else if (!p_to_q && q_to_p) {
    plan.merge_case = 3;
    plan.keep = decide(omega_power(*q_to_p), unique_path_lasso(s, p), p, q);
  } else {
    plan.merge_case = 4;
    plan.keep = decide(omega_power(*q_to_p), omega_power(*p_to_q), p, q);
  }
  plan.drop = plan.keep == p ? q : p;
  return plan;
}

ReductionResult reduce_to_positional(const Game& g, const Strategy& s,
                                     std::span<const MemoryState> initial_states) {
  if (!g.arena.eve_only()) throw Error(ErrorKind::NotEveOnly, "reduction needs an Eve-only arena");
  if (!verify_strategy(g, s, initial_states))
    throw Error(ErrorKind::PreconditionViolated, "input strategy is not winning");

  ReductionResult result{s, {initial_states.begin(), initial_states.end()}, {}, s.memory()};
  auto& current = result.strategy;
  while (true) {
    std::optional<std::pair<MemoryState, MemoryState>> pair;
    for (MemoryState p = 0; p < current.num_states && !pair; ++p)
      for (MemoryState q = p + 1; q < current.num_states && !pair; ++q)
        if (current.sigma[p] == current.sigma[q]) pair.emplace(p, q);
    if (!pair) break;

    auto plan = choose_merge(current, g.condition, pair->first, pair->second);
    const std::size_t before = current.num_states;
    current = merge(current, plan);
    if (current.num_states + 1 != before)
      throw Error(ErrorKind::MergeBrokeWinning, "merge did not remove exactly one state");

    std::vector<MemoryState> initial;
    for (MemoryState m : result.initial_states) {
      const MemoryState moved = renumber(m, plan);
      if (std::find(initial.begin(), initial.end(), moved) == initial.end()) initial.push_back(moved);
    }
    result.initial_states = std::move(initial);

    if (auto play = losing_play(g, current, result.initial_states))
      throw Error(ErrorKind::MergeBrokeWinning,
                  "merging " + std::to_string(plan.drop) + " into " + std::to_string(plan.keep) +
                      " (case " + std::to_string(plan.merge_case) + ") admits losing play " +
                      play->to_string());
    result.merges.push_back(std::move(plan));
  }
  return result;
}

}  // namespace posit
