#include "posit/automata.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include "posit/error.hpp"

namespace posit {

Dpa::Dpa(Alphabet alphabet, std::size_t num_states, StateId initial,
         std::vector<Transition> table, std::vector<std::string> state_names)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      table_(std::move(table)),
      names_(std::move(state_names)) {
  if (alphabet_.size() == 0) throw Error(ErrorKind::ParseError, "automaton without alphabet");
  if (num_states_ == 0) throw Error(ErrorKind::ParseError, "automaton without states");
  if (initial_ >= num_states_) throw Error(ErrorKind::ParseError, "initial state out of range");
  if (table_.size() != num_states_ * alphabet_.size())
    throw Error(ErrorKind::ParseError, "transition table is not total");
  for (const auto& t : table_) {
    if (t.target >= num_states_) throw Error(ErrorKind::ParseError, "transition target out of range");
    if (t.priority < 0) throw Error(ErrorKind::ParseError, "negative priority");
  }
  if (names_.empty()) {
    for (std::size_t s = 0; s < num_states_; ++s) names_.push_back(std::to_string(s));
  } else if (names_.size() != num_states_) {
    throw Error(ErrorKind::ParseError, "state name count differs from state count");
  }
}

std::optional<StateId> Dpa::find_state(const std::string& name) const {
  for (std::size_t s = 0; s < names_.size(); ++s)
    if (names_[s] == name) return s;
  StateId id = 0;
  const auto* end = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(name.data(), end, id);
  if (ec == std::errc{} && ptr == end && !name.empty() && id < num_states_) return id;
  return std::nullopt;
}

std::vector<Priority> Dpa::priorities() const {
  std::set<Priority> seen;
  for (const auto& t : table_) seen.insert(t.priority);
  return {seen.begin(), seen.end()};
}

FiniteRun run_finite(const Dpa& a, StateId from, std::string_view u) {
  FiniteRun run{from, std::nullopt};
  for (char c : u) {
    const auto& t = a.step(run.state, c);
    run.state = t.target;
    run.min_priority = run.min_priority ? std::min(*run.min_priority, t.priority) : t.priority;
  }
  return run;
}

bool member_from(const Dpa& a, StateId from, const LassoWord& w) {
  StateId cur = run_finite(a, from, w.prefix).state;
  std::vector<std::ptrdiff_t> block_of(a.num_states(), -1);
  std::vector<Priority> block_min;
  while (block_of[cur] < 0) {
    block_of[cur] = static_cast<std::ptrdiff_t>(block_min.size());
    const auto run = run_finite(a, cur, w.period);
    block_min.push_back(*run.min_priority);
    cur = run.state;
  }
  const auto cycle_begin = block_min.begin() + block_of[cur];
  return *std::min_element(cycle_begin, block_min.end()) % 2 == 0;
}

Dpa complement_shift(const Dpa& a) {
  std::vector<Transition> table = a.table();
  for (auto& t : table) t.priority += 1;
  std::vector<std::string> names;
  for (std::size_t s = 0; s < a.num_states(); ++s) names.push_back(a.state_name(s));
  return Dpa(a.alphabet(), a.num_states(), a.initial(), std::move(table), std::move(names));
}

std::map<StateId, FiniteWord> reachable_states(const Dpa& a) {
  std::map<StateId, FiniteWord> access{{a.initial(), FiniteWord{}}};
  std::deque<StateId> queue{a.initial()};
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
      const StateId t = a.step(s, i).target;
      if (access.contains(t)) continue;
      access.emplace(t, access.at(s) + a.alphabet().letter(i));
      queue.push_back(t);
    }
  }
  return access;
}

void ProductGraph::add_edge(const ProductEdge& e) {
  out_.at(e.src).push_back(edges_.size());
  edges_.push_back(e);
}

ProductGraph product(const Dpa& a1, const Dpa& a2) {
  if (!(a1.alphabet() == a2.alphabet()))
    throw Error(ErrorKind::AlphabetMismatch, "product of automata over different alphabets");
  ProductGraph g(a1.num_states() * a2.num_states());
  for (StateId p = 0; p < a1.num_states(); ++p) {
    for (StateId q = 0; q < a2.num_states(); ++q) {
      for (std::size_t i = 0; i < a1.alphabet().size(); ++i) {
        const auto& t1 = a1.step(p, i);
        const auto& t2 = a2.step(q, i);
        g.add_edge({product_vertex(a2, p, q), a1.alphabet().letter(i),
                    product_vertex(a2, t1.target, t2.target), t1.priority, t2.priority});
      }
    }
  }
  return g;
}

std::optional<LassoWord> residual_included(const Dpa& a, StateId p, StateId q) {
  const auto g = product(a, complement_shift(a));
  return conj_nonempty_witness(g, product_vertex(a, p, q));
}

InclusionOracle::InclusionOracle(const Dpa& a)
    : dpa_(a),
      graph_(product(a, complement_shift(a))),
      cache_(a.num_states() * a.num_states()) {}

const std::optional<LassoWord>& InclusionOracle::query(StateId p, StateId q) {
  auto& slot = cache_.at(p * dpa_.num_states() + q);
  if (!slot) slot = conj_nonempty_witness(graph_, product_vertex(dpa_, p, q));
  return *slot;
}

}  // namespace posit
