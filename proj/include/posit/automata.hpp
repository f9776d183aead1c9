#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posit/words.hpp"

namespace posit {

using StateId = std::size_t;
using Priority = int;

/// Priorities above this bound are rejected when reading automaton files.
inline constexpr Priority kMaxPriority = 16;

struct Transition {
  StateId target = 0;
  Priority priority = 0;
};

/// Complete deterministic parity automaton with priorities on transitions.
/// A run accepts iff the least priority seen infinitely often is even.
class Dpa {
 public:
  Dpa(Alphabet alphabet, std::size_t num_states, StateId initial,
      std::vector<Transition> table, std::vector<std::string> state_names = {});

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  StateId initial() const noexcept { return initial_; }

  const Transition& step(StateId from, std::size_t letter_index) const {
    return table_[from * alphabet_.size() + letter_index];
  }
  /// Throws UnknownLetter.
  const Transition& step(StateId from, char letter) const {
    return step(from, alphabet_.require(letter));
  }

  const std::vector<Transition>& table() const noexcept { return table_; }

  /// Name used in files and reports (defaults to the decimal id).
  const std::string& state_name(StateId s) const { return names_.at(s); }
  /// By name, or by decimal id.
  std::optional<StateId> find_state(const std::string& name) const;

  std::vector<Priority> priorities() const;

 private:
  Alphabet alphabet_;
  std::size_t num_states_;
  StateId initial_;
  std::vector<Transition> table_;
  std::vector<std::string> names_;
};

struct FiniteRun {
  StateId state;
  std::optional<Priority> min_priority;  // empty for the empty word
};

FiniteRun run_finite(const Dpa& a, StateId from, std::string_view u);

/// Is prefix.period^omega accepted when starting in `from`?
bool member_from(const Dpa& a, StateId from, const LassoWord& w);
inline bool member(const Dpa& a, const LassoWord& w) {
  return member_from(a, a.initial(), w);
}

/// Same automaton with every priority shifted by one: the complement.
Dpa complement_shift(const Dpa& a);

/// Breadth-first access words, ties broken by alphabet order.
std::map<StateId, FiniteWord> reachable_states(const Dpa& a);

// ---------------------------------------------------------------------------
// Two-coordinate priority graphs and the emptiness check for the conjunction
// of two parity conditions.

using VertexId = std::size_t;

struct ProductEdge {
  VertexId src;
  char letter;
  VertexId dst;
  Priority first;
  Priority second;
};

class ProductGraph {
 public:
  explicit ProductGraph(std::size_t num_vertices) : out_(num_vertices) {}

  void add_edge(const ProductEdge& e);

  std::size_t num_vertices() const noexcept { return out_.size(); }
  const std::vector<ProductEdge>& edges() const noexcept { return edges_; }
  /// Edge indices leaving v, in insertion order.
  const std::vector<std::size_t>& out(VertexId v) const { return out_.at(v); }

 private:
  std::vector<ProductEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Synchronized product; vertex (p, q) has index p * |Q2| + q.
ProductGraph product(const Dpa& a1, const Dpa& a2);

inline VertexId product_vertex(const Dpa& a2, StateId p, StateId q) {
  return p * a2.num_states() + q;
}

/// A lasso labelling a path from one of `starts` whose cycle has even least
/// priority in both coordinates, or nothing if no such path exists.  Among
/// all candidates the shortest (then lexicographically least) is returned.
std::optional<LassoWord> conj_nonempty_witness(const ProductGraph& g,
                                               std::span<const VertexId> starts);
inline std::optional<LassoWord> conj_nonempty_witness(const ProductGraph& g,
                                                      VertexId start) {
  return conj_nonempty_witness(g, std::span<const VertexId>(&start, 1));
}

/// Nothing iff L(p) is included in L(q); otherwise a lasso in L(p) \ L(q).
std::optional<LassoWord> residual_included(const Dpa& a, StateId p, StateId q);

/// Caches residual inclusion answers for one automaton.
class InclusionOracle {
 public:
  explicit InclusionOracle(const Dpa& a);

  const std::optional<LassoWord>& query(StateId p, StateId q);

 private:
  const Dpa& dpa_;
  ProductGraph graph_;
  std::vector<std::optional<std::optional<LassoWord>>> cache_;
};

}  // namespace posit
