#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posit/automata.hpp"

namespace posit {

enum class Player { Eve, Adam };

struct ArenaVertex {
  std::string name;
  Player owner = Player::Eve;
};

struct ArenaEdge {
  VertexId src;
  char letter;
  VertexId dst;
};

/// Sinkless edge-labelled graph with vertices split between Eve and Adam.
class Arena {
 public:
  Arena(Alphabet alphabet, std::vector<ArenaVertex> vertices, std::vector<ArenaEdge> edges);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  const std::vector<ArenaVertex>& vertices() const noexcept { return vertices_; }
  const ArenaVertex& vertex(VertexId v) const { return vertices_.at(v); }
  const std::vector<ArenaEdge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& out(VertexId v) const { return out_.at(v); }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  bool eve_only() const;

 private:
  Alphabet alphabet_;
  std::vector<ArenaVertex> vertices_;
  std::vector<ArenaEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

/// An arena together with Eve's objective.
struct Game {
  Game(Arena arena_, Dpa condition_);

  Arena arena;
  Dpa condition;
};

using MemoryState = std::size_t;

struct StrategyEdge {
  MemoryState src;
  char letter;
  MemoryState dst;
  friend bool operator==(const StrategyEdge&, const StrategyEdge&) = default;
};

/// Eve strategy (S, sigma): a graph of memory states mapped onto the arena.
struct Strategy {
  std::size_t num_states = 0;
  std::vector<StrategyEdge> edges;
  std::vector<VertexId> sigma;

  std::vector<std::vector<std::size_t>> out_edges() const;
  /// Largest number of memory states over a single vertex.
  std::size_t memory() const;
  bool positional() const { return memory() <= 1; }
};

/// Throws InvalidStrategy naming the first broken invariant.
void validate_strategy(const Arena& arena, const Strategy& s);

// --- parity games on the product arena x automaton ------------------------

struct ParityEdge {
  VertexId src;
  VertexId dst;
  Priority priority;
  char letter;
};

struct ParityGame {
  std::vector<Player> owner;
  std::vector<ParityEdge> edges;
  std::vector<std::vector<std::size_t>> out;

  std::size_t num_vertices() const noexcept { return owner.size(); }
  void add_edge(const ParityEdge& e);
};

/// Vertex (v, q) has index v * |Q| + q.
ParityGame product_game(const Game& g);

inline VertexId product_game_vertex(const Game& g, VertexId v, StateId q) {
  return v * g.condition.num_states() + q;
}

inline constexpr std::size_t kNoChoice = static_cast<std::size_t>(-1);

struct ParitySolution {
  std::vector<char> eve_wins;  // per vertex; the complement is Adam's region
  /// Edge index chosen by the owner on its own winning region, else kNoChoice.
  std::vector<std::size_t> eve_choice;
  std::vector<std::size_t> adam_choice;

  std::vector<VertexId> eve_region() const;
  std::vector<VertexId> adam_region() const;
};

/// Attractor recursion, recursing on the least priority present.
ParitySolution solve_parity(const ParityGame& pg);

struct GameSolution {
  std::vector<VertexId> winning_region;
  /// Memory states are the product vertices won by Eve; sigma projects.
  Strategy strategy;
  /// The memory state (v, initial automaton state) for each v in the region,
  /// in region order.  Plays are judged from these states.
  std::vector<MemoryState> initial_states;
};

GameSolution solve_game(const Game& g);

/// True iff every infinite path of `s` from a state in `from` is labelled by
/// a word of the objective.  Throws InvalidStrategy.
bool verify_strategy(const Game& g, const Strategy& s, std::span<const MemoryState> from);

/// A losing play of `s` from `from`, if any.
std::optional<LassoWord> losing_play(const Game& g, const Strategy& s,
                                     std::span<const MemoryState> from);

/// The positional strategy picking edge `choice[v]` at every Eve vertex.
Strategy positional_strategy(const Arena& arena, std::span<const std::size_t> choice);

inline constexpr std::uint64_t kMaxChoiceFunctions = 1'000'000;

/// First positional strategy (in odometer order over Eve vertices) winning
/// from v0.  Throws SearchSpaceTooLarge.
std::optional<Strategy> find_positional(const Game& g, VertexId v0);

struct ArenaParams {
  std::size_t vertices = 1;
  std::size_t out_degree = 1;  // maximum; every vertex gets at least one edge
  double eve_fraction = 1.0;
};

Arena random_arena(const ArenaParams& params, const Alphabet& alphabet, std::uint64_t seed);

}  // namespace posit
