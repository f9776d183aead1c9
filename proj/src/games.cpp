#include "posit/games.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "posit/error.hpp"

namespace posit {

Arena::Arena(Alphabet alphabet, std::vector<ArenaVertex> vertices, std::vector<ArenaEdge> edges)
    : alphabet_(std::move(alphabet)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      out_(vertices_.size()) {
  if (vertices_.empty()) throw Error(ErrorKind::ParseError, "arena without vertices");
  std::set<std::string> names;
  for (const auto& v : vertices_)
    if (!names.insert(v.name).second)
      throw Error(ErrorKind::ParseError, "duplicate vertex '" + v.name + "'");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.src >= vertices_.size() || e.dst >= vertices_.size())
      throw Error(ErrorKind::ParseError, "edge endpoint out of range");
    alphabet_.require(e.letter);
    out_[e.src].push_back(i);
  }
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (out_[v].empty())
      throw Error(ErrorKind::SinkVertex, "vertex '" + vertices_[v].name + "' has no outgoing edge");
}

std::optional<VertexId> Arena::find_vertex(const std::string& name) const {
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].name == name) return v;
  return std::nullopt;
}

bool Arena::eve_only() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const ArenaVertex& v) { return v.owner == Player::Eve; });
}

Game::Game(Arena arena_, Dpa condition_)
    : arena(std::move(arena_)), condition(std::move(condition_)) {
  if (!(arena.alphabet() == condition.alphabet()))
    throw Error(ErrorKind::AlphabetMismatch, "arena and condition use different alphabets");
}

std::vector<std::vector<std::size_t>> Strategy::out_edges() const {
  std::vector<std::vector<std::size_t>> out(num_states);
  for (std::size_t i = 0; i < edges.size(); ++i) out.at(edges[i].src).push_back(i);
  return out;
}

std::size_t Strategy::memory() const {
  std::map<VertexId, std::size_t> count;
  std::size_t most = 0;
  for (VertexId v : sigma) most = std::max(most, ++count[v]);
  return most;
}

void validate_strategy(const Arena& arena, const Strategy& s) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidStrategy, why); };
  if (s.sigma.size() != s.num_states) fail("sigma does not cover every memory state");
  for (VertexId v : s.sigma)
    if (v >= arena.num_vertices()) fail("sigma maps outside the arena");

  std::set<std::tuple<VertexId, char, VertexId>> moves;
  for (const auto& e : arena.edges()) moves.emplace(e.src, e.letter, e.dst);

  for (const auto& e : s.edges) {
    if (e.src >= s.num_states || e.dst >= s.num_states) fail("edge endpoint out of range");
    if (!moves.contains({s.sigma[e.src], e.letter, s.sigma[e.dst]}))
      fail("memory edge " + std::to_string(e.src) + " -" + e.letter + "-> " +
           std::to_string(e.dst) + " is not an arena move");
  }

  const auto out = s.out_edges();
  for (MemoryState m = 0; m < s.num_states; ++m) {
    const VertexId v = s.sigma[m];
    if (out[m].empty()) fail("memory state " + std::to_string(m) + " is a sink");
    if (arena.vertex(v).owner == Player::Eve) {
      if (out[m].size() != 1)
        fail("memory state " + std::to_string(m) + " over Eve vertex '" + arena.vertex(v).name +
             "' must have exactly one edge");
      continue;
    }
    for (std::size_t i : arena.out(v)) {
      const auto& move = arena.edges()[i];
      const bool answered = std::any_of(out[m].begin(), out[m].end(), [&](std::size_t j) {
        return s.edges[j].letter == move.letter && s.sigma[s.edges[j].dst] == move.dst;
      });
      if (!answered)
        fail("memory state " + std::to_string(m) + " ignores Adam's move " + move.letter +
             " to '" + arena.vertex(move.dst).name + "'");
    }
  }
}

void ParityGame::add_edge(const ParityEdge& e) {
  out.at(e.src).push_back(edges.size());
  edges.push_back(e);
}

ParityGame product_game(const Game& g) {
  const auto& arena = g.arena;
  const auto& dpa = g.condition;
  ParityGame pg;
  pg.owner.resize(arena.num_vertices() * dpa.num_states());
  pg.out.resize(pg.owner.size());
  for (VertexId v = 0; v < arena.num_vertices(); ++v) {
    for (StateId q = 0; q < dpa.num_states(); ++q) {
      const VertexId x = product_game_vertex(g, v, q);
      pg.owner[x] = arena.vertex(v).owner;
      for (std::size_t i : arena.out(v)) {
        const auto& e = arena.edges()[i];
        const auto& t = dpa.step(q, e.letter);
        pg.add_edge({x, product_game_vertex(g, e.dst, t.target), t.priority, e.letter});
      }
    }
  }
  return pg;
}

std::vector<VertexId> ParitySolution::eve_region() const {
  std::vector<VertexId> region;
  for (VertexId v = 0; v < eve_wins.size(); ++v)
    if (eve_wins[v]) region.push_back(v);
  return region;
}

std::vector<VertexId> ParitySolution::adam_region() const {
  std::vector<VertexId> region;
  for (VertexId v = 0; v < eve_wins.size(); ++v)
    if (!eve_wins[v]) region.push_back(v);
  return region;
}

namespace {

// The parity game with every edge subdivided by a vertex carrying the edge's
// priority, so that the classical vertex-priority recursion applies.  Original
// vertices get a priority above all others; every cycle meets an edge vertex.
class SplitGame {
 public:
  explicit SplitGame(const ParityGame& pg) : original_(pg.num_vertices()) {
    const std::size_t n = pg.num_vertices() + pg.edges.size();
    Priority top = 0;
    for (const auto& e : pg.edges) top = std::max(top, e.priority);
    priority_.assign(n, top + 1);
    owner_.assign(n, 1);
    succ_.resize(n);
    pred_.resize(n);
    for (VertexId v = 0; v < original_; ++v) owner_[v] = pg.owner[v] == Player::Eve ? 0 : 1;
    for (std::size_t i = 0; i < pg.edges.size(); ++i) {
      const auto& e = pg.edges[i];
      const VertexId mid = original_ + i;
      priority_[mid] = e.priority;
      link(e.src, mid);
      link(mid, e.dst);
    }
  }

  std::size_t size() const { return succ_.size(); }
  std::size_t original() const { return original_; }

  // Writes winner (0 = Eve, 1 = Adam) and the owner's successor choice for
  // every vertex of `alive`.
  void solve(const std::vector<char>& alive, std::vector<char>& win,
             std::vector<VertexId>& choice) const {
    Priority least = -1;
    for (VertexId v = 0; v < size(); ++v)
      if (alive[v] && (least < 0 || priority_[v] < least)) least = priority_[v];
    if (least < 0) return;

    const char alpha = static_cast<char>(least % 2);
    const char opponent = static_cast<char>(1 - alpha);
    std::vector<char> top(size(), 0);
    for (VertexId v = 0; v < size(); ++v) top[v] = alive[v] && priority_[v] == least;

    std::vector<VertexId> attr_choice(size(), kNoChoice);
    const auto attr = attractor(alpha, top, alive, attr_choice);
    std::vector<char> rest(size(), 0);
    for (VertexId v = 0; v < size(); ++v) rest[v] = alive[v] && !attr[v];
    solve(rest, win, choice);

    std::vector<char> lost(size(), 0);
    bool opponent_wins_somewhere = false;
    for (VertexId v = 0; v < size(); ++v) {
      lost[v] = rest[v] && win[v] == opponent;
      opponent_wins_somewhere = opponent_wins_somewhere || lost[v];
    }

    if (!opponent_wins_somewhere) {
      for (VertexId v = 0; v < size(); ++v) {
        if (!alive[v]) continue;
        win[v] = alpha;
        if (!attr[v] || owner_[v] != alpha) continue;
        if (top[v]) {
          choice[v] = *std::find_if(succ_[v].begin(), succ_[v].end(),
                                    [&](VertexId w) { return alive[w] != 0; });
        } else {
          choice[v] = attr_choice[v];
        }
      }
      return;
    }

    std::vector<VertexId> back_choice(size(), kNoChoice);
    const auto back = attractor(opponent, lost, alive, back_choice);
    std::vector<char> remaining(size(), 0);
    for (VertexId v = 0; v < size(); ++v) remaining[v] = alive[v] && !back[v];
    solve(remaining, win, choice);
    for (VertexId v = 0; v < size(); ++v) {
      if (!back[v]) continue;
      win[v] = opponent;
      if (owner_[v] == opponent && !lost[v]) choice[v] = back_choice[v];
    }
  }

 private:
  void link(VertexId from, VertexId to) {
    succ_[from].push_back(to);
    pred_[to].push_back(from);
  }

  std::vector<char> attractor(char player, const std::vector<char>& target,
                              const std::vector<char>& alive,
                              std::vector<VertexId>& choice) const {
    std::vector<char> attr(size(), 0);
    std::vector<std::size_t> escapes(size(), 0);
    std::deque<VertexId> queue;
    for (VertexId v = 0; v < size(); ++v) {
      if (!alive[v]) continue;
      for (VertexId w : succ_[v]) escapes[v] += alive[w] ? 1 : 0;
      if (target[v]) {
        attr[v] = 1;
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : pred_[x]) {
        if (!alive[y] || attr[y]) continue;
        if (owner_[y] == player) {
          choice[y] = x;
        } else if (--escapes[y] > 0) {
          continue;
        }
        attr[y] = 1;
        queue.push_back(y);
      }
    }
    return attr;
  }

  std::size_t original_;
  std::vector<Priority> priority_;
  std::vector<char> owner_;
  std::vector<std::vector<VertexId>> succ_, pred_;
};

}  // namespace

ParitySolution solve_parity(const ParityGame& pg) {
  const SplitGame split(pg);
  std::vector<char> win(split.size(), 1);
  std::vector<VertexId> choice(split.size(), kNoChoice);
  split.solve(std::vector<char>(split.size(), 1), win, choice);

  const std::size_t n = pg.num_vertices();
  ParitySolution sol{std::vector<char>(n, 0), std::vector<std::size_t>(n, kNoChoice),
                     std::vector<std::size_t>(n, kNoChoice)};
  for (VertexId v = 0; v < n; ++v) {
    sol.eve_wins[v] = win[v] == 0;
    const bool owner_wins = (pg.owner[v] == Player::Eve) == (win[v] == 0);
    if (!owner_wins) continue;
    const std::size_t edge = choice[v] - split.original();
    (pg.owner[v] == Player::Eve ? sol.eve_choice : sol.adam_choice)[v] = edge;
  }
  return sol;
}

GameSolution solve_game(const Game& g) {
  const auto pg = product_game(g);
  const auto sol = solve_parity(pg);
  const std::size_t states = g.condition.num_states();

  std::vector<MemoryState> id(pg.num_vertices(), kNoChoice);
  GameSolution out;
  for (VertexId x = 0; x < pg.num_vertices(); ++x) {
    if (!sol.eve_wins[x]) continue;
    id[x] = out.strategy.num_states++;
    out.strategy.sigma.push_back(x / states);
  }
  for (VertexId x = 0; x < pg.num_vertices(); ++x) {
    if (!sol.eve_wins[x]) continue;
    auto keep = [&](std::size_t i) {
      const auto& e = pg.edges[i];
      out.strategy.edges.push_back({id[x], e.letter, id[e.dst]});
    };
    if (pg.owner[x] == Player::Eve) {
      keep(sol.eve_choice[x]);
    } else {
      for (std::size_t i : pg.out[x]) keep(i);
    }
  }
  for (VertexId v = 0; v < g.arena.num_vertices(); ++v) {
    const VertexId x = product_game_vertex(g, v, g.condition.initial());
    if (!sol.eve_wins[x]) continue;
    out.winning_region.push_back(v);
    out.initial_states.push_back(id[x]);
  }
  return out;
}

std::optional<LassoWord> losing_play(const Game& g, const Strategy& s,
                                     std::span<const MemoryState> from) {
  validate_strategy(g.arena, s);
  const Dpa complement = complement_shift(g.condition);
  const std::size_t states = complement.num_states();
  ProductGraph graph(s.num_states * states);
  for (const auto& e : s.edges) {
    for (StateId q = 0; q < states; ++q) {
      const auto& t = complement.step(q, e.letter);
      graph.add_edge({e.src * states + q, e.letter, e.dst * states + t.target, t.priority, 0});
    }
  }
  std::vector<VertexId> starts;
  for (MemoryState m : from) {
    if (m >= s.num_states) throw Error(ErrorKind::InvalidStrategy, "start state out of range");
    starts.push_back(m * states + complement.initial());
  }
  return conj_nonempty_witness(graph, starts);
}

bool verify_strategy(const Game& g, const Strategy& s, std::span<const MemoryState> from) {
  return !losing_play(g, s, from).has_value();
}

Strategy positional_strategy(const Arena& arena, std::span<const std::size_t> choice) {
  Strategy s;
  s.num_states = arena.num_vertices();
  for (VertexId v = 0; v < arena.num_vertices(); ++v) {
    s.sigma.push_back(v);
    if (arena.vertex(v).owner == Player::Eve) {
      const auto& e = arena.edges().at(choice[v]);
      s.edges.push_back({v, e.letter, e.dst});
    } else {
      for (std::size_t i : arena.out(v)) s.edges.push_back({v, arena.edges()[i].letter, arena.edges()[i].dst});
    }
  }
  return s;
}

std::optional<Strategy> find_positional(const Game& g, VertexId v0) {
  const auto& arena = g.arena;
  std::uint64_t space = 1;
  for (VertexId v = 0; v < arena.num_vertices(); ++v) {
    if (arena.vertex(v).owner != Player::Eve) continue;
    space *= arena.out(v).size();
    if (space > kMaxChoiceFunctions)
      throw Error(ErrorKind::SearchSpaceTooLarge,
                  "more than " + std::to_string(kMaxChoiceFunctions) + " positional strategies");
  }

  // Choices at Eve vertices unreachable from v0 cannot matter; they stay at
  // their first edge.
  std::vector<char> seen(arena.num_vertices(), 0);
  std::deque<VertexId> queue{v0};
  seen.at(v0) = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (std::size_t i : arena.out(v)) {
      const VertexId w = arena.edges()[i].dst;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexId> free;
  std::vector<std::size_t> pick(arena.num_vertices(), 0), choice(arena.num_vertices(), kNoChoice);
  for (VertexId v = 0; v < arena.num_vertices(); ++v) {
    if (arena.vertex(v).owner != Player::Eve) continue;
    choice[v] = arena.out(v).front();
    if (seen[v]) free.push_back(v);
  }

  const MemoryState start = v0;
  while (true) {
    for (VertexId v : free) choice[v] = arena.out(v)[pick[v]];
    auto s = positional_strategy(arena, choice);
    if (verify_strategy(g, s, std::span<const MemoryState>(&start, 1))) return s;
    std::size_t k = 0;
    for (; k < free.size(); ++k) {
      const VertexId v = free[k];
      if (++pick[v] < arena.out(v).size()) break;
      pick[v] = 0;
    }
    if (k == free.size()) return std::nullopt;
  }
}

Arena random_arena(const ArenaParams& params, const Alphabet& alphabet, std::uint64_t seed) {
  if (params.vertices == 0 || params.out_degree == 0)
    throw Error(ErrorKind::PreconditionViolated, "random arenas need vertices and edges");
  std::mt19937_64 rng(seed);
  std::vector<ArenaVertex> vertices;
  for (std::size_t v = 0; v < params.vertices; ++v) {
    const bool eve = static_cast<double>(rng() % 1'000'000) < params.eve_fraction * 1'000'000.0;
    vertices.push_back({"v" + std::to_string(v), eve ? Player::Eve : Player::Adam});
  }
  std::vector<ArenaEdge> edges;
  std::set<std::tuple<VertexId, char, VertexId>> present;
  for (VertexId v = 0; v < params.vertices; ++v) {
    const std::size_t degree = 1 + rng() % params.out_degree;
    for (std::size_t k = 0; k < degree; ++k) {
      const char letter = alphabet.letter(rng() % alphabet.size());
      const VertexId dst = rng() % params.vertices;
      if (present.emplace(v, letter, dst).second) edges.push_back({v, letter, dst});
    }
  }
  return Arena(alphabet, std::move(vertices), std::move(edges));
}

}  // namespace posit
