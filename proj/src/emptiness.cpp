#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <tuple>

#include "posit/automata.hpp"

namespace posit {
namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

struct ShortestPaths {
  std::vector<std::size_t> dist;
  std::vector<std::size_t> parent_edge;
};

// Multi-source BFS over the edges accepted by `allowed`.
template <class Allowed>
ShortestPaths bfs(const ProductGraph& g, std::span<const VertexId> sources, Allowed allowed) {
  ShortestPaths sp{std::vector<std::size_t>(g.num_vertices(), kUnset),
                   std::vector<std::size_t>(g.num_vertices(), kUnset)};
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (sp.dist[s] != kUnset) continue;
    sp.dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (std::size_t e : g.out(v)) {
      if (!allowed(e)) continue;
      const VertexId t = g.edges()[e].dst;
      if (sp.dist[t] != kUnset) continue;
      sp.dist[t] = sp.dist[v] + 1;
      sp.parent_edge[t] = e;
      queue.push_back(t);
    }
  }
  return sp;
}

FiniteWord path_label(const ProductGraph& g, const ShortestPaths& sp, VertexId target) {
  FiniteWord label;
  for (VertexId v = target; sp.parent_edge[v] != kUnset; v = g.edges()[sp.parent_edge[v]].src)
    label.push_back(g.edges()[sp.parent_edge[v]].letter);
  std::reverse(label.begin(), label.end());
  return label;
}

// Iterative Tarjan over the allowed edges; returns a component id per vertex
// (kUnset for vertices outside `active`).
template <class Allowed>
std::vector<std::size_t> strongly_connected(const ProductGraph& g, const std::vector<char>& active,
                                            Allowed allowed) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, std::size_t>> call;
  std::size_t counter = 0, components = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (!active[root] || index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] == kUnset) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      const auto& out = g.out(v);
      bool descended = false;
      while (next < out.size()) {
        const std::size_t e = out[next++];
        if (!allowed(e)) continue;
        const VertexId w = g.edges()[e].dst;
        if (!active[w]) continue;
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      const VertexId done = v;
      if (low[done] == index[done]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != done);
        ++components;
      }
      call.pop_back();
      if (!call.empty()) {
        const VertexId parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

std::vector<Priority> even_values(const ProductGraph& g, bool first) {
  std::set<Priority> values;
  for (const auto& e : g.edges()) {
    const Priority p = first ? e.first : e.second;
    if (p % 2 == 0) values.insert(p);
  }
  return {values.begin(), values.end()};
}

auto candidate_key(const LassoWord& w) {
  return std::make_tuple(w.prefix.size() + w.period.size(), w.period.size(), w.prefix, w.period);
}

}  // namespace

std::optional<LassoWord> conj_nonempty_witness(const ProductGraph& g,
                                               std::span<const VertexId> starts) {
  const auto access = bfs(g, starts, [](std::size_t) { return true; });
  std::vector<char> reachable(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) reachable[v] = access.dist[v] != kUnset;

  std::optional<LassoWord> best;
  for (Priority d1 : even_values(g, true)) {
    for (Priority d2 : even_values(g, false)) {
      auto allowed = [&](std::size_t e) {
        const auto& edge = g.edges()[e];
        return edge.first >= d1 && edge.second >= d2;
      };
      const auto comp = strongly_connected(g, reachable, allowed);
      auto internal = [&](std::size_t e) {
        const auto& edge = g.edges()[e];
        return allowed(e) && comp[edge.src] != kUnset && comp[edge.src] == comp[edge.dst];
      };

      // Components holding an edge with first == d1 and one with second == d2.
      std::set<std::size_t> has_first, has_second;
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        if (!internal(e)) continue;
        if (g.edges()[e].first == d1) has_first.insert(comp[g.edges()[e].src]);
        if (g.edges()[e].second == d2) has_second.insert(comp[g.edges()[e].src]);
      }

      for (std::size_t c : has_first) {
        if (!has_second.contains(c)) continue;
        auto inside = [&](std::size_t e) {
          return internal(e) && comp[g.edges()[e].src] == c;
        };

        VertexId entry = kUnset;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
          if (comp[v] != c) continue;
          if (entry == kUnset || access.dist[v] < access.dist[entry]) entry = v;
        }

        // Walk entry -> e1 -> e2 -> entry inside the component.
        auto closest_edge = [&](VertexId from, auto wanted) {
          const auto sp = bfs(g, std::span<const VertexId>(&from, 1), inside);
          std::size_t pick = kUnset;
          for (std::size_t e = 0; e < g.edges().size(); ++e) {
            if (!inside(e) || !wanted(g.edges()[e])) continue;
            if (pick == kUnset || sp.dist[g.edges()[e].src] < sp.dist[g.edges()[pick].src])
              pick = e;
          }
          return std::make_pair(pick, path_label(g, sp, g.edges()[pick].src));
        };

        FiniteWord cycle;
        auto [e1, to_e1] = closest_edge(entry, [&](const ProductEdge& e) { return e.first == d1; });
        cycle += to_e1;
        cycle.push_back(g.edges()[e1].letter);
        VertexId at = g.edges()[e1].dst;
        if (g.edges()[e1].second != d2) {
          auto [e2, to_e2] = closest_edge(at, [&](const ProductEdge& e) { return e.second == d2; });
          cycle += to_e2;
          cycle.push_back(g.edges()[e2].letter);
          at = g.edges()[e2].dst;
        }
        const auto back = bfs(g, std::span<const VertexId>(&at, 1), inside);
        cycle += path_label(g, back, entry);

        LassoWord candidate = normalize(LassoWord(path_label(g, access, entry), cycle));
        if (!best || candidate_key(candidate) < candidate_key(*best)) best = std::move(candidate);
      }
    }
  }
  return best;
}

}  // namespace posit
