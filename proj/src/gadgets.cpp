#include "posit/gadgets.hpp"

#include <algorithm>

#include "posit/error.hpp"

namespace posit {
namespace {

class GadgetBuilder {
 public:
  explicit GadgetBuilder(const Alphabet& alphabet) : alphabet_(alphabet) {}

  VertexId add(const std::string& name, Player owner) {
    vertices_.push_back({name, owner});
    return vertices_.size() - 1;
  }

  // Single-letter path spelling `word` from `from` to `to`.
  void thread(VertexId from, const FiniteWord& word, VertexId to, const std::string& tag) {
    VertexId at = from;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const VertexId next = i + 1 == word.size() ? to : add(tag + std::to_string(i + 1), Player::Adam);
      edge(at, word[i], next);
      at = next;
    }
  }

  // A single infinite path from `from` spelling w.  The cycle never passes
  // through `from` itself: an empty prefix is replaced by one period.
  void lasso(VertexId from, const LassoWord& w, const std::string& tag) {
    const FiniteWord prefix = w.prefix.empty() ? w.period : w.prefix;
    const FiniteWord word = prefix + w.period;
    std::vector<VertexId> path{from};
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      path.push_back(add(tag + std::to_string(i + 1), Player::Adam));
    path.push_back(path[prefix.size()]);
    for (std::size_t i = 0; i < word.size(); ++i) edge(path[i], word[i], path[i + 1]);
  }

  Arena build() { return Arena(alphabet_, std::move(vertices_), std::move(edges_)); }

 private:
  void edge(VertexId src, char letter, VertexId dst) {
    alphabet_.require(letter);
    edges_.push_back({src, letter, dst});
  }

  Alphabet alphabet_;
  std::vector<ArenaVertex> vertices_;
  std::vector<ArenaEdge> edges_;
};

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorKind::InvalidWitness, why);
}

}  // namespace

Gadget gadget_from_witness(const Witness& witness, const Alphabet& alphabet) {
  try {
    GadgetBuilder b(alphabet);
    if (const auto* w1 = std::get_if<Witness1>(&witness)) {
      if (w1->u.empty() || w1->u_prime.empty())
        invalid("the two-prefix gadget needs nonempty prefixes (an empty one would be an epsilon move)");
      if (w1->u == w1->u_prime) invalid("the two prefixes coincide");
      const VertexId start = b.add("start", Player::Adam);
      const VertexId hub = b.add("hub", Player::Eve);
      b.thread(start, w1->u, hub, "u");
      b.thread(start, w1->u_prime, hub, "up");
      b.lasso(hub, w1->w, "w");
      b.lasso(hub, w1->w_prime, "wp");
      return {b.build(), start};
    }

    FiniteWord u = std::visit([](const auto& w) { return w.u; }, witness);
    const VertexId start = u.empty() ? b.add("hub", Player::Eve) : b.add("start", Player::Adam);
    const VertexId hub = u.empty() ? start : b.add("hub", Player::Eve);
    b.thread(start, u, hub, "u");
    if (const auto* w2 = std::get_if<Witness2>(&witness)) {
      if (w2->v.empty()) invalid("empty cycle word");
      b.thread(hub, w2->v, hub, "v");
      b.lasso(hub, w2->w, "w");
    } else {
      const auto& w3 = std::get<Witness3>(witness);
      if (w3.v.empty() || w3.v_prime.empty()) invalid("empty cycle word");
      b.thread(hub, w3.v, hub, "v");
      b.thread(hub, w3.v_prime, hub, "vp");
    }
    return {b.build(), start};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidWitness) throw;
    invalid(e.what());
  }
}

Certificate certify_gadget(const Dpa& a, const Witness& witness) {
  auto gadget = gadget_from_witness(witness, a.alphabet());
  const VertexId start = gadget.start;
  const Game game(std::move(gadget.arena), a);
  Certificate c;
  const auto solved = solve_game(game);
  c.won = std::find(solved.winning_region.begin(), solved.winning_region.end(), start) !=
          solved.winning_region.end();
  c.positional_win = find_positional(game, start).has_value();
  return c;
}

}  // namespace posit
