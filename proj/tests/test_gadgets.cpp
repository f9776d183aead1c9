#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "posit/error.hpp"
#include "posit/gadgets.hpp"
#include "oracles.hpp"

using namespace posit;
using oracle::fixture;

namespace {

const Alphabet abc = Alphabet::from_string("abc");
constexpr std::size_t kPlayLength = 48;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

// First kPlayLength letters of every play that follows `choices` at the
// successive branching vertices, repeating the last choice afterwards.
std::set<std::string> plays(const Gadget& g, std::size_t depth) {
  std::set<std::string> out;
  std::vector<std::size_t> choices(depth, 0);
  while (true) {
    std::string word;
    VertexId v = g.start;
    std::size_t branch = 0;
    while (word.size() < kPlayLength) {
      const auto& out_edges = g.arena.out(v);
      std::size_t pick = 0;
      if (out_edges.size() > 1) {
        pick = choices[std::min(branch, depth - 1)] % out_edges.size();
        ++branch;
      }
      const auto& e = g.arena.edges()[out_edges[pick]];
      word.push_back(e.letter);
      v = e.dst;
    }
    out.insert(word);
    std::size_t k = 0;
    for (; k < depth && ++choices[k] == 2; ++k) choices[k] = 0;
    if (k == depth) return out;
  }
}

std::set<std::string> unrolled(const std::vector<LassoWord>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(unroll(w, kPlayLength));
  return out;
}

std::set<std::string> expected_plays(const Witness& witness, std::size_t depth) {
  std::vector<LassoWord> ws;
  if (const auto* w = std::get_if<Witness1>(&witness)) {
    for (const auto& u : {w->u, w->u_prime})
      for (const auto& x : {w->w, w->w_prime}) ws.push_back(prepend(u, x));
  } else if (const auto* w = std::get_if<Witness2>(&witness)) {
    std::string loops;
    for (std::size_t k = 0; k < depth; ++k, loops += w->v) ws.push_back(prepend(w->u + loops, w->w));
    ws.emplace_back(w->u, w->v);
  } else {
    const auto& w3 = std::get<Witness3>(witness);
    std::vector<std::string> prefixes{w3.u};
    for (std::size_t k = 1; k < depth; ++k) {
      std::vector<std::string> next;
      for (const auto& p : prefixes)
        for (const auto& y : {w3.v, w3.v_prime}) next.push_back(p + y);
      prefixes = std::move(next);
    }
    for (const auto& p : prefixes)
      for (const auto& y : {w3.v, w3.v_prime}) ws.emplace_back(p, y);
  }
  return unrolled(ws);
}

std::size_t count_owner(const Arena& arena, Player p) {
  std::size_t n = 0;
  for (const auto& v : arena.vertices()) n += v.owner == p;
  return n;
}

}  // namespace

TEST_CASE("gadget shapes") {
  const auto three = gadget_from_witness(Witness3{"", "a", "b"}, abc);
  CHECK(three.arena.num_vertices() == 1);
  CHECK(three.arena.vertex(three.start).owner == Player::Eve);
  REQUIRE(three.arena.edges().size() == 2);
  for (const auto& e : three.arena.edges()) {
    CHECK(e.src == three.start);
    CHECK(e.dst == three.start);
  }

  const auto two = gadget_from_witness(Witness2{"", "a", LassoWord("", "b")}, abc);
  CHECK(two.arena.vertex(two.start).owner == Player::Eve);
  CHECK(two.arena.out(two.start).size() == 2);
  bool a_loop = false;
  for (const auto& e : two.arena.edges()) a_loop = a_loop || (e.src == two.start && e.dst == two.start && e.letter == 'a');
  CHECK(a_loop);

  // Start -a-> hub, start -b-> hub, then the exits :b and :c, each one
  // vertex with a self-loop.
  const auto one = gadget_from_witness(Witness1{"a", "b", LassoWord("", "b"), LassoWord("", "c")}, abc);
  CHECK(one.arena.vertex(one.start).owner == Player::Adam);
  CHECK(one.arena.num_vertices() == 4);
  CHECK(one.arena.edges().size() == 6);
  CHECK(count_owner(one.arena, Player::Eve) == 1);
  CHECK(one.arena.out(one.start).size() == 2);
}

TEST_CASE("intermediate vertices belong to Adam and have one move") {
  const auto g = gadget_from_witness(Witness1{"ab", "ca", LassoWord("ba", "cb"), LassoWord("", "abc")}, abc);
  for (VertexId v = 0; v < g.arena.num_vertices(); ++v) {
    if (g.arena.out(v).size() == 1) CHECK(g.arena.vertex(v).owner == Player::Adam);
    if (v != g.start && g.arena.out(v).size() > 1) CHECK(g.arena.vertex(v).owner == Player::Eve);
  }
  CHECK(count_owner(g.arena, Player::Eve) == 1);
}

TEST_CASE("gadgets spell exactly the prescribed plays") {
  const std::vector<Witness> witnesses{
      Witness1{"a", "b", LassoWord("", "b"), LassoWord("", "c")},
      Witness1{"ab", "ca", LassoWord("ba", "cb"), LassoWord("", "abc")},
      Witness1{"c", "cc", LassoWord("a", "a"), LassoWord("", "b")},
      Witness2{"", "a", LassoWord("", "b")},
      Witness2{"bc", "ab", LassoWord("ca", "b")},
      Witness2{"a", "aa", LassoWord("", "ab")},
      Witness3{"", "a", "b"},
      Witness3{"", "ab", "ac"},
      Witness3{"cab", "ba", "bc"},
  };
  for (const auto& w : witnesses) {
    CAPTURE(posit::property_of(w));
    const auto g = gadget_from_witness(w, abc);
    const std::size_t depth = 4;
    CHECK(plays(g, depth) == expected_plays(w, depth));
  }
}

TEST_CASE("malformed witnesses") {
  CHECK(kind_of([] { gadget_from_witness(Witness1{"", "b", LassoWord("", "b"), LassoWord("", "c")}, abc); }) ==
        ErrorKind::InvalidWitness);
  CHECK(kind_of([] { gadget_from_witness(Witness2{"", "", LassoWord("", "b")}, abc); }) ==
        ErrorKind::InvalidWitness);
  CHECK(kind_of([] { gadget_from_witness(Witness3{"", "a", ""}, abc); }) == ErrorKind::InvalidWitness);
  CHECK(kind_of([] { gadget_from_witness(Witness3{"", "a", "d"}, abc); }) == ErrorKind::InvalidWitness);
}

TEST_CASE("certification examples") {
  CHECK(certify_nonpositional(fixture("infab"), Witness3{"", "a", "b"}));
  CHECK(certify_nonpositional(fixture("onea"), Witness2{"", "a", LassoWord("", "b")}));
  CHECK(certify_nonpositional(fixture("res"), Witness1{"a", "b", LassoWord("", "b"), LassoWord("", "c")}));

  // A positional condition: playing a forever wins without memory.
  const auto c = certify_gadget(fixture("buchi_a"), Witness3{"", "a", "b"});
  CHECK(c.won);
  CHECK(c.positional_win);
  CHECK_FALSE(c.certified());
}

TEST_CASE("every reported witness certifies") {
  for (const auto& name : oracle::all_fixtures()) {
    const auto a = fixture(name);
    const auto v = check_positional(a);
    if (v.positional) continue;
    CAPTURE(name);
    const auto c = certify_gadget(a, *v.witness);
    CHECK(c.won);
    CHECK_FALSE(c.positional_win);
  }
}
