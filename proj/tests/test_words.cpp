#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "posit/error.hpp"
#include "posit/words.hpp"
#include "oracles.hpp"

using namespace posit;

namespace {

const Alphabet ab = Alphabet::from_string("ab");
const Alphabet abc = Alphabet::from_string("abc");

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

// Two lassos denote the same word iff they agree on the first
// |p1| + |p2| + lcm(|v1|, |v2|) letters.
bool same_by_unrolling(const LassoWord& x, const LassoWord& y) {
  const std::size_t n =
      x.prefix.size() + y.prefix.size() + std::lcm(x.period.size(), y.period.size());
  return unroll(x, n) == unroll(y, n);
}

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK(ab.size() == 2);
  CHECK(ab.letter(1) == 'b');
  CHECK(ab.require('b') == 1);
  CHECK_FALSE(ab.index_of('c').has_value());
  CHECK(kind_of([] { ab.require('c'); }) == ErrorKind::UnknownLetter);
  CHECK(kind_of([] { Alphabet::from_string(""); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { Alphabet::from_string("aa"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { Alphabet::from_string("aB"); }) == ErrorKind::ParseError);
  CHECK(Alphabet::from_string("a0").contains('0'));
  CHECK_FALSE(Alphabet::from_string("ab") == Alphabet::from_string("ba"));
}

TEST_CASE("parse_lasso") {
  CHECK(parse_lasso("ab:ba", ab) == LassoWord("ab", "ba"));
  CHECK(parse_lasso(":a", ab) == LassoWord("", "a"));
  CHECK(kind_of([] { parse_lasso("a:", ab); }) == ErrorKind::MalformedLasso);
  CHECK(kind_of([] { parse_lasso("ab", ab); }) == ErrorKind::MalformedLasso);
  CHECK(kind_of([] { parse_lasso("a:b:a", ab); }) == ErrorKind::MalformedLasso);
  CHECK(kind_of([] { parse_lasso(":c", ab); }) == ErrorKind::UnknownLetter);
  CHECK(parse_lasso("ab:ba", ab).to_string() == "ab:ba");
}

TEST_CASE("normalize") {
  CHECK(normalize(LassoWord("a", "bb")) == LassoWord("a", "b"));
  CHECK(normalize(LassoWord("ab", "ab")) == LassoWord("", "ab"));
  CHECK(normalize(LassoWord("", "a")) == LassoWord("", "a"));
  CHECK(normalize(LassoWord("b", "ab")) == LassoWord("", "ba"));
  CHECK(primitive_root("abab") == "ab");
  CHECK(primitive_root("aba") == "aba");
  CHECK(same_by_unrolling(LassoWord("ab", "ab"), LassoWord("", "ab")));
}

TEST_CASE("unroll") {
  CHECK(unroll(LassoWord("ab", "c"), 5) == "abccc");
  CHECK(unroll(LassoWord("", "ab"), 3) == "aba");
  CHECK(unroll(LassoWord("a", "b"), 0).empty());
  CHECK(unroll(LassoWord("abc", "a"), 2) == "ab");
}

TEST_CASE("lasso_equal") {
  CHECK(lasso_equal(LassoWord("ab", "ab"), LassoWord("", "ab")));
  CHECK_FALSE(lasso_equal(LassoWord("", "a"), LassoWord("", "b")));
  CHECK(lasso_equal(LassoWord("b", "ab"), LassoWord("", "ba")));
}

TEST_CASE("normal form laws on random lassos") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto w = oracle::random_lasso(rng, abc, 4, 4);
    const auto n = normalize(w);
    CHECK(normalize(n) == n);
    const std::size_t bound = 3 * (w.prefix.size() + w.period.size());
    for (std::size_t k = 0; k <= bound; ++k) REQUIRE(unroll(w, k) == unroll(n, k));
    CHECK(primitive_root(n.period) == n.period);
    if (!n.prefix.empty()) CHECK(n.prefix.back() != n.period.back());
  }
}

TEST_CASE("lasso_equal agrees with unrolling on random pairs") {
  std::mt19937_64 rng(12);
  std::size_t equal = 0;
  for (int i = 0; i < 5000; ++i) {
    // A small alphabet and short words make equal pairs common.
    const auto x = oracle::random_lasso(rng, ab, 3, 4);
    const auto y = oracle::random_lasso(rng, ab, 3, 4);
    const bool expected = same_by_unrolling(x, y);
    equal += expected;
    REQUIRE(lasso_equal(x, y) == expected);
    REQUIRE(lasso_equal(x, LassoWord(x.prefix + x.period, x.period)));
  }
  CHECK(equal > 50);
}
