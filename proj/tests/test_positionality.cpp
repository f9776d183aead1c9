#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "posit/error.hpp"
#include "posit/positionality.hpp"
#include "oracles.hpp"

using namespace posit;
using oracle::fixture;

namespace {

// The membership facts a witness claims, judged by the defining condition of
// the fixture rather than by the automaton.
bool certified_by_condition(const std::string& name, const Witness& witness) {
  const auto in = oracle::condition(name);
  if (const auto* w = std::get_if<Witness1>(&witness))
    return in(prepend(w->u, w->w)) && in(prepend(w->u_prime, w->w_prime)) &&
           !in(prepend(w->u, w->w_prime)) && !in(prepend(w->u_prime, w->w));
  if (const auto* w = std::get_if<Witness2>(&witness))
    return !w->v.empty() && in(prepend(w->u + w->v, w->w)) &&
           !in(LassoWord(w->u, w->v)) && !in(prepend(w->u, w->w));
  const auto& w = std::get<Witness3>(witness);
  return !w.v.empty() && !w.v_prime.empty() && in(LassoWord(w.u, w.v + w.v_prime)) &&
         !in(LassoWord(w.u, w.v)) && !in(LassoWord(w.u, w.v_prime));
}

// w <= w' judged on every prefix of length <= 3; for the fixtures these
// reach every reachable state.
bool leq_by_prefixes(const std::string& name, const Dpa& a, const LassoWord& w,
                     const LassoWord& w_prime) {
  const auto in = oracle::condition(name);
  for (const auto& u : oracle::words(a.alphabet(), 0, 3))
    if (in(prepend(u, w)) && !in(prepend(u, w_prime))) return false;
  return true;
}

}  // namespace

TEST_CASE("monoid of BUCHI_A") {
  const auto m = generate_monoid(fixture("buchi_a"));
  REQUIRE(m.size() == 2);
  CHECK(m[0].witness == "a");
  CHECK(m[0].target == std::vector<StateId>{0});
  CHECK(m[0].min_priority == std::vector<Priority>{0});
  CHECK(m[1].witness == "b");
  CHECK(m[1].target == std::vector<StateId>{0});
  CHECK(m[1].min_priority == std::vector<Priority>{1});
}

TEST_CASE("monoid size of ONEA") {
  // Frozen from oracle::monoid: a-words and b-words behave alike.
  const auto onea = fixture("onea");
  CHECK(oracle::monoid(onea).size() == 2);
  CHECK(generate_monoid(onea).size() == 2);
}

TEST_CASE("composition matches concatenation") {
  std::mt19937_64 rng(31);
  for (const auto& name : oracle::all_fixtures()) {
    const auto a = fixture(name);
    for (int i = 0; i < 200; ++i) {
      const auto x = oracle::random_word(rng, a.alphabet(), 1, 4);
      const auto y = oracle::random_word(rng, a.alphabet(), 1, 4);
      CHECK(compose(word_element(a, x), word_element(a, y)).same_behaviour(word_element(a, x + y)));
    }
    for (char x : a.alphabet().letters())
      for (char y : a.alphabet().letters())
        CHECK(compose(letter_element(a, x), letter_element(a, y))
                  .same_behaviour(word_element(a, std::string{x, y})));
  }
}

TEST_CASE("monoids agree with word enumeration") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto a = fixture(name);
    const auto expected = oracle::monoid(a);
    const auto m = generate_monoid(a);
    REQUIRE(m.size() == expected.size());
    for (const auto& e : m) {
      const oracle::Behaviour b{e.target, e.min_priority};
      CHECK(b == oracle::behaviour(a, e.witness));
      REQUIRE(expected.count(b) == 1);
      // Shortlex-least witness.
      CHECK(expected.at(b) == e.witness);
      for (StateId q = 0; q < a.num_states(); ++q) {
        const auto r = run_finite(a, q, e.witness);
        CHECK(r.state == e.target[q]);
        CHECK(r.min_priority == e.min_priority[q]);
      }
    }
  }
}

TEST_CASE("monoid cap") {
  const auto ex3 = fixture("ex3");
  CHECK_THROWS_AS(generate_monoid(ex3, 1), Error);
  try {
    generate_monoid(ex3, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MonoidTooLarge);
  }
  CHECK(generate_monoid(ex3, oracle::monoid(ex3).size()).size() == oracle::monoid(ex3).size());
}

TEST_CASE("omega_accept") {
  const auto buchi = fixture("buchi_a");
  CHECK(omega_accept(buchi, word_element(buchi, "a"), 0));
  const auto infab = fixture("infab");
  CHECK(omega_accept(infab, word_element(infab, "ab"), 0));
  CHECK_FALSE(omega_accept(infab, word_element(infab, "a"), 0));
  const auto onea = fixture("onea");
  CHECK_FALSE(omega_accept(onea, word_element(onea, "a"), 0));

  for (const auto& name : oracle::all_fixtures()) {
    const auto a = fixture(name);
    for (const auto& m : generate_monoid(a))
      for (StateId p = 0; p < a.num_states(); ++p)
        CHECK(omega_accept(a, m, p) == oracle::simulate(a, p, omega_power(m.witness)));
  }
}

TEST_CASE("property examples") {
  const auto res = check_property1(fixture("res"));
  REQUIRE_FALSE(res.passed);
  CHECK(std::get<Witness1>(*res.witness) ==
        Witness1{"a", "b", LassoWord("", "b"), LassoWord("", "c")});
  CHECK(check_property1(fixture("w2")).passed);
  CHECK(check_property1(fixture("buchi_a")).passed);

  const auto onea = check_property2(fixture("onea"));
  REQUIRE_FALSE(onea.passed);
  CHECK(std::get<Witness2>(*onea.witness) == Witness2{"", "a", LassoWord("", "b")});
  CHECK(check_property2(fixture("fin_a")).passed);
  CHECK(check_property2(fixture("buchi_a")).passed);

  const auto infab = check_property3(fixture("infab"));
  REQUIRE_FALSE(infab.passed);
  CHECK(std::get<Witness3>(*infab.witness) == Witness3{"", "a", "b"});
  const auto w2 = check_property3(fixture("w2"));
  REQUIRE_FALSE(w2.passed);
  CHECK(std::get<Witness3>(*w2.witness) == Witness3{"", "ab", "ac"});
  CHECK(check_property3(fixture("rabin")).passed);
}

TEST_CASE("verdicts on the fixtures") {
  const std::map<std::string, int> failing{{"onea", 2}, {"infab", 3}, {"w2", 3}, {"res", 1}};
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto a = fixture(name);
    const auto v = check_positional(a);
    if (failing.count(name)) {
      CHECK_FALSE(v.positional);
      CHECK(v.failed_property == failing.at(name));
      REQUIRE(v.witness.has_value());
      CHECK(property_of(*v.witness) == v.failed_property);
      CHECK(self_certifies(a, *v.witness));
      CHECK(certified_by_condition(name, *v.witness));
    } else {
      CHECK(v.positional);
      CHECK(v.failed_property == 0);
      CHECK_FALSE(v.witness.has_value());
    }
  }
}

TEST_CASE("every failing report certifies") {
  for (const auto& name : oracle::all_fixtures()) {
    const auto a = fixture(name);
    for (const auto& report : {check_property1(a), check_property2(a), check_property3(a)}) {
      CHECK(report.passed != report.witness.has_value());
      if (report.witness) {
        CAPTURE(name);
        CHECK(self_certifies(a, *report.witness));
        CHECK(certified_by_condition(name, *report.witness));
      }
    }
  }
}

TEST_CASE("self_certifies rejects a wrong witness") {
  const auto infab = fixture("infab");
  CHECK_FALSE(self_certifies(infab, Witness3{"", "a", "ab"}));
  CHECK_FALSE(self_certifies(infab, Witness2{"", "a", LassoWord("", "b")}));
  CHECK_FALSE(self_certifies(fixture("res"), Witness1{"a", "a", LassoWord("", "b"), LassoWord("", "c")}));
}

TEST_CASE("property checks agree with brute force") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto a = fixture(name);
    const oracle::BruteForce brute(a);
    CHECK(check_property1(a).passed == brute.property1());
    CHECK(check_property2(a).passed == brute.property2());
    CHECK(check_property3(a).passed == brute.property3());
  }
}

TEST_CASE("compare_lassos examples") {
  const auto buchi = fixture("buchi_a");
  const auto c = compare_lassos(buchi, LassoWord("", "b"), LassoWord("", "a"));
  CHECK(c.relation == Relation::LeftLeq);
  CHECK(c.left_leq());
  CHECK_FALSE(c.right_leq());

  const auto res = compare_lassos(fixture("res"), LassoWord("", "b"), LassoWord("", "c"));
  CHECK(res.relation == Relation::Incomparable);
  CHECK(res.u == "a");
  CHECK(res.u_prime == "b");
  CHECK(to_string(Relation::Incomparable) == "incomparable");
}

TEST_CASE("compare_lassos agrees with prefix enumeration") {
  std::mt19937_64 rng(32);
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    const auto a = fixture(name);
    const auto in = oracle::condition(name);
    for (int i = 0; i < 300; ++i) {
      const auto w = oracle::random_lasso(rng, a.alphabet(), 2, 3);
      const auto x = oracle::random_lasso(rng, a.alphabet(), 2, 3);
      CHECK(compare_lassos(a, w, w).relation == Relation::Equivalent);
      const auto c = compare_lassos(a, w, x);
      CHECK(c.left_leq() == leq_by_prefixes(name, a, w, x));
      CHECK(c.right_leq() == leq_by_prefixes(name, a, x, w));
      if (c.relation == Relation::Incomparable) {
        CHECK(in(prepend(c.u, w)));
        CHECK_FALSE(in(prepend(c.u, x)));
        CHECK(in(prepend(c.u_prime, x)));
        CHECK_FALSE(in(prepend(c.u_prime, w)));
      }
    }
  }
}

TEST_CASE("order laws on positional fixtures") {
  for (const auto& name : oracle::positional_fixtures()) {
    CAPTURE(name);
    const auto report = verify_order_lemma(fixture(name), 500, 0);
    CHECK(report.samples == 500);
    CHECK(report.violations == 0);
    CHECK(report.details.empty());
  }
  try {
    verify_order_lemma(fixture("infab"), 10, 0);
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }
}
