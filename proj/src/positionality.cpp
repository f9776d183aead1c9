#include "posit/positionality.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "posit/error.hpp"

namespace posit {

MonoidElement letter_element(const Dpa& a, char letter) {
  const std::size_t i = a.alphabet().require(letter);
  MonoidElement m;
  for (StateId q = 0; q < a.num_states(); ++q) {
    m.target.push_back(a.step(q, i).target);
    m.min_priority.push_back(a.step(q, i).priority);
  }
  m.witness = FiniteWord(1, letter);
  return m;
}

MonoidElement compose(const MonoidElement& lhs, const MonoidElement& rhs) {
  MonoidElement m;
  const std::size_t n = lhs.target.size();
  m.target.resize(n);
  m.min_priority.resize(n);
  for (StateId q = 0; q < n; ++q) {
    const StateId mid = lhs.target[q];
    m.target[q] = rhs.target[mid];
    m.min_priority[q] = std::min(lhs.min_priority[q], rhs.min_priority[mid]);
  }
  m.witness = lhs.witness + rhs.witness;
  return m;
}

MonoidElement word_element(const Dpa& a, const FiniteWord& v) {
  if (v.empty()) throw Error(ErrorKind::PreconditionViolated, "monoid elements need a nonempty word");
  MonoidElement m = letter_element(a, v.front());
  for (std::size_t i = 1; i < v.size(); ++i) m = compose(m, letter_element(a, v[i]));
  return m;
}

std::vector<MonoidElement> generate_monoid(const Dpa& a, std::size_t cap) {
  std::vector<MonoidElement> letters;
  for (char c : a.alphabet().letters()) letters.push_back(letter_element(a, c));

  std::vector<MonoidElement> elements;
  std::set<std::pair<std::vector<StateId>, std::vector<Priority>>> seen;
  auto add = [&](MonoidElement m) {
    if (!seen.emplace(m.target, m.min_priority).second) return;
    if (elements.size() >= cap)
      throw Error(ErrorKind::MonoidTooLarge,
                  "transition monoid exceeds " + std::to_string(cap) + " elements");
    elements.push_back(std::move(m));
  };

  for (const auto& l : letters) add(l);
  // Breadth-first over witness length: extending in queue order keeps the
  // shortlex-least witness for every behaviour.
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& l : letters) add(compose(elements[next], l));
  }
  return elements;
}

bool omega_accept(const Dpa& a, const MonoidElement& m, StateId p) {
  std::vector<std::ptrdiff_t> seen(a.num_states(), -1);
  std::vector<StateId> order;
  StateId cur = p;
  while (seen[cur] < 0) {
    seen[cur] = static_cast<std::ptrdiff_t>(order.size());
    order.push_back(cur);
    cur = m.target[cur];
  }
  Priority least = m.min_priority[cur];
  for (std::size_t i = static_cast<std::size_t>(seen[cur]); i < order.size(); ++i)
    least = std::min(least, m.min_priority[order[i]]);
  return least % 2 == 0;
}

int property_of(const Witness& w) { return static_cast<int>(w.index()) + 1; }

bool self_certifies(const Dpa& a, const Witness& witness) {
  struct Visitor {
    const Dpa& a;
    bool operator()(const Witness1& w) const {
      return member(a, prepend(w.u, w.w)) && member(a, prepend(w.u_prime, w.w_prime)) &&
             !member(a, prepend(w.u, w.w_prime)) && !member(a, prepend(w.u_prime, w.w));
    }
    bool operator()(const Witness2& w) const {
      if (w.v.empty()) return false;
      return member(a, prepend(w.u + w.v, w.w)) && !member(a, LassoWord(w.u, w.v)) &&
             !member(a, prepend(w.u, w.w));
    }
    bool operator()(const Witness3& w) const {
      if (w.v.empty() || w.v_prime.empty()) return false;
      return member(a, LassoWord(w.u, w.v + w.v_prime)) && !member(a, LassoWord(w.u, w.v)) &&
             !member(a, LassoWord(w.u, w.v_prime));
    }
  };
  return std::visit(Visitor{a}, witness);
}

namespace {

// Shortest nonempty word reaching each state, when one exists.
std::map<StateId, FiniteWord> nonempty_access(const Dpa& a) {
  std::map<StateId, FiniteWord> access;
  std::deque<std::pair<StateId, FiniteWord>> queue{{a.initial(), FiniteWord{}}};
  while (!queue.empty()) {
    auto [s, word] = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
      const StateId t = a.step(s, i).target;
      if (access.contains(t)) continue;
      access.emplace(t, word + a.alphabet().letter(i));
      queue.emplace_back(t, access.at(t));
    }
  }
  return access;
}

}  // namespace

PropertyReport check_property1(const Dpa& a) {
  // Pairs of states reachable by nonempty words come first: their gadget
  // needs no empty thread.  A transient initial state is paired last.
  const auto plain = reachable_states(a);
  const auto nonempty = nonempty_access(a);
  std::vector<std::pair<StateId, FiniteWord>> recurrent, transient;
  for (const auto& [s, word] : plain) {
    if (auto it = nonempty.find(s); it != nonempty.end())
      recurrent.emplace_back(s, it->second);
    else
      transient.emplace_back(s, word);
  }

  InclusionOracle inclusion(a);
  auto try_pair = [&](const auto& p, const auto& q) -> std::optional<Witness> {
    const auto& p_not_q = inclusion.query(p.first, q.first);
    if (!p_not_q) return std::nullopt;
    const auto& q_not_p = inclusion.query(q.first, p.first);
    if (!q_not_p) return std::nullopt;
    return Witness1{p.second, q.second, *p_not_q, *q_not_p};
  };

  for (std::size_t i = 0; i < recurrent.size(); ++i)
    for (std::size_t j = i + 1; j < recurrent.size(); ++j)
      if (auto w = try_pair(recurrent[i], recurrent[j])) return {false, w};

  std::vector<std::pair<StateId, FiniteWord>> all = recurrent;
  all.insert(all.end(), transient.begin(), transient.end());
  std::sort(all.begin(), all.end());
  for (const auto& t : transient)
    for (const auto& other : all)
      if (other.first != t.first) {
        const bool t_first = t.first < other.first;
        if (auto w = t_first ? try_pair(t, other) : try_pair(other, t)) return {false, w};
      }
  return {};
}

PropertyReport check_property2(const Dpa& a, std::size_t cap) {
  const auto monoid = generate_monoid(a, cap);
  InclusionOracle inclusion(a);
  for (const auto& [p, u] : reachable_states(a)) {
    for (const auto& m : monoid) {
      if (omega_accept(a, m, p)) continue;
      const auto& w = inclusion.query(m.target[p], p);
      if (w) return {false, Witness2{u, m.witness, *w}};
    }
  }
  return {};
}

PropertyReport check_property3(const Dpa& a, std::size_t cap) {
  const auto monoid = generate_monoid(a, cap);
  for (const auto& [p, u] : reachable_states(a)) {
    std::vector<char> accepts;
    for (const auto& m : monoid) accepts.push_back(omega_accept(a, m, p));
    for (std::size_t i = 0; i < monoid.size(); ++i) {
      if (accepts[i]) continue;
      for (std::size_t j = 0; j < monoid.size(); ++j) {
        if (accepts[j]) continue;
        if (omega_accept(a, compose(monoid[i], monoid[j]), p))
          return {false, Witness3{u, monoid[i].witness, monoid[j].witness}};
      }
    }
  }
  return {};
}

PositionalityVerdict check_positional(const Dpa& a, std::size_t cap) {
  if (auto r = check_property1(a); !r.passed) return {false, 1, r.witness};
  if (auto r = check_property2(a, cap); !r.passed) return {false, 2, r.witness};
  if (auto r = check_property3(a, cap); !r.passed) return {false, 3, r.witness};
  return {};
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::LeftLeq: return "left_leq";
    case Relation::RightLeq: return "right_leq";
    case Relation::Equivalent: return "equivalent";
    case Relation::Incomparable: return "incomparable";
  }
  return "?";
}

Comparison compare_lassos(const Dpa& a, const LassoWord& w, const LassoWord& w_prime) {
  std::optional<FiniteWord> breaks_left, breaks_right;
  for (const auto& [p, u] : reachable_states(a)) {
    const bool in_w = member_from(a, p, w);
    const bool in_w_prime = member_from(a, p, w_prime);
    if (in_w && !in_w_prime && !breaks_left) breaks_left = u;
    if (in_w_prime && !in_w && !breaks_right) breaks_right = u;
  }
  if (breaks_left && breaks_right) return {Relation::Incomparable, *breaks_left, *breaks_right};
  if (breaks_left) return {Relation::RightLeq, {}, {}};
  if (breaks_right) return {Relation::LeftLeq, {}, {}};
  return {Relation::Equivalent, {}, {}};
}

namespace {

FiniteWord random_word(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t min_len,
                       std::size_t max_len) {
  const std::size_t len = min_len + rng() % (max_len - min_len + 1);
  FiniteWord word;
  for (std::size_t i = 0; i < len; ++i) word.push_back(alphabet.letter(rng() % alphabet.size()));
  return word;
}

}  // namespace

OrderLemmaReport verify_order_lemma(const Dpa& a, std::size_t samples, std::uint64_t seed,
                                    std::size_t cap) {
  if (!check_positional(a, cap).positional)
    throw Error(ErrorKind::PreconditionViolated,
                "order laws are only guaranteed for languages passing the positionality check");

  std::mt19937_64 rng(seed);
  const auto& sigma = a.alphabet();
  OrderLemmaReport report;
  report.samples = samples;
  auto fail = [&](std::size_t draw, const std::string& what) {
    ++report.violations;
    report.details.push_back("draw " + std::to_string(draw) + ": " + what);
  };

  for (std::size_t draw = 0; draw < samples; ++draw) {
    const FiniteWord v = random_word(rng, sigma, 1, 3);
    const FiniteWord v_prime = random_word(rng, sigma, 1, 3);
    const FiniteWord w_prefix = random_word(rng, sigma, 0, 3);
    const LassoWord w(w_prefix, random_word(rng, sigma, 1, 3));
    const FiniteWord x_prefix = random_word(rng, sigma, 0, 3);
    const LassoWord x(x_prefix, random_word(rng, sigma, 1, 3));

    if (compare_lassos(a, w, x).relation == Relation::Incomparable)
      fail(draw, "totality: " + w.to_string() + " and " + x.to_string() + " incomparable");

    const LassoWord vw = prepend(v, w);
    if (!compare_lassos(a, vw, omega_power(v)).left_leq() && !compare_lassos(a, vw, w).left_leq())
      fail(draw, "v=" + v + " w=" + w.to_string() + ": vw above both v^omega and w");

    const LassoWord both = omega_power(v + v_prime);
    if (!compare_lassos(a, both, omega_power(v)).left_leq() &&
        !compare_lassos(a, both, omega_power(v_prime)).left_leq())
      fail(draw, "v=" + v + " v'=" + v_prime + ": (vv')^omega above both");
  }
  return report;
}

}  // namespace posit
