#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "posit/automata.hpp"

namespace posit {

inline constexpr std::size_t kDefaultMonoidCap = 100000;

/// Behaviour of a nonempty finite word: the state it leads to and the least
/// priority it sees, from every state.  `witness` is a shortest word with
/// that behaviour.
struct MonoidElement {
  std::vector<StateId> target;
  std::vector<Priority> min_priority;
  FiniteWord witness;

  bool same_behaviour(const MonoidElement& other) const {
    return target == other.target && min_priority == other.min_priority;
  }
};

MonoidElement letter_element(const Dpa& a, char letter);
/// Behaviour of lhs.witness followed by rhs.witness.
MonoidElement compose(const MonoidElement& lhs, const MonoidElement& rhs);
/// Behaviour of an arbitrary nonempty word (its own witness).
MonoidElement word_element(const Dpa& a, const FiniteWord& v);

/// All behaviours of nonempty words, in shortlex order of their witnesses.
/// Throws MonoidTooLarge beyond `cap` elements.
std::vector<MonoidElement> generate_monoid(const Dpa& a, std::size_t cap = kDefaultMonoidCap);

/// Is witness^omega accepted from p?
bool omega_accept(const Dpa& a, const MonoidElement& m, StateId p);

// Refutations of the three local preference properties.

/// u.w and u'.w' in L, but u.w' and u'.w not.
struct Witness1 {
  FiniteWord u, u_prime;
  LassoWord w, w_prime;
  friend bool operator==(const Witness1&, const Witness1&) = default;
};

/// u.v.w in L, but u.v^omega and u.w not.
struct Witness2 {
  FiniteWord u, v;
  LassoWord w;
  friend bool operator==(const Witness2&, const Witness2&) = default;
};

/// u.(v v')^omega in L, but u.v^omega and u.v'^omega not.
struct Witness3 {
  FiniteWord u, v, v_prime;
  friend bool operator==(const Witness3&, const Witness3&) = default;
};

using Witness = std::variant<Witness1, Witness2, Witness3>;

int property_of(const Witness& w);

/// Checks the membership facts a witness claims, using `member` only.
bool self_certifies(const Dpa& a, const Witness& w);

struct PropertyReport {
  bool passed = true;
  std::optional<Witness> witness;
};

PropertyReport check_property1(const Dpa& a);
PropertyReport check_property2(const Dpa& a, std::size_t cap = kDefaultMonoidCap);
PropertyReport check_property3(const Dpa& a, std::size_t cap = kDefaultMonoidCap);

struct PositionalityVerdict {
  bool positional = true;
  int failed_property = 0;  // 0 when positional
  std::optional<Witness> witness;
};

/// Runs the three checks in order and reports the first failure.
PositionalityVerdict check_positional(const Dpa& a, std::size_t cap = kDefaultMonoidCap);

// The residual preorder: w <= w' iff u.w in L implies u.w' in L for all u.

enum class Relation { LeftLeq, RightLeq, Equivalent, Incomparable };

std::string to_string(Relation r);

struct Comparison {
  Relation relation = Relation::Equivalent;
  /// For Incomparable: u.w in L, u.w' not; u'.w' in L, u'.w not.
  FiniteWord u, u_prime;

  /// w <= w' holds.
  bool left_leq() const {
    return relation == Relation::LeftLeq || relation == Relation::Equivalent;
  }
  bool right_leq() const {
    return relation == Relation::RightLeq || relation == Relation::Equivalent;
  }
};

Comparison compare_lassos(const Dpa& a, const LassoWord& w, const LassoWord& w_prime);

struct OrderLemmaReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::vector<std::string> details;  // one line per violation
};

/// Samples the order laws that hold for languages passing check_positional.
/// Throws PreconditionViolated when the language fails the check.
OrderLemmaReport verify_order_lemma(const Dpa& a, std::size_t samples, std::uint64_t seed,
                                    std::size_t cap = kDefaultMonoidCap);

}  // namespace posit
