#pragma once

#include "posit/games.hpp"
#include "posit/positionality.hpp"

namespace posit {

struct Gadget {
  Arena arena;
  VertexId start;
};

/// The small game that turns a property violation into a game Eve wins only
/// with memory.  Word labels are expanded into single-letter threads through
/// fresh Adam vertices; omega labels become a prefix thread and a period cycle.
///
///   Witness1: Adam start, threads u and u' into an Eve hub, exits w and w'.
///   Witness2: thread u into an Eve hub with a v-cycle and an exit w.
///   Witness3: thread u into an Eve hub with a v-cycle and a v'-cycle.
///
/// An empty u collapses the start into the hub.  Witness1 needs both threads
/// nonempty (the start must differ from the hub); otherwise InvalidWitness.
Gadget gadget_from_witness(const Witness& witness, const Alphabet& alphabet);

struct Certificate {
  bool won = false;                // start lies in Eve's winning region
  bool positional_win = false;     // some positional strategy wins from start
  bool certified() const { return won && !positional_win; }
};

Certificate certify_gadget(const Dpa& a, const Witness& witness);

inline bool certify_nonpositional(const Dpa& a, const Witness& witness) {
  return certify_gadget(a, witness).certified();
}

}  // namespace posit
