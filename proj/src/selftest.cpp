#include "posit/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "posit/error.hpp"
#include "posit/gadgets.hpp"
#include "posit/io.hpp"
#include "posit/reduction.hpp"

namespace posit {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

bool run_trial(const Dpa& a, const SelftestOptions& options, std::size_t index,
               std::ostringstream& out) {
  const std::uint64_t seed = trial_seed(options.seed, index);
  const std::size_t vertices = 1 + seed % options.max_vertices;
  const Game game(random_arena({vertices, options.max_out_degree, 1.0}, a.alphabet(), seed), a);
  out << "trial " << index + 1 << ": vertices=" << vertices;
  try {
    const auto solved = solve_game(game);
    const auto reduced = reduce_to_positional(game, solved.strategy, solved.initial_states);
    const auto& s = reduced.strategy;

    bool covers = reduced.initial_states.size() == solved.winning_region.size();
    for (VertexId v : solved.winning_region)
      covers = covers && std::any_of(reduced.initial_states.begin(), reduced.initial_states.end(),
                                     [&](MemoryState m) { return s.sigma[m] == v; });
    const bool verified = verify_strategy(game, s, reduced.initial_states);
    const bool shrank = reduced.merges.size() + s.num_states == solved.strategy.num_states;
    const bool ok = s.positional() && covers && verified && shrank;
    out << " region=" << solved.winning_region.size() << " states=" << solved.strategy.num_states
        << "->" << s.num_states << " merges=" << reduced.merges.size()
        << (ok ? " verified" : " FAILED") << '\n';
    return ok;
  } catch (const Error& e) {
    out << " FAILED " << e.what() << '\n';
    return false;
  }
}

}  // namespace

SelftestReport run_selftest(const Dpa& a, const SelftestOptions& options) {
  std::ostringstream out;
  SelftestReport report;
  const auto verdict = check_positional(a, options.monoid_cap);

  if (!verdict.positional) {
    out << "check: not positional (property " << verdict.failed_property << ")\n";
    out << "witness: " << witness_to_json(*verdict.witness).dump() << '\n';
    const bool certified_by_membership = self_certifies(a, *verdict.witness);
    out << "witness membership: " << (certified_by_membership ? "certified" : "FAILED") << '\n';
    bool gadget_ok = false;
    try {
      const auto c = certify_gadget(a, *verdict.witness);
      gadget_ok = c.certified();
      out << "gadget: eve wins=" << (c.won ? "yes" : "no")
          << " positional win=" << (c.positional_win ? "yes" : "no")
          << (gadget_ok ? " certified" : " FAILED") << '\n';
    } catch (const Error& e) {
      out << "gadget: FAILED " << e.what() << '\n';
    }
    report.passed = certified_by_membership && gadget_ok;
  } else {
    out << "check: positional\n";
    std::size_t good = 0;
    for (std::size_t i = 0; i < options.trials; ++i) good += run_trial(a, options, i, out) ? 1 : 0;
    out << "reduced: " << good << "/" << options.trials << '\n';
    const auto order = verify_order_lemma(a, options.order_samples, options.seed, options.monoid_cap);
    out << "order laws: " << order.samples << " samples, " << order.violations << " violations\n";
    for (const auto& d : order.details) out << "  " << d << '\n';
    report.passed = good == options.trials && order.violations == 0;
  }
  out << "result: " << (report.passed ? "PASS" : "FAIL") << '\n';
  report.text = out.str();
  return report;
}

}  // namespace posit
