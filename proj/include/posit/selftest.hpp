#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "posit/automata.hpp"
#include "posit/positionality.hpp"

namespace posit {

struct SelftestOptions {
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::size_t max_vertices = 5;
  std::size_t max_out_degree = 3;
  std::size_t order_samples = 500;
  std::size_t monoid_cap = kDefaultMonoidCap;
};

struct SelftestReport {
  bool passed = false;
  std::string text;  // deterministic for fixed inputs
};

/// Non-positional languages: build and certify the gadget of the reported
/// witness.  Positional ones: solve, reduce and re-verify random Eve-only
/// arenas, then sample the order laws.  Throws MonoidTooLarge.
SelftestReport run_selftest(const Dpa& a, const SelftestOptions& options);

/// Seed of trial `index`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

}  // namespace posit
