#pragma once

#include "cnlat/lattice.hpp"
#include "cnlat/matroid.hpp"
#include "cnlat/symplectic.hpp"

#include <vector>

namespace cnlat {

// Edges are the 2n codes of J; the cycles are the n digons {i, i*} and the
// 2^n transversals, of which the listed transversals are balanced.
struct SpikeGraph {
  int n = 0;
  std::vector<SignedSet> balanced;
};

struct SpikeCycle {
  SignedSet edges;
  bool digon = false;
  bool balanced = false;
};

std::vector<SpikeCycle> spike_cycles(const SpikeGraph& G);

// No two balanced cycles may differ in exactly one spoke: the digon there
// would complete a theta with two balanced and one unbalanced cycle.
CheckResult theta_check(const SpikeGraph& G);

// Edge sets containing no balanced cycle and at most one cycle overall.
IndependenceSets lift_independents(const SpikeGraph& G);

struct SpikeResult {
  SetLattice lattice;
  BasisFamily bases;
};

SpikeResult spike_to_symplectic(const SpikeGraph& G);

}  // namespace cnlat
