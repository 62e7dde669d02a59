#pragma once

#include "cnlat/lattice.hpp"

#include <string>
#include <vector>

namespace cnlat {

// n=2: every admissible subset of J together with J itself.
SetLattice fix_a();
// n=2: bottom, the two transversals {1,2*} and {1*,2}, top.
SetLattice fix_b();
// n=2: bottom, the four singletons, top.
SetLattice fix_c();
// Partitions of {1,2,3,4} ordered by reverse refinement; atoms are the seven
// two-block partitions, named per block structure.
SetLattice fix_d();
// fix_d plus the element X above {14/23, 13/24, 12/34}.
SetLattice fix_e();

// All subsets of k unstarred elements.
SetLattice boolean_lattice(int k);
// Partitions of {1,2,3,4} by refinement, encoded as within-block edge sets.
SetLattice partition_lattice_4();

struct NamedLattice {
  std::string name;
  SetLattice lattice;
};

std::vector<NamedLattice> standard_fixtures();
std::vector<NamedLattice> cn_fixtures();

}  // namespace cnlat
