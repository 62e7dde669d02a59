#pragma once

#include "cnlat/lattice.hpp"
#include "cnlat/symplectic.hpp"

#include <cstdint>
#include <vector>

namespace cnlat {

// A signed permutation of [n] acting on the codes of J; commutes with star.
struct SymmetryAction {
  int n = 0;
  std::vector<int> image;

  std::uint64_t apply(std::uint64_t bits) const;
};

std::vector<SymmetryAction> hyperoctahedral_group(int n);

// Lexicographically least sorted mask vector over the group orbit.
std::vector<std::uint64_t> canonical_family(int n,
                                            const std::vector<SignedSet>& elems);

struct CnEnumeration {
  std::vector<SetLattice> lattices;
  int raw_count = 0;
  bool truncated = false;
};

// All signed-set lattices for this n up to signed-permutation symmetry;
// n = 3 is searched depth-first and may stop early on the time budget.
CnEnumeration enumerate_cn(int n, int budget_ms = 0);

// All symplectic basis families of rank k up to symmetry.
std::vector<BasisFamily> enumerate_symplectic(int n, int k);

}  // namespace cnlat
