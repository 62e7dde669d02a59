#pragma once

#include "cnlat/lattice.hpp"
#include "cnlat/matroid.hpp"

#include <cstdint>
#include <vector>

namespace cnlat {

// Atom-level searches enumerate subsets (and orders) of the atoms.
inline constexpr int kMaxAtoms = 8;

enum class NbbStrategy { Fast, Oracle };

// Working view of the interval [base, top] of a lattice: its atoms, the mask
// of interval atoms below each element, and memoized joins of atom sets.
struct AtomContext {
  const SetLattice* L = nullptr;
  int base = -1;
  std::vector<int> atom_idx;
  std::vector<std::uint64_t> atoms_below;
  mutable std::vector<int> join_memo;

  int t() const { return static_cast<int>(atom_idx.size()); }
  int join_atoms(std::uint64_t D) const;
  std::string atom_set_text(std::uint64_t D) const;
};

AtomContext atom_context(const SetLattice& L, int base);

// pos maps an atom-list index to its place in the order; lower comes first.
bool is_bounded_below(const AtomContext& ctx, std::uint64_t D,
                      const std::vector<int>& pos);
bool is_nbb(const AtomContext& ctx, std::uint64_t B, const std::vector<int>& pos);

// Atom sets that are NBB under at least one linear order of all atoms.
// Oracle iterates every order; Fast searches only orders placing the
// candidate first (external atoms later can never supply a witness).
IndependenceSets independence_family_atoms(const SetLattice& L,
                                           NbbStrategy strategy = NbbStrategy::Fast);
IndependenceSets independence_family_interval(const SetLattice& L, int base,
                                              NbbStrategy strategy = NbbStrategy::Fast);

struct MatroidHandle {
  IndependenceSets family;
  RankOracle rank;
};

// Validates the independence axioms; throws InputError with the witness on
// failure.
MatroidHandle matroid_from_family(const IndependenceSets& F);

struct InducedGeometric {
  SetLattice lattice;                     // flats, as masks over atom codes
  std::vector<std::uint64_t> image_of;    // source element -> atom mask
};

// Lattice of flats of the matroid generated by the atom independence family;
// each source element embeds as the set of atoms below it.
InducedGeometric induce_geometric(const SetLattice& L);

// True iff every independent atom set I has |I| = rank(∨I).
CheckResult is_geometric_by_independents(const SetLattice& L);

}  // namespace cnlat
