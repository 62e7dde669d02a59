#pragma once

#include "cnlat/lattice.hpp"
#include "cnlat/matroid.hpp"
#include "cnlat/nbb.hpp"

#include <cstdint>
#include <vector>

namespace cnlat {

struct BasisFamily {
  int n = 0;
  std::vector<SignedSet> bases;
};

// Equinumerous admissible members with a unique Gale maximum under every
// admissible order.
CheckResult is_symplectic(const BasisFamily& B);

// Every element of J appears in some basis.
bool is_loop_free(const BasisFamily& B);

// Independence-axiom characterization over J: every transversal restriction
// is an ordinary matroid, plus the two-case augmentation axiom.  Members must
// be admissible and the family downward-closed (InputError otherwise).
CheckResult chow_check(const IndependenceSets& I, int n);

// How a bounded-below subset is required to spread over atoms: one element
// per atom (the adopted reading), or meeting every atom of the lattice.
enum class DisjointConvention { DistinctAtoms, Literal };

// Ground-level bounded-below independence over the members of an
// intersection-closed bounded family; works on restricted ground sets too.
IndependenceSets ground_nbb_family(const SetLattice& L, NbbStrategy strategy,
                                   DisjointConvention conv);

IndependenceSets ground_independents(
    const SetLattice& L, NbbStrategy strategy = NbbStrategy::Fast,
    DisjointConvention conv = DisjointConvention::DistinctAtoms);

IndependenceSets admissible_independents(const SetLattice& L,
                                         NbbStrategy strategy = NbbStrategy::Fast);

// Maximal admissible independents; rejects the lattice of all admissible
// sets, whose basis family coincides with that of the size-capped lattice.
BasisFamily lattice_to_symplectic(const SetLattice& L);

// Adds I ∪ {a*} for a ∈ I whenever the union meets one more parallel class
// than I has elements and stays within the rank bound.
IndependenceSets nonadmissible_extension(const IndependenceSets& I_ad, int rank_L);

struct SymplecticRank {
  int n = 0;
  int d = 0;
  std::uint64_t universe = 0;
  std::vector<int> r;

  int rank(std::uint64_t m) const { return r[m]; }
};

SymplecticRank symplectic_rank(const IndependenceSets& I, int d);
SymplecticRank symplectic_rank(const IndependenceSets& I);

// Case-split form, valid when every admissible dependent set has size >= 3.
SymplecticRank symplectic_rank_simple(const IndependenceSets& I, int d);
bool family_is_simple(const IndependenceSets& I);

struct RankAxioms {
  bool ok = true;
  std::vector<CheckResult> violations;

  bool has(const std::string& axiom) const;
};

// normalization, unit increase, submodularity, loop-freeness; the first
// witness per axiom is recorded.
RankAxioms rank_axioms(const SymplecticRank& R);
bool is_ranked_symplectic(const IndependenceSets& I, int d);

// Admissible flats of the induced rank function, plus J.
SetLattice symplectic_to_lattice(const IndependenceSets& I, int d);

// Flats of the matroid generated by ground_independents, as subsets of J.
std::vector<SignedSet> ground_flat_lattice(const SetLattice& L);

struct AdmissibleRankAgreement {
  bool ok = true;
  SignedSet witness;
  int matroid_rank = 0;
  int induced_rank = 0;
  BasisFamily bases;
};

// Does the matroid's own rank function coincide with the rank induced by its
// admissible independents?  Also collects the admissible bases.
AdmissibleRankAgreement admissible_rank_agreement(const IndependenceSets& M, int n);

}  // namespace cnlat
