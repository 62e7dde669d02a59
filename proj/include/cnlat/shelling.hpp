#pragma once

#include "cnlat/lattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cnlat {

// order: permutation of facet indices.  Each facet after the first must meet
// the union of its predecessors in a pure codimension-1 set of faces.
CheckResult is_shelling(const ChainComplex& K, const std::vector<int>& order);

// Backtracking search for some shelling order; caps at 63 facets.
bool brute_force_shellable(const ChainComplex& K,
                           std::vector<int>* order_out = nullptr);

// Existential search for recursive atom orderings of upper intervals, with
// an exact constraint on the set of atoms placed first.  Memoized per
// (interval base, required prefix set).
class RaoSearch {
 public:
  explicit RaoSearch(const SetLattice& L) : L_(&L) {}

  bool exists(int base, const std::vector<int>& required_first);
  std::optional<std::vector<int>> order(int base,
                                        const std::vector<int>& required_first);

 private:
  std::optional<std::vector<int>> search(int base, std::uint64_t prefix_mask);

  const SetLattice* L_;
  std::map<std::pair<int, std::uint64_t>, std::optional<std::vector<int>>> memo_;
};

// order: the atoms of L as element indices, each exactly once.
CheckResult is_recursive_atom_ordering(const SetLattice& L,
                                       const std::vector<int>& order);

// An atom order whose first rank-1 atoms form an admissible independent set
// and in which no atom immediately follows its star partner; the adjacency
// constraint is dropped when provably unsatisfiable.
std::vector<int> admissible_atom_ordering(const SetLattice& L);

// Does some star-pairing of the atoms make the non-maximal join-independent
// sets coincide with the non-maximal admissible independent sets?
bool cn_criterion_independents(const SetLattice& L);

// Does some star-pairing make every star-separated extension of every
// maximal-minus-one admissible independent set a recursive atom ordering?
bool cn_criterion_orderings(const SetLattice& L);

// For every join-independent atom set and every anchor a_i in it, the joins
// of the others with a_i must form a join-independent set of [a_i, 1̂].
CheckResult interval_join_independents_check(const SetLattice& L);

// Does some star-pairing of the atoms relabel L into a signed-set lattice?
bool cn_isomorphic_by_pairing(const SetLattice& L);

// Maximal chains (as element-index paths from bottom to top) in the
// lexicographic order induced by a recursive atom ordering.
std::vector<std::vector<int>> lex_maximal_chains(const SetLattice& L,
                                                 const std::vector<int>& top_order);
std::vector<std::vector<int>> lex_maximal_chains(const SetLattice& L);

}  // namespace cnlat
