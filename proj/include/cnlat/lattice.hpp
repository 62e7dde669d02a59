#pragma once

#include "cnlat/signed_set.hpp"

#include <string>
#include <vector>

namespace cnlat {

struct CheckResult {
  bool ok = true;
  std::string axiom;
  std::string detail;
};

// A finite family of subsets of a fixed universe, ordered by inclusion.
// build_lattice computes covers, ranks and structural flags; structural
// defects are recorded in the flags and structure_note rather than thrown,
// so checkers can report them as witnesses.
struct SetLattice {
  int n = 0;
  SignedSet ground;
  std::vector<SignedSet> elems;          // sorted by (size, bits), unique
  std::vector<std::string> elem_names;   // optional, parallel to elems
  std::vector<std::string> code_names;   // optional, per ground-element code

  std::vector<std::vector<int>> up;      // covers above each element
  std::vector<std::vector<int>> down;    // covers below each element
  std::vector<int> rank_of;
  std::vector<int> atoms;                // covers of bottom
  int bottom = -1;
  int top = -1;
  bool unique_bounds = false;
  bool lattice_ok = false;               // all pairwise meets/joins exist
  bool graded = false;
  bool atomistic = false;
  bool meets_are_intersections = false;
  std::string structure_note;

  int size() const { return static_cast<int>(elems.size()); }
  int index_of(const SignedSet& s) const;
  bool leq(int a, int b) const { return elems[a].is_subset_of(elems[b]); }
  int meet(int a, int b) const { return meet_tab[a * size() + b]; }
  int join(int a, int b) const { return join_tab[a * size() + b]; }

  // Least element containing the given mask; -1 if none or ambiguous.
  int upper_min(std::uint64_t mask) const;
  // Join of an arbitrary index set (bottom for the empty set); -1 if
  // undefined.
  int join_of(const std::vector<int>& idxs) const;

  int rank(int a) const { return rank_of[a]; }
  std::string name_of(int idx) const;

  std::vector<int> meet_tab, join_tab;
};

SetLattice build_lattice(int n, std::vector<SignedSet> elems);
SetLattice build_lattice(int n, std::vector<SignedSet> elems, SignedSet ground);

// Covering-based geometric lattice test: bottom and the full universe are
// members, the family is intersection-closed, and for every non-top member
// the covers pairwise intersect to it and union to the universe.
CheckResult is_geometric_lattice(const SetLattice& L);

// Structural cross-check: bounded, atomistic, graded lattice whose rank
// function is submodular.
CheckResult geometric_structure_check(const SetLattice& L);

// Signed analogue: bottom and universe are members, every proper member is
// admissible, the family is intersection-closed, and covers of each member A
// pairwise intersect to A and union to J minus A's starred copy.  Members
// covered by the universe itself are exempt from the cover conditions.
CheckResult is_cn_lattice(const SetLattice& L);

// The interval [a, top] with a's elements (and their starred partners)
// removed from every member; coinciding images are merged.
SetLattice interval_restrict(const SetLattice& L, int a_idx);

struct ChainComplex {
  std::vector<int> vertex_elem;           // complex vertex -> lattice index
  std::vector<std::vector<int>> facets;   // maximal chains, sorted vertices
  int dim = -1;
  bool pure = false;
};

// Simplicial complex of chains; with proper_part the bottom and top are
// dropped before chains are collected.
ChainComplex order_complex(const SetLattice& L, bool proper_part);

}  // namespace cnlat
