#pragma once

#include "cnlat/biased_graph.hpp"
#include "cnlat/lattice.hpp"
#include "cnlat/matroid.hpp"
#include "cnlat/symplectic.hpp"

#include <string>
#include <vector>

namespace cnlat {

// {"n": N, "elements": [["1","2*"], "J", ...]}; "J" abbreviates the full
// ground set.  Duplicate elements are rejected by name.
SetLattice parse_lattice_json(const std::string& text);
SetLattice load_lattice(const std::string& path);
std::string lattice_json(const SetLattice& L);

struct LoadedFamily {
  int n = 0;
  IndependenceSets family;
  bool closure_added = false;  // input was not downward closed
};

// {"n": N, "independents": [[...], ...]}; closed downward on load.
LoadedFamily parse_family_json(const std::string& text);
LoadedFamily load_family(const std::string& path);
std::string family_json(const IndependenceSets& F, int n);

// {"n": N, "bases": [[...], ...]}
BasisFamily parse_bases_json(const std::string& text);
BasisFamily load_bases(const std::string& path);
std::string bases_json(const BasisFamily& B);

// {"n": N, "balanced": [[...], ...]}
SpikeGraph parse_spike_json(const std::string& text);
SpikeGraph load_spike(const std::string& path);

// {"ground": [...], "independents"/"bases": [[...], ...]}
std::string matroid_json(const IndependenceSets& F, int n, bool as_bases);

// Atom orderings travel as arrays of element-name arrays.
std::string atom_order_json(const SetLattice& L, const std::vector<int>& order);
std::vector<int> parse_atom_order_json(const SetLattice& L,
                                       const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace cnlat
