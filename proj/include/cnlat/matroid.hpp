#pragma once

#include "cnlat/lattice.hpp"

#include <cstdint>
#include <vector>

namespace cnlat {

// Families are stored as dense indicators over all 2^ground_size masks.
inline constexpr int kMaxGround = 20;

// Downward-closed set family over ground codes 0..ground_size-1, stored as an
// indicator over all 2^ground_size masks; only codes inside universe may
// appear in members.
struct IndependenceSets {
  int ground_size = 0;
  std::uint64_t universe = 0;
  std::vector<char> indep;

  bool is_independent(std::uint64_t m) const { return indep[m] != 0; }
  std::vector<std::uint64_t> members() const;
  std::vector<std::uint64_t> maximal_members() const;
  int max_size() const;
  bool operator==(const IndependenceSets&) const = default;
};

IndependenceSets empty_family(int ground_size, std::uint64_t universe);

// Family of all subsets of the given generators.
IndependenceSets downward_closure(int ground_size, std::uint64_t universe,
                                  const std::vector<std::uint64_t>& gens);

// Nonempty (contains ∅), downward-closed, and the exchange axiom; the detail
// names the witness sets on failure.
CheckResult check_matroid_axioms(const IndependenceSets& I);

struct RankOracle {
  int ground_size = 0;
  std::uint64_t universe = 0;
  std::vector<int> r;

  int rank(std::uint64_t m) const { return r[m & universe]; }
  std::uint64_t closure(std::uint64_t m) const;
};

// r(S) = size of the largest member contained in S.
RankOracle rank_from_independents(const IndependenceSets& I);

std::vector<std::uint64_t> matroid_flats(const RankOracle& R);
std::vector<std::uint64_t> flats_of_rank(const RankOracle& R, int k);

}  // namespace cnlat
