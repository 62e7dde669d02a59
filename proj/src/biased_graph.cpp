#include "cnlat/biased_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace cnlat {

namespace {

void validate_spike(const SpikeGraph& G) {
  if (G.n < 2) throw InputError("a spike needs at least two spokes");
  std::vector<SignedSet> seen;
  for (const SignedSet& b : G.balanced) {
    if (b.n != G.n || !b.is_transversal())
      throw InputError("balanced cycle " + b.to_string() +
                       " is not a transversal");
    if (std::find(seen.begin(), seen.end(), b) != seen.end())
      throw InputError("balanced cycle " + b.to_string() + " listed twice");
    seen.push_back(b);
  }
}

bool is_balanced(const SpikeGraph& G, const SignedSet& t) {
  return std::find(G.balanced.begin(), G.balanced.end(), t) !=
         G.balanced.end();
}

}  // namespace

std::vector<SpikeCycle> spike_cycles(const SpikeGraph& G) {
  validate_spike(G);
  std::vector<SpikeCycle> out;
  for (int i = 0; i < G.n; ++i) {
    SignedSet digon{G.n, (1ull << i) | (1ull << (i + G.n))};
    out.push_back({digon, true, false});
  }
  for (const SignedSet& t : transversals(G.n))
    out.push_back({t, false, is_balanced(G, t)});
  return out;
}

CheckResult theta_check(const SpikeGraph& G) {
  validate_spike(G);
  for (std::size_t i = 0; i < G.balanced.size(); ++i)
    for (std::size_t j = i + 1; j < G.balanced.size(); ++j) {
      const std::uint64_t diff = G.balanced[i].bits ^ G.balanced[j].bits;
      if (std::popcount(diff) == 2) {
        const int spoke = std::countr_zero(diff);
        return {false, "theta",
                "balanced cycles " + G.balanced[i].to_string() + " and " +
                    G.balanced[j].to_string() +
                    " complete a theta through the unbalanced digon " +
                    SignedSet{G.n, diff}.to_string() + " at spoke " +
                    std::to_string(spoke % G.n + 1)};
      }
    }
  return {};
}

IndependenceSets lift_independents(const SpikeGraph& G) {
  CheckResult t = theta_check(G);
  if (!t.ok) throw InputError("balanced cycles are not theta-closed: " + t.detail);

  const std::vector<SpikeCycle> cycles = spike_cycles(G);
  const int g = 2 * G.n;
  IndependenceSets F;
  F.ground_size = g;
  F.universe = (1ull << g) - 1;
  F.indep.assign(std::size_t{1} << g, 0);
  for (std::uint64_t m = 0; m < (1ull << g); ++m) {
    int contained = 0;
    bool bad = false;
    for (const SpikeCycle& c : cycles) {
      if ((c.edges.bits & ~m) != 0) continue;
      if (c.balanced || ++contained > 1) {
        bad = true;
        break;
      }
    }
    F.indep[m] = !bad;
  }
  return F;
}

SpikeResult spike_to_symplectic(const SpikeGraph& G) {
  IndependenceSets I = lift_independents(G);
  AdmissibleRankAgreement agree = admissible_rank_agreement(I, G.n);
  if (!agree.ok)
    throw InputError(
        "lift rank disagrees with the rank induced by its admissible "
        "independents at " +
        agree.witness.to_string() + " (" +
        std::to_string(agree.matroid_rank) + " vs " +
        std::to_string(agree.induced_rank) + ")");

  RankOracle M = rank_from_independents(I);
  std::vector<SignedSet> elems;
  for (std::uint64_t f : matroid_flats(M)) {
    SignedSet s{G.n, f};
    if (s.is_admissible()) elems.push_back(s);
  }
  SignedSet full = SignedSet::full(G.n);
  if (std::find(elems.begin(), elems.end(), full) == elems.end())
    elems.push_back(full);

  SpikeResult out{build_lattice(G.n, elems), agree.bases};
  return out;
}

}  // namespace cnlat
