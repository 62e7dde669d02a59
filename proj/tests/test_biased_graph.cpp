#include "cnlat/biased_graph.hpp"

#include <algorithm>
#include <set>

#include "cnlat/fixtures.hpp"
#include "doctest.h"

using namespace cnlat;

namespace {

SpikeGraph skew_spike() {
  return SpikeGraph{2, {parse_set(2, {"1", "2*"}), parse_set(2, {"1*", "2"})}};
}

}  // namespace

TEST_CASE("cycle census: digons plus transversals") {
  const auto cycles = spike_cycles(skew_spike());
  REQUIRE(cycles.size() == 6);  // 2 digons + 4 transversals
  int digons = 0, balanced = 0;
  for (const SpikeCycle& c : cycles) {
    if (c.digon) {
      ++digons;
      CHECK_FALSE(c.balanced);
      CHECK_FALSE(c.edges.is_admissible());
    } else {
      CHECK(c.edges.is_transversal());
    }
    if (c.balanced) ++balanced;
  }
  CHECK(digons == 2);
  CHECK(balanced == 2);

  CHECK(spike_cycles(SpikeGraph{3, {}}).size() == 11);  // 3 + 8
}

TEST_CASE("theta condition forbids balanced cycles one spoke apart") {
  CHECK(theta_check(skew_spike()).ok);
  CHECK(theta_check(SpikeGraph{2, {}}).ok);
  CHECK(theta_check(SpikeGraph{3, {parse_set(3, {"1", "2", "3"})}}).ok);

  const CheckResult near = theta_check(SpikeGraph{
      3, {parse_set(3, {"1", "2", "3"}), parse_set(3, {"1", "2", "3*"})}});
  CHECK_FALSE(near.ok);

  // Balancing every transversal fails: any two differing in one spoke.
  const CheckResult all4 = theta_check(SpikeGraph{2, transversals(2)});
  CHECK_FALSE(all4.ok);
}

TEST_CASE("lift independence census of the skew spike") {
  const IndependenceSets F = lift_independents(skew_spike());
  const auto got = F.members();
  const std::set<std::uint64_t> want{0,
                                     parse_set(2, {"1"}).bits,
                                     parse_set(2, {"2"}).bits,
                                     parse_set(2, {"1*"}).bits,
                                     parse_set(2, {"2*"}).bits,
                                     parse_set(2, {"1", "2"}).bits,
                                     parse_set(2, {"1*", "2*"}).bits,
                                     parse_set(2, {"1", "1*"}).bits,
                                     parse_set(2, {"2", "2*"}).bits};
  CHECK(std::set<std::uint64_t>(got.begin(), got.end()) == want);
  CHECK_FALSE(F.is_independent(parse_set(2, {"1", "2*"}).bits));  // balanced
  CHECK_FALSE(F.is_independent(SignedSet::full(2).bits));  // two digons
  CHECK(check_matroid_axioms(F).ok);

  CHECK_THROWS_AS((void)lift_independents(SpikeGraph{2, transversals(2)}),
                  InputError);
}

TEST_CASE("the skew spike lifts to the skew lattice") {
  const SpikeResult r = spike_to_symplectic(skew_spike());
  CHECK(r.lattice.elems == fix_b().elems);
  std::set<std::uint64_t> bases;
  for (const SignedSet& b : r.bases.bases) bases.insert(b.bits);
  CHECK(bases == std::set<std::uint64_t>{parse_set(2, {"1", "2"}).bits,
                                         parse_set(2, {"1*", "2*"}).bits});
  CHECK(is_symplectic(r.bases).ok);
}

TEST_CASE("an unbalanced spike lifts to the full rank-capped lattice") {
  const SpikeResult r = spike_to_symplectic(SpikeGraph{2, {}});
  CHECK(r.lattice.elems == fix_c().elems);
  CHECK(r.bases.bases.size() == 4);
}

TEST_CASE("one balanced transversal on three spokes") {
  const SpikeGraph g{3, {parse_set(3, {"1", "2", "3"})}};
  const IndependenceSets F = lift_independents(g);
  CHECK(F.max_size() == 3);
  CHECK_FALSE(F.is_independent(parse_set(3, {"1", "2", "3"}).bits));

  const SpikeResult r = spike_to_symplectic(g);
  CHECK(r.lattice.rank(r.lattice.top) == 3);
  CHECK(is_cn_lattice(r.lattice).ok);
  REQUIRE(r.bases.bases.size() == 7);
  for (const SignedSet& b : r.bases.bases) {
    CHECK(b.is_transversal());
    CHECK(b != parse_set(3, {"1", "2", "3"}));
  }
}
