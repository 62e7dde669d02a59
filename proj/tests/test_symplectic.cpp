#include "cnlat/symplectic.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "cnlat/fixtures.hpp"
#include "doctest.h"

using namespace cnlat;

namespace {

std::set<std::uint64_t> member_bits(const IndependenceSets& I) {
  const auto v = I.members();
  return {v.begin(), v.end()};
}

std::set<std::uint64_t> basis_bits(const BasisFamily& B) {
  std::set<std::uint64_t> out;
  for (const SignedSet& b : B.bases) out.insert(b.bits);
  return out;
}

IndependenceSets family_over_j(int n, const std::vector<SignedSet>& gens) {
  std::vector<std::uint64_t> masks;
  for (const SignedSet& g : gens) masks.push_back(g.bits);
  return downward_closure(2 * n, SignedSet::full(n).bits, masks);
}

}  // namespace

TEST_CASE("basis families need a unique dominant member per order") {
  BasisFamily good{2, {parse_set(2, {"1", "2"}), parse_set(2, {"1*", "2*"})}};
  CHECK(is_symplectic(good).ok);

  BasisFamily skew{2, {parse_set(2, {"1", "2"}), parse_set(2, {"1*", "2"})}};
  CHECK(is_symplectic(skew).ok);

  // For n=2 distinct admissible pairs stay comparable under every
  // admissible order, so a maximum always exists.
  BasisFamily split{2, {parse_set(2, {"1", "2*"}), parse_set(2, {"1*", "2"})}};
  CHECK(is_symplectic(split).ok);

  // Under 1 < 2 < 3 < 3* < 2* < 1* these two sit at positions {1,2,5}
  // and {0,3,4}: incomparable, no maximum.
  BasisFamily fork{3, {parse_set(3, {"2", "3", "1*"}),
                       parse_set(3, {"1", "2*", "3*"})}};
  const CheckResult r = is_symplectic(fork);
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "unique-maximum");

  BasisFamily starred{2, {parse_set(2, {"1", "2"}), parse_set(2, {"1", "1*"})}};
  const CheckResult s = is_symplectic(starred);
  CHECK_FALSE(s.ok);
  CHECK(s.axiom == "admissible");

  BasisFamily uneven{2, {parse_set(2, {"1"}), parse_set(2, {"1", "2"})}};
  CHECK_FALSE(is_symplectic(uneven).ok);
  CHECK(is_symplectic(uneven).axiom == "equinumerous");
}

TEST_CASE("loop-free means every ground element is used") {
  BasisFamily all{2, transversals(2)};
  CHECK(is_loop_free(all));
  BasisFamily two{2, {parse_set(2, {"1", "2"}), parse_set(2, {"1*", "2*"})}};
  CHECK(is_loop_free(two));
  BasisFamily one{2, {parse_set(2, {"1", "2"})}};
  CHECK_FALSE(is_loop_free(one));
}

TEST_CASE("independence axioms over the signed ground set") {
  const IndependenceSets two_bases = family_over_j(
      2, {parse_set(2, {"1", "2"}), parse_set(2, {"1*", "2*"})});
  CHECK(chow_check(two_bases, 2).ok);

  // All admissible sets of size <= 2.
  std::vector<std::uint64_t> pairs;
  for (const SignedSet& t : transversals(2)) pairs.push_back(t.bits);
  pairs.push_back(parse_set(2, {"1", "2"}).bits);
  const IndependenceSets uniform =
      downward_closure(4, SignedSet::full(2).bits, pairs);
  CHECK(chow_check(uniform, 2).ok);

  const IndependenceSets skew = family_over_j(
      2, {parse_set(2, {"1", "2"}), parse_set(2, {"1*", "2"})});
  CHECK(chow_check(skew, 2).ok);
}

TEST_CASE("families that are not downward closed are rejected as input") {
  IndependenceSets holes = empty_family(4, SignedSet::full(2).bits);
  for (const SignedSet& s :
       {SignedSet::empty(2), parse_set(2, {"1"}), parse_set(2, {"2"}),
        parse_set(2, {"1", "2"}), parse_set(2, {"1*", "2"})})
    holes.indep[s.bits] = 1;  // misses {1*} below {1*,2}
  CHECK_THROWS_AS((void)chow_check(holes, 2), InputError);
}

TEST_CASE("augmentation failures carry a witness") {
  IndependenceSets F = family_over_j(
      2, {parse_set(2, {"1", "2"}), parse_set(2, {"1*", "2"})});
  F.indep[parse_set(2, {"2*"}).bits] = 1;
  const CheckResult r = chow_check(F, 2);
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "augmentation");
  CHECK(r.detail.find("2*") != std::string::npos);
}

TEST_CASE("ground independence censuses of the fixtures") {
  const IndependenceSets a = ground_independents(fix_a());
  CHECK(a.members().size() == 15);
  CHECK(a.is_independent(parse_set(2, {"1", "1*"}).bits));
  CHECK(a.is_independent(parse_set(2, {"1", "1*", "2"}).bits));
  CHECK_FALSE(a.is_independent(SignedSet::full(2).bits));

  const IndependenceSets b = ground_independents(fix_b());
  CHECK(member_bits(b) ==
        std::set<std::uint64_t>{0, parse_set(2, {"1"}).bits,
                                parse_set(2, {"2"}).bits,
                                parse_set(2, {"1*"}).bits,
                                parse_set(2, {"2*"}).bits,
                                parse_set(2, {"1", "2"}).bits,
                                parse_set(2, {"1*", "2*"}).bits,
                                parse_set(2, {"1", "1*"}).bits,
                                parse_set(2, {"2", "2*"}).bits});
  CHECK_FALSE(b.is_independent(parse_set(2, {"1", "2*"}).bits));

  const IndependenceSets c = ground_independents(fix_c());
  CHECK(c.members().size() == 11);
  CHECK(c.is_independent(parse_set(2, {"1", "1*"}).bits));
  CHECK_FALSE(c.is_independent(parse_set(2, {"1", "1*", "2"}).bits));
}

TEST_CASE("admissible independents are the admissible slice") {
  const IndependenceSets a = admissible_independents(fix_a());
  CHECK(a.members().size() == 9);
  const IndependenceSets b = admissible_independents(fix_b());
  CHECK(b.members().size() == 7);
  const IndependenceSets c = admissible_independents(fix_c());
  CHECK(c.members().size() == 9);
  for (std::uint64_t m : c.members()) CHECK(SignedSet(2, m).is_admissible());
}

TEST_CASE("fast and oracle ground strategies agree on the fixtures") {
  for (const SetLattice& L : {fix_a(), fix_b(), fix_c()}) {
    CHECK(ground_independents(L, NbbStrategy::Fast) ==
          ground_independents(L, NbbStrategy::Oracle));
    CHECK(ground_nbb_family(L, NbbStrategy::Fast, DisjointConvention::Literal) ==
          ground_nbb_family(L, NbbStrategy::Oracle, DisjointConvention::Literal));
  }
}

TEST_CASE("the disjointness conventions differ on skew lattices") {
  const IndependenceSets adopted = ground_independents(fix_b());
  const IndependenceSets literal =
      ground_nbb_family(fix_b(), NbbStrategy::Fast, DisjointConvention::Literal);
  CHECK(adopted != literal);
}

TEST_CASE("maximal admissible independents form the basis family") {
  const BasisFamily b = lattice_to_symplectic(fix_b());
  CHECK(basis_bits(b) == std::set<std::uint64_t>{parse_set(2, {"1", "2"}).bits,
                                                 parse_set(2, {"1*", "2*"}).bits});
  CHECK(is_symplectic(b).ok);

  const BasisFamily c = lattice_to_symplectic(fix_c());
  std::set<std::uint64_t> want;
  for (const SignedSet& t : transversals(2)) want.insert(t.bits);
  CHECK(basis_bits(c) == want);

  CHECK_THROWS_AS((void)lattice_to_symplectic(fix_a()), InputError);
}

TEST_CASE("the non-admissible extension reconstructs ground independence") {
  CHECK(nonadmissible_extension(admissible_independents(fix_a()), 3) ==
        ground_independents(fix_a()));
  CHECK(nonadmissible_extension(admissible_independents(fix_b()), 2) ==
        ground_independents(fix_b()));
  CHECK(nonadmissible_extension(admissible_independents(fix_c()), 2) ==
        ground_independents(fix_c()));

  const SetLattice two = build_lattice(
      1, {SignedSet::empty(1), SignedSet::full(1)});
  const IndependenceSets adm = admissible_independents(two);
  CHECK(nonadmissible_extension(adm, 1) == adm);
}

TEST_CASE("induced rank on the fixtures") {
  const SymplecticRank rc = symplectic_rank(admissible_independents(fix_c()), 2);
  CHECK(rc.rank(0) == 0);
  CHECK(rc.rank(parse_set(2, {"1"}).bits) == 1);
  CHECK(rc.rank(parse_set(2, {"1", "1*"}).bits) == 2);
  CHECK(rc.rank(SignedSet::full(2).bits) == 2);

  const SymplecticRank rb = symplectic_rank(admissible_independents(fix_b()), 2);
  CHECK(rb.rank(parse_set(2, {"1", "2*"}).bits) == 1);
  CHECK(rb.rank(parse_set(2, {"1", "2"}).bits) == 2);
  CHECK(rb.rank(parse_set(2, {"1", "1*"}).bits) == 2);

  CHECK_THROWS_AS((void)symplectic_rank(admissible_independents(fix_b()), 1),
                  InputError);
}

TEST_CASE("the case-split rank form agrees where it applies") {
  for (const SetLattice& L : {fix_b(), fix_c()}) {
    const IndependenceSets I = admissible_independents(L);
    if (!family_is_simple(I)) continue;
    const SymplecticRank general = symplectic_rank(I, 2);
    const SymplecticRank simple = symplectic_rank_simple(I, 2);
    CHECK(general.r == simple.r);
  }
}

TEST_CASE("rank axioms certify the fixture families") {
  CHECK(is_ranked_symplectic(admissible_independents(fix_b()), 2));
  CHECK(is_ranked_symplectic(admissible_independents(fix_c()), 2));

  // An antipodal pair of transversals is not ranked: the induced rank
  // function fails submodularity.
  const IndependenceSets anti = family_over_j(
      3, {parse_set(3, {"1", "2", "3"}), parse_set(3, {"1*", "2*", "3*"})});
  CHECK_FALSE(is_ranked_symplectic(anti, 3));
  const RankAxioms ax = rank_axioms(symplectic_rank(anti, 3));
  CHECK_FALSE(ax.ok);
  CHECK(ax.has("submodular"));
}

TEST_CASE("admissible flats rebuild the source lattice") {
  const SetLattice b2 =
      symplectic_to_lattice(admissible_independents(fix_b()), 2);
  CHECK(b2.elems == fix_b().elems);
  const SetLattice c2 =
      symplectic_to_lattice(admissible_independents(fix_c()), 2);
  CHECK(c2.elems == fix_c().elems);

  // Rank-1 case: both singletons are bases, so no singleton is a flat.
  const IndependenceSets half =
      downward_closure(2, SignedSet::full(1).bits, {0b01, 0b10});
  const SetLattice tiny = symplectic_to_lattice(half, 1);
  REQUIRE(tiny.size() == 2);
  CHECK(tiny.elems[0] == SignedSet::empty(1));
  CHECK(tiny.elems[1] == SignedSet::full(1));
}

TEST_CASE("ground flats of a skew lattice") {
  const std::vector<SignedSet> flats = ground_flat_lattice(fix_b());
  std::set<std::uint64_t> got;
  for (const SignedSet& f : flats) got.insert(f.bits);
  CHECK(got == std::set<std::uint64_t>{0, parse_set(2, {"1", "2*"}).bits,
                                       parse_set(2, {"1*", "2"}).bits,
                                       SignedSet::full(2).bits});
}

TEST_CASE("matroid rank agreement over admissible independents") {
  std::vector<std::uint64_t> pairs;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) pairs.push_back((1ull << i) | (1ull << j));
  const IndependenceSets u24 = downward_closure(4, 0xF, pairs);
  const AdmissibleRankAgreement agree = admissible_rank_agreement(u24, 2);
  CHECK(agree.ok);
  std::set<std::uint64_t> bases;
  for (const SignedSet& b : agree.bases.bases) bases.insert(b.bits);
  std::set<std::uint64_t> want;
  for (const SignedSet& t : transversals(2)) want.insert(t.bits);
  CHECK(bases == want);

  // A free matroid on one transversal has loops elsewhere; the induced
  // rank sees the starred partners differently.
  const IndependenceSets single =
      downward_closure(4, 0xF, {parse_set(2, {"1", "2"}).bits});
  CHECK_FALSE(admissible_rank_agreement(single, 2).ok);
}
