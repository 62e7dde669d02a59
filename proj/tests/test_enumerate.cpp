#include "cnlat/enumerate.hpp"

#include <algorithm>
#include <set>

#include "cnlat/fixtures.hpp"
#include "cnlat/suite.hpp"
#include "doctest.h"

using namespace cnlat;

TEST_CASE("signed permutations commute with star") {
  CHECK(hyperoctahedral_group(1).size() == 2);
  CHECK(hyperoctahedral_group(2).size() == 8);
  CHECK(hyperoctahedral_group(3).size() == 48);

  for (const SymmetryAction& g : hyperoctahedral_group(2))
    for (std::uint64_t m = 0; m < 16; ++m)
      CHECK(g.apply(SignedSet(2, m).star().bits) ==
            SignedSet(2, g.apply(m)).star().bits);
}

TEST_CASE("canonical forms are orbit invariants") {
  const SetLattice b = fix_b();
  // fix_b maps to itself under star; relabel via 1 <-> 2 swap.
  const SymmetryAction swap{2, {1, 0, 3, 2}};
  std::vector<SignedSet> relabeled;
  for (const SignedSet& e : b.elems) relabeled.emplace_back(2, swap.apply(e.bits));
  CHECK(canonical_family(2, b.elems) == canonical_family(2, relabeled));

  // fix_b and fix_c are genuinely different shapes.
  CHECK(canonical_family(2, fix_b().elems) != canonical_family(2, fix_c().elems));
}

TEST_CASE("rank-one enumeration finds both shapes") {
  const CnEnumeration e = enumerate_cn(1);
  CHECK(e.raw_count == 2);
  CHECK_FALSE(e.truncated);
  REQUIRE(e.lattices.size() == 2);
  std::set<std::size_t> sizes;
  for (const SetLattice& L : e.lattices) {
    CHECK(is_cn_lattice(L).ok);
    sizes.insert(L.elems.size());
  }
  CHECK(sizes == std::set<std::size_t>{2, 4});  // {0,J} and full C_1
}

TEST_CASE("rank-two enumeration up to symmetry") {
  const CnEnumeration e = enumerate_cn(2);
  CHECK_FALSE(e.truncated);
  CHECK(e.raw_count == 9);
  REQUIRE(e.lattices.size() == 5);
  std::set<std::vector<std::uint64_t>> classes;
  for (const SetLattice& L : e.lattices) {
    CHECK(is_cn_lattice(L).ok);
    classes.insert(canonical_family(2, L.elems));
  }
  CHECK(classes.size() == e.lattices.size());

  // The class list contains the fixtures.
  CHECK(classes.count(canonical_family(2, fix_a().elems)) == 1);
  CHECK(classes.count(canonical_family(2, fix_b().elems)) == 1);
  CHECK(classes.count(canonical_family(2, fix_c().elems)) == 1);
}

TEST_CASE("a tight budget reports truncation without crashing") {
  const CnEnumeration e = enumerate_cn(3, 150);
  for (const SetLattice& L : e.lattices) CHECK(is_cn_lattice(L).ok);
  if (!e.truncated) CHECK(e.raw_count >= static_cast<int>(e.lattices.size()));
}

TEST_CASE("basis-family enumeration up to symmetry") {
  const auto rank1 = enumerate_symplectic(1, 1);
  CHECK(rank1.size() == 2);
  for (const BasisFamily& B : rank1) CHECK(is_symplectic(B).ok);

  const auto rank2 = enumerate_symplectic(2, 2);
  std::set<std::set<std::uint64_t>> seen;
  for (const BasisFamily& B : rank2) {
    CHECK(is_symplectic(B).ok);
    std::set<std::uint64_t> bits;
    for (const SignedSet& s : B.bases) bits.insert(s.bits);
    seen.insert(bits);
  }
  std::set<std::uint64_t> all4;
  for (const SignedSet& t : transversals(2)) all4.insert(t.bits);
  bool has_antipodal_pair = false;
  for (const auto& fam : seen)
    if (fam.size() == 2) {
      const SignedSet first(2, *fam.begin());
      if (fam.count(first.star().bits)) has_antipodal_pair = true;
    }
  CHECK(has_antipodal_pair);
  CHECK(seen.count(all4) == 1);

  const auto singles = enumerate_symplectic(2, 1);
  for (const BasisFamily& B : singles) CHECK(B.bases.front().count() == 1);
  CHECK_FALSE(singles.empty());
}

TEST_CASE("the property suite passes on the curated corpora") {
  const SuiteReport fixtures = run_property_suite(SuiteCorpus::Fixtures, 7, 4);
  for (const SuiteItem& e : fixtures.entries) {
    CAPTURE(e.invariant);
    CAPTURE(e.item);
    CAPTURE(e.witness);
    CHECK(e.pass);
  }
  CHECK(fixtures.all_pass());

  const SuiteReport cn2 = run_property_suite(SuiteCorpus::Cn2, 11, 2);
  CHECK(cn2.all_pass());
}

TEST_CASE("the suite reports the seeded defect") {
  const SuiteReport broken = run_property_suite(SuiteCorpus::Broken, 3, 1);
  CHECK_FALSE(broken.all_pass());
  bool saw = false;
  for (const SuiteItem& e : broken.entries)
    if (e.invariant == "200-cn-axioms" && !e.pass) {
      saw = true;
      CHECK(e.witness.find("cover-union") != std::string::npos);
    }
  CHECK(saw);
}

TEST_CASE("suite runs are deterministic across thread counts") {
  const SuiteReport one = run_property_suite(SuiteCorpus::Cn1, 5, 1);
  const SuiteReport four = run_property_suite(SuiteCorpus::Cn1, 5, 4);
  REQUIRE(one.entries.size() == four.entries.size());
  for (std::size_t i = 0; i < one.entries.size(); ++i) {
    CHECK(one.entries[i].invariant == four.entries[i].invariant);
    CHECK(one.entries[i].item == four.entries[i].item);
    CHECK(one.entries[i].pass == four.entries[i].pass);
  }
}
