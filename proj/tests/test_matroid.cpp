#include "cnlat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "doctest.h"

using namespace cnlat;

namespace {

std::set<std::uint64_t> as_set(const std::vector<std::uint64_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("downward closure generates all subsets") {
  const IndependenceSets I = downward_closure(3, 0b111, {0b011, 0b100});
  CHECK(as_set(I.members()) ==
        std::set<std::uint64_t>{0b000, 0b001, 0b010, 0b011, 0b100});
  CHECK(as_set(I.maximal_members()) == std::set<std::uint64_t>{0b011, 0b100});
  CHECK(I.max_size() == 2);
  CHECK(I.is_independent(0b001));
  CHECK_FALSE(I.is_independent(0b101));

  const IndependenceSets none = empty_family(2, 0b11);
  CHECK(none.members().empty());
  CHECK(none.max_size() == 0);
}

TEST_CASE("matroid axioms accept free and uniform families") {
  const IndependenceSets free3 = downward_closure(3, 0b111, {0b111});
  CHECK(check_matroid_axioms(free3).ok);
  CHECK(free3.members().size() == 8);

  // U_{1,2}: two parallel elements.
  const IndependenceSets u12 = downward_closure(2, 0b11, {0b01, 0b10});
  CHECK(check_matroid_axioms(u12).ok);
  CHECK(u12.max_size() == 1);
}

TEST_CASE("matroid axioms reject an exchange failure") {
  const IndependenceSets bad = downward_closure(3, 0b111, {0b011, 0b100});
  const CheckResult r = check_matroid_axioms(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "exchange");

  CHECK_FALSE(check_matroid_axioms(empty_family(2, 0b11)).ok);
}

TEST_CASE("rank is the largest member inside the set") {
  const IndependenceSets u12 = downward_closure(2, 0b11, {0b01, 0b10});
  const RankOracle R = rank_from_independents(u12);
  CHECK(R.rank(0b00) == 0);
  CHECK(R.rank(0b01) == 1);
  CHECK(R.rank(0b11) == 1);
  CHECK(R.closure(0b01) == 0b11);
  CHECK(R.closure(0b00) == 0b00);

  const IndependenceSets free3 = downward_closure(3, 0b111, {0b111});
  const RankOracle F = rank_from_independents(free3);
  for (std::uint64_t m = 0; m < 8; ++m) {
    CHECK(F.rank(m) == static_cast<int>(std::popcount(m)));
    CHECK(F.closure(m) == m);
  }
}

TEST_CASE("flats are closure-stable sets") {
  const IndependenceSets u12 = downward_closure(2, 0b11, {0b01, 0b10});
  const RankOracle R = rank_from_independents(u12);
  CHECK(as_set(matroid_flats(R)) == std::set<std::uint64_t>{0b00, 0b11});
  CHECK(as_set(flats_of_rank(R, 0)) == std::set<std::uint64_t>{0b00});
  CHECK(as_set(flats_of_rank(R, 1)) == std::set<std::uint64_t>{0b11});

  const IndependenceSets free2 = downward_closure(2, 0b11, {0b11});
  const RankOracle F = rank_from_independents(free2);
  CHECK(matroid_flats(F).size() == 4);
}
