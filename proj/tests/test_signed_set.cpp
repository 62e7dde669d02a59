#include "cnlat/signed_set.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace cnlat;

TEST_CASE("element names round-trip through parsing") {
  for (int n = 1; n <= 4; ++n)
    for (int c = 0; c < 2 * n; ++c)
      CHECK(parse_element(element_name(c, n), n) == c);
  CHECK(element_name(0, 2) == "1");
  CHECK(element_name(3, 2) == "2*");
  CHECK_THROWS_AS(parse_element("2", 1), InputError);
  CHECK_THROWS_AS(parse_element("0", 2), InputError);
  CHECK_THROWS_AS(parse_element("1**", 2), InputError);
  CHECK_THROWS_AS((void)parse_set(1, {"2"}), InputError);
}

TEST_CASE("star is an involution and swaps the halves") {
  CHECK(star_code(0, 2) == 2);
  CHECK(star_code(2, 2) == 0);
  for (int n = 1; n <= 3; ++n)
    for (int c = 0; c < 2 * n; ++c)
      CHECK(star_code(star_code(c, n), n) == c);

  const SignedSet s = parse_set(2, {"1", "2*"});
  CHECK(s.star() == parse_set(2, {"1*", "2"}));
  CHECK(s.star().star() == s);
  CHECK(SignedSet::empty(3).star() == SignedSet::empty(3));
  CHECK(SignedSet::full(3).star() == SignedSet::full(3));
}

TEST_CASE("admissibility means no starred pair") {
  CHECK(parse_set(2, {"1", "2*"}).is_admissible());
  CHECK_FALSE(parse_set(2, {"1", "1*"}).is_admissible());
  CHECK(SignedSet::empty(2).is_admissible());
  CHECK_FALSE(SignedSet::full(2).is_admissible());
  int admissible = 0;
  for (std::uint64_t m = 0; m < 16; ++m)
    if (SignedSet(2, m).is_admissible()) ++admissible;
  CHECK(admissible == 9);  // 3^2
}

TEST_CASE("transversals pick one element per position") {
  const auto t1 = transversals(1);
  REQUIRE(t1.size() == 2);
  CHECK(t1[0] == parse_set(1, {"1"}));
  CHECK(t1[1] == parse_set(1, {"1*"}));

  const auto t2 = transversals(2);
  REQUIRE(t2.size() == 4);
  std::set<std::uint64_t> got;
  for (const SignedSet& t : t2) {
    CHECK(t.is_transversal());
    CHECK(t.is_admissible());
    CHECK(t.count() == 2);
    got.insert(t.bits);
  }
  CHECK(got == std::set<std::uint64_t>{0b0011, 0b1001, 0b0110, 0b1100});

  CHECK(transversals(3).size() == 8);
  CHECK_FALSE(parse_set(2, {"1"}).is_transversal());
  CHECK_FALSE(parse_set(2, {"1", "1*"}).is_transversal());
}

TEST_CASE("admissible orders satisfy the mirror law") {
  const auto ords1 = admissible_orders(1);
  REQUIRE(ords1.size() == 2);

  const auto ords2 = admissible_orders(2);
  REQUIRE(ords2.size() == 8);
  for (const GroundOrder& o : ords2) {
    CHECK(is_admissible_order(o));
    for (int k = 0; k < 4; ++k)
      CHECK(o.pos[star_code(o.seq[k], 2)] == 3 - k);
  }

  // 1 < 2 < 2* < 1* is admissible; 1 < 2 < 1* < 2* is not.
  bool saw_mirror = false;
  for (const GroundOrder& o : ords2)
    if (o.seq == std::vector<int>{0, 1, 3, 2}) saw_mirror = true;
  CHECK(saw_mirror);
  for (const GroundOrder& o : ords2) CHECK(o.seq != std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(is_admissible_order(GroundOrder(2, {0, 1, 2, 3})));

  CHECK(admissible_orders(3).size() == 48);  // 2^3 * 3!
}

TEST_CASE("gale dominance compares sorted components") {
  const GroundOrder w(2, {0, 1, 3, 2});  // 1 < 2 < 2* < 1*
  const SignedSet t12 = parse_set(2, {"1", "2"});
  const SignedSet t12s = parse_set(2, {"1", "2*"});
  const SignedSet ts = parse_set(2, {"1*", "2*"});

  CHECK(gale_leq(t12, t12s, w));
  CHECK_FALSE(gale_leq(t12s, t12, w));
  CHECK(gale_leq(t12, t12, w));
  CHECK(gale_leq(t12, ts, w));
  CHECK_FALSE(gale_leq(ts, t12, w));
  CHECK_THROWS_AS((void)gale_leq(t12, parse_set(2, {"1"}), w), InputError);
}

TEST_CASE("set text matches the brace convention") {
  CHECK(parse_set(2, {"1", "2*"}).to_string() == "{1,2*}");
  CHECK(SignedSet::empty(2).to_string() == "{}");
  const auto mem = parse_set(3, {"2", "1*"}).members();
  CHECK(mem == std::vector<int>{1, 3});
}
