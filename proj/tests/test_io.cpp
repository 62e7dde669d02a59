#include "cnlat/io.hpp"

#include <algorithm>
#include <set>

#include "cnlat/fixtures.hpp"
#include "cnlat/suite.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cnlat;

TEST_CASE("lattice JSON round-trips") {
  const SetLattice b = fix_b();
  const SetLattice back = parse_lattice_json(lattice_json(b));
  CHECK(back.elems == b.elems);
  CHECK(back.n == b.n);

  const SetLattice lit = parse_lattice_json(
      R"({"n": 2, "elements": [[], ["1","2*"], ["1*","2"], "J"]})");
  CHECK(lit.elems == b.elems);
}

TEST_CASE("lattice JSON rejects malformed input") {
  CHECK_THROWS_AS((void)parse_lattice_json("not json"), InputError);
  CHECK_THROWS_AS((void)parse_lattice_json(R"({"elements": []})"), InputError);
  CHECK_THROWS_AS((void)parse_lattice_json(R"({"n": 0, "elements": []})"),
                  InputError);
  CHECK_THROWS_AS((void)parse_lattice_json(R"({"n": 40, "elements": [[]]})"),
                  InputError);
  CHECK_THROWS_AS((void)parse_lattice_json(
                      R"({"n": 1, "elements": [["2"]]})"),
                  InputError);
  try {
    (void)parse_lattice_json(
        R"({"n": 2, "elements": [["1"], ["1"], "J"]})");
    FAIL("duplicate accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("{1}") != std::string::npos);
  }
}

TEST_CASE("family JSON closes downward and flags it") {
  const LoadedFamily closed = parse_family_json(
      R"({"n": 2, "independents": [[], ["1"], ["2"], ["1","2"]]})");
  CHECK_FALSE(closed.closure_added);
  CHECK(closed.family.members().size() == 4);

  const LoadedFamily holes = parse_family_json(
      R"({"n": 2, "independents": [["1","2"]]})");
  CHECK(holes.closure_added);
  CHECK(holes.family.members().size() == 4);
  CHECK(holes.family.is_independent(0));

  CHECK_THROWS_AS((void)parse_family_json(R"({"n": 2})"), InputError);
}

TEST_CASE("bases and spike JSON parse into their structs") {
  const BasisFamily b = parse_bases_json(
      R"({"n": 2, "bases": [["1","2"], ["1*","2*"]]})");
  REQUIRE(b.bases.size() == 2);
  CHECK(b.n == 2);
  CHECK(b.bases[0].unite(b.bases[1]) == SignedSet::full(2));
  const BasisFamily back = parse_bases_json(bases_json(b));
  CHECK(back.bases == b.bases);

  const SpikeGraph g = parse_spike_json(
      R"({"n": 2, "balanced": [["1","2*"], ["1*","2"]]})");
  CHECK(g.n == 2);
  REQUIRE(g.balanced.size() == 2);
  CHECK(g.balanced[0].is_transversal());
  CHECK_THROWS_AS((void)parse_spike_json(R"({"n": 2, "balanced": [["1"]]})"),
                  InputError);
}

TEST_CASE("matroid JSON carries ground and member lists") {
  const IndependenceSets F = admissible_independents(fix_b());
  const nlohmann::json as_ind = nlohmann::json::parse(matroid_json(F, 2, false));
  CHECK(as_ind["ground"].size() == 4);
  CHECK(as_ind["independents"].size() == F.members().size());

  const nlohmann::json as_bases = nlohmann::json::parse(matroid_json(F, 2, true));
  CHECK(as_bases["bases"].size() == 2);
}

TEST_CASE("atom orders travel by name") {
  const SetLattice b = fix_b();
  std::vector<int> order = b.atoms;
  std::sort(order.begin(), order.end());
  const std::string text = atom_order_json(b, order);
  CHECK(parse_atom_order_json(b, text) == order);

  CHECK_THROWS_AS((void)parse_atom_order_json(b, R"([["1","2*"]])"),
                  InputError);
  CHECK_THROWS_AS(
      (void)parse_atom_order_json(b, R"([["1","2*"], ["1","2*"]])"),
      InputError);
}

TEST_CASE("missing files raise input errors") {
  CHECK_THROWS_AS((void)read_text_file("/nonexistent/cnlat-test"), InputError);
  CHECK_THROWS_AS((void)load_lattice("/nonexistent/cnlat-test"), InputError);
}

TEST_CASE("suite reports serialize as a JSON array") {
  const SuiteReport r = run_property_suite(SuiteCorpus::Broken, 1, 1);
  const nlohmann::json doc = nlohmann::json::parse(suite_report_json(r));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == r.entries.size());
  for (const auto& row : doc) {
    CHECK(row.contains("invariant"));
    CHECK(row.contains("item"));
    CHECK(row.contains("pass"));
    CHECK(row.contains("witness"));
  }
  CHECK(parse_corpus("broken") == SuiteCorpus::Broken);
  CHECK(parse_corpus("all") == SuiteCorpus::All);
  CHECK_THROWS_AS((void)parse_corpus("nope"), InputError);
}
