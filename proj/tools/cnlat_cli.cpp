#include "cnlat/biased_graph.hpp"
#include "cnlat/enumerate.hpp"
#include "cnlat/io.hpp"
#include "cnlat/lattice.hpp"
#include "cnlat/matroid.hpp"
#include "cnlat/nbb.hpp"
#include "cnlat/shelling.hpp"
#include "cnlat/suite.hpp"
#include "cnlat/symplectic.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace cnlat;

int report_check(const std::string& what, const CheckResult& r) {
  json out = {{"check", what}, {"pass", r.ok}};
  if (!r.ok) {
    out["axiom"] = r.axiom;
    out["detail"] = r.detail;
  }
  std::cout << out.dump(2) << "\n";
  return r.ok ? 0 : 1;
}

json set_names(const SignedSet& s) {
  json arr = json::array();
  for (int c : s.members()) arr.push_back(element_name(c, s.n));
  return arr;
}

json atom_set_names(const SetLattice& L, std::uint64_t mask) {
  json arr = json::array();
  for (int i = 0; i < static_cast<int>(L.atoms.size()); ++i)
    if (mask >> i & 1) arr.push_back(L.name_of(L.atoms[i]));
  return arr;
}

int cmd_check_cn(const std::string& path) {
  return report_check("cn", is_cn_lattice(load_lattice(path)));
}

int cmd_check_geometric(const std::string& path) {
  SetLattice L = load_lattice(path);
  CheckResult cover = is_geometric_lattice(L);
  CheckResult structural = geometric_structure_check(L);
  json out = {{"check", "geometric"},
              {"pass", cover.ok},
              {"structural_pass", structural.ok}};
  if (!cover.ok) {
    out["axiom"] = cover.axiom;
    out["detail"] = cover.detail;
  }
  if (!structural.ok) out["structural_detail"] = structural.axiom + ": " + structural.detail;
  std::cout << out.dump(2) << "\n";
  return cover.ok ? 0 : 1;
}

int cmd_check_symplectic(const std::string& path) {
  return report_check("symplectic", is_symplectic(load_bases(path)));
}

int cmd_check_chow(const std::string& path) {
  LoadedFamily fam = load_family(path);
  CheckResult r = chow_check(fam.family, fam.n);
  json out = {{"check", "chow"}, {"pass", r.ok}};
  if (fam.closure_added) out["warning"] = "input completed to a downward-closed family";
  if (!r.ok) {
    out["axiom"] = r.axiom;
    out["detail"] = r.detail;
  }
  std::cout << out.dump(2) << "\n";
  return r.ok ? 0 : 1;
}

int cmd_check_atom_order(const std::string& path, const std::string& order_path) {
  SetLattice L = load_lattice(path);
  std::vector<int> order = parse_atom_order_json(L, read_text_file(order_path));
  return report_check("atom-order", is_recursive_atom_ordering(L, order));
}

int cmd_check_shelling(const std::string& path, bool proper) {
  SetLattice L = load_lattice(path);
  ChainComplex K = order_complex(L, proper);
  std::vector<int> order;
  bool ok = brute_force_shellable(K, &order);
  json out = {{"check", "shelling"}, {"pass", ok}, {"facets", K.facets.size()}};
  if (ok)
    out["order"] = order;
  else
    out["detail"] = "no facet order satisfies the shelling condition";
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

NbbStrategy parse_strategy(const std::string& s) {
  if (s == "fast") return NbbStrategy::Fast;
  if (s == "oracle") return NbbStrategy::Oracle;
  throw InputError("unknown strategy \"" + s + "\"");
}

int cmd_independents(const std::string& path, const std::string& level,
                     const std::string& strategy, const std::string& convention,
                     bool as_bases) {
  SetLattice L = load_lattice(path);
  NbbStrategy strat = parse_strategy(strategy);
  if (level == "atoms") {
    IndependenceSets F = independence_family_atoms(L, strat);
    json atoms = json::array();
    for (int a : L.atoms) atoms.push_back(L.name_of(a));
    json members = json::array();
    const auto list = as_bases ? F.maximal_members() : F.members();
    for (std::uint64_t m : list) members.push_back(atom_set_names(L, m));
    json out = {{"atoms", atoms}, {as_bases ? "bases" : "independents", members}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  IndependenceSets F;
  if (level == "ground") {
    DisjointConvention conv;
    if (convention == "distinct")
      conv = DisjointConvention::DistinctAtoms;
    else if (convention == "literal")
      conv = DisjointConvention::Literal;
    else
      throw InputError("unknown convention \"" + convention + "\"");
    F = ground_independents(L, strat, conv);
  } else if (level == "admissible") {
    F = admissible_independents(L, strat);
  } else {
    throw InputError("unknown level \"" + level + "\"");
  }
  std::cout << matroid_json(F, L.n, as_bases) << "\n";
  return 0;
}

int cmd_induce_geometric(const std::string& path) {
  SetLattice L = load_lattice(path);
  InducedGeometric G = induce_geometric(L);
  json atoms = json::array();
  for (int a : L.atoms) atoms.push_back(L.name_of(a));
  json flats = json::array();
  for (int x = 0; x < G.lattice.size(); ++x)
    flats.push_back({{"atoms", atom_set_names(L, G.lattice.elems[x].bits)},
                     {"rank", G.lattice.rank(x)}});
  json out = {{"atoms", atoms}, {"flats", flats}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_to_symplectic(const std::string& path) {
  SetLattice L = load_lattice(path);
  std::cout << bases_json(lattice_to_symplectic(L)) << "\n";
  return 0;
}

int cmd_from_symplectic(const std::string& path, int d) {
  LoadedFamily fam = load_family(path);
  if (d < 0) d = fam.family.max_size();
  SetLattice L = symplectic_to_lattice(fam.family, d);
  std::cout << lattice_json(L) << "\n";
  return 0;
}

int cmd_rank_fn(const std::string& path, int d) {
  LoadedFamily fam = load_family(path);
  SymplecticRank R =
      d < 0 ? symplectic_rank(fam.family) : symplectic_rank(fam.family, d);
  RankAxioms ax = rank_axioms(R);
  json axioms = json::array();
  for (const CheckResult& v : ax.violations)
    axioms.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
  json ranks = json::array();
  for (std::uint64_t m = 0; m <= R.universe; ++m)
    ranks.push_back({{"set", set_names(SignedSet(R.n, m))}, {"rank", R.rank(m)}});
  json out = {{"n", R.n}, {"d", R.d}, {"pass", ax.ok}, {"violations", axioms},
              {"ranks", ranks}};
  std::cout << out.dump(2) << "\n";
  return ax.ok ? 0 : 1;
}

int cmd_spike(const std::string& path) {
  SpikeGraph G = load_spike(path);
  CheckResult theta = theta_check(G);
  if (!theta.ok) {
    json out = {{"theta", false}, {"axiom", theta.axiom}, {"detail", theta.detail}};
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  SpikeResult sr = spike_to_symplectic(G);
  json out = {{"theta", true},
              {"lattice", json::parse(lattice_json(sr.lattice))},
              {"bases", json::parse(bases_json(sr.bases))}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_atom_order(const std::string& path) {
  SetLattice L = load_lattice(path);
  std::cout << atom_order_json(L, admissible_atom_ordering(L)) << "\n";
  return 0;
}

int cmd_enumerate(const std::string& kind, int n, int k, int budget) {
  if (kind == "cn") {
    CnEnumeration e = enumerate_cn(n, budget);
    json lattices = json::array();
    for (const SetLattice& L : e.lattices)
      lattices.push_back(json::parse(lattice_json(L)));
    json out = {{"kind", "cn"},
                {"n", n},
                {"count", e.raw_count},
                {"classes", e.lattices.size()},
                {"truncated", e.truncated},
                {"lattices", lattices}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (kind == "symplectic") {
    if (k < 0) throw InputError("enumerate --kind symplectic requires --k");
    std::vector<BasisFamily> fams = enumerate_symplectic(n, k);
    json arr = json::array();
    for (const BasisFamily& B : fams) arr.push_back(json::parse(bases_json(B)));
    json out = {{"kind", "symplectic"}, {"n", n}, {"k", k},
                {"classes", fams.size()}, {"families", arr}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  throw InputError("unknown enumeration kind \"" + kind + "\"");
}

int cmd_suite(const std::string& corpus, std::uint64_t seed, int threads) {
  SuiteReport rep = run_property_suite(parse_corpus(corpus), seed, threads);
  std::cout << suite_report_json(rep) << "\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed-set lattice workbench"};
  app.require_subcommand(1);

  std::string file, order_file, level = "ground", strategy = "fast",
              convention = "distinct", kind = "cn", corpus = "fixtures";
  int n = 1, k = -1, d = -1, budget = 0, threads = 1;
  std::uint64_t seed = 0;
  bool proper = false, as_bases = false;

  CLI::App* check = app.add_subcommand("check", "Validate an object against a definition");
  check->require_subcommand(1);
  CLI::App* c_cn = check->add_subcommand("cn", "Signed-set lattice axioms");
  c_cn->add_option("-f,--file", file, "lattice JSON")->required();
  CLI::App* c_geo = check->add_subcommand("geometric", "Geometric lattice axioms");
  c_geo->add_option("-f,--file", file, "lattice JSON")->required();
  CLI::App* c_sym = check->add_subcommand("symplectic", "Symplectic basis axioms");
  c_sym->add_option("-f,--file", file, "bases JSON")->required();
  CLI::App* c_chow = check->add_subcommand("chow", "Independence-family axioms");
  c_chow->add_option("-f,--file", file, "family JSON")->required();
  CLI::App* c_ao = check->add_subcommand("atom-order", "Recursive atom ordering");
  c_ao->add_option("-f,--file", file, "lattice JSON")->required();
  c_ao->add_option("--order", order_file, "ordering JSON")->required();
  CLI::App* c_sh = check->add_subcommand("shelling", "Order-complex shellability");
  c_sh->add_option("-f,--file", file, "lattice JSON")->required();
  c_sh->add_flag("--proper", proper, "drop bottom and top first");

  CLI::App* ind = app.add_subcommand("independents", "Bounded-below independence family");
  ind->add_option("-f,--file", file, "lattice JSON")->required();
  ind->add_option("--level", level, "atoms|ground|admissible");
  ind->add_option("--strategy", strategy, "fast|oracle");
  ind->add_option("--convention", convention, "distinct|literal");
  ind->add_flag("--bases", as_bases, "emit only maximal members");

  CLI::App* ig = app.add_subcommand("induce-geometric", "Flat lattice of the atom matroid");
  ig->add_option("-f,--file", file, "lattice JSON")->required();

  CLI::App* tos = app.add_subcommand("to-symplectic", "Maximal admissible independents");
  tos->add_option("-f,--file", file, "lattice JSON")->required();

  CLI::App* froms = app.add_subcommand("from-symplectic", "Lattice of admissible flats");
  froms->add_option("-f,--file", file, "family JSON")->required();
  froms->add_option("--d", d, "rank bound (default: largest member size)");

  CLI::App* rf = app.add_subcommand("rank-fn", "Induced rank function and its axioms");
  rf->add_option("-f,--file", file, "family JSON")->required();
  rf->add_option("--d", d, "rank bound (default: largest member size)");

  CLI::App* sp = app.add_subcommand("spike", "Lift matroid of a spike");
  sp->add_option("-f,--file", file, "spike JSON")->required();

  CLI::App* ao = app.add_subcommand("atom-order", "Construct an admissible atom ordering");
  ao->add_option("-f,--file", file, "lattice JSON")->required();

  CLI::App* en = app.add_subcommand("enumerate", "Exhaustive small-n enumeration");
  en->add_option("--kind", kind, "cn|symplectic");
  en->add_option("--n", n, "ground-set size")->required();
  en->add_option("--k", k, "rank (symplectic only)");
  en->add_option("--budget", budget, "time budget in ms (cn, n=3)");

  CLI::App* su = app.add_subcommand("suite", "Cross-module property suite");
  su->add_option("--corpus", corpus, "fixtures|cn1|cn2|broken|all");
  su->add_option("--seed", seed, "seed for randomized orders");
  su->add_option("--threads", threads, "parallelism cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_cn->parsed()) return cmd_check_cn(file);
    if (c_geo->parsed()) return cmd_check_geometric(file);
    if (c_sym->parsed()) return cmd_check_symplectic(file);
    if (c_chow->parsed()) return cmd_check_chow(file);
    if (c_ao->parsed()) return cmd_check_atom_order(file, order_file);
    if (c_sh->parsed()) return cmd_check_shelling(file, proper);
    if (ind->parsed())
      return cmd_independents(file, level, strategy, convention, as_bases);
    if (ig->parsed()) return cmd_induce_geometric(file);
    if (tos->parsed()) return cmd_to_symplectic(file);
    if (froms->parsed()) return cmd_from_symplectic(file, d);
    if (rf->parsed()) return cmd_rank_fn(file, d);
    if (sp->parsed()) return cmd_spike(file);
    if (ao->parsed()) return cmd_atom_order(file);
    if (en->parsed()) return cmd_enumerate(kind, n, k, budget);
    if (su->parsed()) return cmd_suite(corpus, seed, threads);
  } catch (const InputError& e) {
    std::cout << json({{"error", e.what()}}).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json({{"error", std::string("internal error: ") + e.what()}}).dump(2)
              << "\n";
    return 2;
  }
  return 2;
}
