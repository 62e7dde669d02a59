#include "cnlat/suite.hpp"

#include "cnlat/biased_graph.hpp"
#include "cnlat/enumerate.hpp"
#include "cnlat/fixtures.hpp"
#include "cnlat/lattice.hpp"
#include "cnlat/matroid.hpp"
#include "cnlat/nbb.hpp"
#include "cnlat/shelling.hpp"
#include "cnlat/symplectic.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace cnlat {

namespace {

struct CorpusItem {
  std::string name;
  SetLattice lattice;
  bool expect_cn = false;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string mask_text(int n, std::uint64_t m) { return SignedSet(n, m).to_string(); }

std::string atom_mask_text(const SetLattice& L, std::uint64_t m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < static_cast<int>(L.atoms.size()); ++i) {
    if (!(m >> i & 1)) continue;
    if (!first) out += ",";
    first = false;
    out += L.name_of(L.atoms[i]);
  }
  return out + "}";
}

std::string family_text(const std::vector<SignedSet>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + "}";
}

int pow3(int n) {
  int p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

SetLattice broken_lattice() {
  SetLattice b = fix_b();
  const SignedSet drop = parse_set(2, {"1", "2*"});
  std::vector<SignedSet> elems;
  for (const SignedSet& e : b.elems)
    if (e.bits != drop.bits) elems.push_back(e);
  return build_lattice(2, std::move(elems));
}

void collect_chains(const SetLattice& L, int at, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  cur.push_back(at);
  if (L.up[static_cast<std::size_t>(at)].empty())
    out.push_back(cur);
  else
    for (int nx : L.up[static_cast<std::size_t>(at)]) collect_chains(L, nx, cur, out);
  cur.pop_back();
}

std::optional<std::vector<int>> facet_order_from_chains(
    const SetLattice& L, const ChainComplex& K,
    const std::vector<std::vector<int>>& chains, bool proper, std::string* err) {
  std::map<std::vector<int>, int> facet_id;
  for (int i = 0; i < static_cast<int>(K.facets.size()); ++i)
    facet_id[K.facets[static_cast<std::size_t>(i)]] = i;
  std::vector<int> vertex_of(static_cast<std::size_t>(L.size()), -1);
  for (int v = 0; v < static_cast<int>(K.vertex_elem.size()); ++v)
    vertex_of[static_cast<std::size_t>(K.vertex_elem[static_cast<std::size_t>(v)])] = v;
  std::vector<int> order;
  std::vector<char> used(K.facets.size(), 0);
  for (const auto& chain : chains) {
    std::vector<int> verts;
    for (int idx : chain) {
      if (proper && (idx == L.bottom || idx == L.top)) continue;
      if (vertex_of[static_cast<std::size_t>(idx)] < 0) {
        *err = L.name_of(idx) + " is not a complex vertex";
        return std::nullopt;
      }
      verts.push_back(vertex_of[static_cast<std::size_t>(idx)]);
    }
    std::sort(verts.begin(), verts.end());
    auto it = facet_id.find(verts);
    if (it == facet_id.end()) {
      *err = "a maximal chain is not a facet of the complex";
      return std::nullopt;
    }
    if (used[static_cast<std::size_t>(it->second)]) {
      *err = "a maximal chain appears twice";
      return std::nullopt;
    }
    used[static_cast<std::size_t>(it->second)] = 1;
    order.push_back(it->second);
  }
  if (order.size() != K.facets.size()) {
    *err = "chain count differs from facet count";
    return std::nullopt;
  }
  return order;
}

std::vector<SuiteItem> lattice_checks(const CorpusItem& it, std::uint64_t seed) {
  std::vector<SuiteItem> out;
  const SetLattice& L = it.lattice;
  auto add = [&](const std::string& inv, bool pass, const std::string& wit) {
    out.push_back({inv, it.name, pass, pass ? std::string() : wit});
  };
  auto run = [&](const std::string& inv, auto&& body) {
    try {
      body(inv);
    } catch (const std::exception& e) {
      add(inv, false, std::string("unexpected error: ") + e.what());
    }
  };

  const CheckResult cn = is_cn_lattice(L);
  const bool structured = L.unique_bounds && L.lattice_ok && L.graded && L.atomistic;
  const int t = static_cast<int>(L.atoms.size());
  const int top_rank = (L.unique_bounds && L.graded) ? L.rank(L.top) : -1;
  const bool full_ground =
      L.unique_bounds && L.ground.bits == SignedSet::full(L.n).bits;

  if (it.expect_cn) add("200-cn-axioms", cn.ok, cn.axiom + ": " + cn.detail);

  if (cn.ok) {
    run("201-cn-atomistic-join", [&](const std::string& inv) {
      if (!L.graded || !L.atomistic) {
        add(inv, false, "structure flags: " + L.structure_note);
        return;
      }
      for (int x = 0; x < L.size(); ++x) {
        std::vector<int> below;
        for (int a : L.atoms)
          if (L.leq(a, x)) below.push_back(a);
        if (L.join_of(below) != x) {
          add(inv, false, L.name_of(x) + " is not the join of the atoms below it");
          return;
        }
      }
      add(inv, true, "");
    });

    run("202-cn-upper-intervals", [&](const std::string& inv) {
      for (int a = 0; a < L.size(); ++a) {
        SetLattice R = interval_restrict(L, a);
        CheckResult rc = is_cn_lattice(R);
        if (!rc.ok) {
          add(inv, false,
              "interval above " + L.name_of(a) + ": " + rc.axiom + ": " + rc.detail);
          return;
        }
      }
      add(inv, true, "");
    });

    if (top_rank >= 2)
      run("203-cn-interval-atom-bound", [&](const std::string& inv) {
        for (int a : L.atoms) {
          SetLattice R = interval_restrict(L, a);
          if (static_cast<int>(R.atoms.size()) > t - 2) {
            add(inv, false,
                "interval above " + L.name_of(a) + " has " +
                    std::to_string(R.atoms.size()) + " atoms, bound " +
                    std::to_string(t - 2));
            return;
          }
        }
        add(inv, true, "");
      });

    if (top_rank >= 3)
      run("204-cn-star-closed-atoms", [&](const std::string& inv) {
        for (int a : L.atoms) {
          SignedSet s = L.elems[static_cast<std::size_t>(a)].star();
          int idx = L.index_of(s);
          bool is_atom =
              idx >= 0 && std::find(L.atoms.begin(), L.atoms.end(), idx) != L.atoms.end();
          if (!is_atom) {
            add(inv, false, "star of atom " + L.name_of(a) + " is not an atom");
            return;
          }
        }
        add(inv, true, "");
      });
  }

  run("205-order-complex-census", [&](const std::string& inv) {
    ChainComplex K = order_complex(L, false);
    for (const auto& f : K.facets)
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
          int x = K.vertex_elem[static_cast<std::size_t>(f[i])];
          int y = K.vertex_elem[static_cast<std::size_t>(f[j])];
          if (!L.leq(x, y) && !L.leq(y, x)) {
            add(inv, false, "facet vertices " + L.name_of(x) + " and " + L.name_of(y) +
                                " are incomparable");
            return;
          }
        }
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    collect_chains(L, L.bottom, cur, chains);
    if (chains.size() != K.facets.size()) {
      add(inv, false,
          std::to_string(chains.size()) + " maximal chains vs " +
              std::to_string(K.facets.size()) + " facets");
      return;
    }
    if (L.graded) {
      if (!K.pure || K.dim != top_rank) {
        add(inv, false, "graded lattice but complex not pure of matching dimension");
        return;
      }
    } else if (K.pure && K.facets.size() > 1) {
      add(inv, false, "ungraded lattice with a pure chain complex");
      return;
    }
    add(inv, true, "");
  });

  run("206-structure-selfcheck", [&](const std::string& inv) {
    if (!L.unique_bounds || !L.lattice_ok) {
      add(inv, false, "structure flags: " + L.structure_note);
      return;
    }
    if (L.meets_are_intersections) {
      for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
          std::uint64_t got = L.elems[static_cast<std::size_t>(L.meet(a, b))].bits;
          if (got != (L.elems[static_cast<std::size_t>(a)].bits &
                      L.elems[static_cast<std::size_t>(b)].bits)) {
            add(inv, false, "meet of " + L.name_of(a) + " and " + L.name_of(b) +
                                " is not their intersection");
            return;
          }
        }
    }
    if (L.graded) {
      std::vector<std::vector<int>> chains;
      std::vector<int> cur;
      collect_chains(L, L.bottom, cur, chains);
      for (const auto& chain : chains)
        if (static_cast<int>(chain.size()) != top_rank + 1) {
          add(inv, false, "maximal chain of length " + std::to_string(chain.size()) +
                              " in a lattice of rank " + std::to_string(top_rank));
          return;
        }
    }
    add(inv, true, "");
  });

  if (structured && t <= kMaxAtoms) {
    if (t <= 6)
      run("301-fast-oracle-agreement", [&](const std::string& inv) {
        IndependenceSets fast = independence_family_atoms(L, NbbStrategy::Fast);
        IndependenceSets oracle = independence_family_atoms(L, NbbStrategy::Oracle);
        if (!(fast == oracle)) {
          for (std::uint64_t m = 0; m < (1ull << t); ++m)
            if (fast.indep[m] != oracle.indep[m]) {
              add(inv, false, "atom set " + atom_mask_text(L, m) + " differs");
              return;
            }
        }
        if (cn.ok && full_ground && 2 * L.n <= 6) {
          IndependenceSets gf =
              ground_nbb_family(L, NbbStrategy::Fast, DisjointConvention::DistinctAtoms);
          IndependenceSets go = ground_nbb_family(L, NbbStrategy::Oracle,
                                                  DisjointConvention::DistinctAtoms);
          if (!(gf == go)) {
            for (std::uint64_t m = 0; m < (1ull << (2 * L.n)); ++m)
              if (gf.indep[m] != go.indep[m]) {
                add(inv, false, "ground set " + mask_text(L.n, m) + " differs");
                return;
              }
          }
        }
        add(inv, true, "");
      });

    AtomContext ctx = atom_context(L, L.bottom);
    IndependenceSets F = independence_family_atoms(L, NbbStrategy::Fast);
    auto jrank = [&](std::uint64_t m) { return L.rank(ctx.join_atoms(m)); };

    run("302-independent-rank-drop", [&](const std::string& inv) {
      for (std::uint64_t m : F.members()) {
        if (m == 0) continue;
        bool found = false;
        for (int a = 0; a < t && !found; ++a)
          if ((m >> a & 1) && jrank(m & ~(1ull << a)) < jrank(m)) found = true;
        if (!found) {
          add(inv, false, "no element of " + atom_mask_text(L, m) + " drops the rank");
          return;
        }
      }
      add(inv, true, "");
    });

    run("303-rank-at-least-size", [&](const std::string& inv) {
      for (std::uint64_t m : F.members())
        if (jrank(m) < std::popcount(m)) {
          add(inv, false, atom_mask_text(L, m) + " spans rank " +
                              std::to_string(jrank(m)));
          return;
        }
      add(inv, true, "");
    });

    run("304-span-rank-maximum", [&](const std::string& inv) {
      std::vector<int> best(static_cast<std::size_t>(L.size()), -1);
      for (std::uint64_t m : F.members()) {
        int x = ctx.join_atoms(m);
        best[static_cast<std::size_t>(x)] =
            std::max(best[static_cast<std::size_t>(x)], std::popcount(m));
      }
      for (int x = 0; x < L.size(); ++x)
        if (best[static_cast<std::size_t>(x)] != L.rank(x)) {
          add(inv, false, "largest independent set spanning " + L.name_of(x) + " has " +
                              std::to_string(best[static_cast<std::size_t>(x)]) +
                              " elements, rank is " + std::to_string(L.rank(x)));
          return;
        }
      add(inv, true, "");
    });

    run("305-rank-increase-extension", [&](const std::string& inv) {
      for (std::uint64_t m : F.members())
        for (int a = 0; a < t; ++a) {
          if (m >> a & 1) continue;
          std::uint64_t ext = m | (1ull << a);
          if (jrank(ext) > jrank(m) && !F.is_independent(ext)) {
            add(inv, false, atom_mask_text(L, ext) + " raises the rank but is dependent");
            return;
          }
        }
      add(inv, true, "");
    });

    run("306-induced-geometric", [&](const std::string& inv) {
      InducedGeometric G = induce_geometric(L);
      CheckResult g1 = is_geometric_lattice(G.lattice);
      if (!g1.ok) {
        add(inv, false, "induced lattice: " + g1.axiom + ": " + g1.detail);
        return;
      }
      CheckResult g2 = geometric_structure_check(G.lattice);
      if (!g2.ok) {
        add(inv, false, "induced lattice structure: " + g2.axiom + ": " + g2.detail);
        return;
      }
      for (int x = 0; x < L.size(); ++x) {
        int img = G.lattice.index_of(
            SignedSet(G.lattice.n, G.image_of[static_cast<std::size_t>(x)]));
        if (img < 0 || G.lattice.rank(img) != L.rank(x)) {
          add(inv, false, "embedding of " + L.name_of(x) + " breaks the rank");
          return;
        }
      }
      add(inv, true, "");
    });

    run("307-geometric-equivalence", [&](const std::string& inv) {
      bool by_indep = is_geometric_by_independents(L).ok;
      bool by_covers = is_geometric_lattice(L).ok;
      add(inv, by_indep == by_covers,
          std::string("independence test says ") + (by_indep ? "yes" : "no") +
              ", cover test says " + (by_covers ? "yes" : "no"));
    });
  }

  if (cn.ok && full_ground && 2 * L.n <= kMaxGround) {
    IndependenceSets Igr = ground_independents(L);
    IndependenceSets Iad = admissible_independents(L);
    const bool is_full = L.size() == pow3(L.n) + 1;

    run("401-restriction-agreement", [&](const std::string& inv) {
      const std::uint64_t all = SignedSet::full(L.n).bits;
      for (std::uint64_t A = 0; A <= all; ++A) {
        if (!SignedSet(L.n, A).is_admissible()) continue;
        std::set<std::uint64_t> imgs;
        for (const SignedSet& e : L.elems) imgs.insert(e.bits & A);
        std::vector<SignedSet> elems;
        for (std::uint64_t b : imgs) elems.emplace_back(L.n, b);
        SetLattice Lr = build_lattice(L.n, std::move(elems), SignedSet(L.n, A));
        IndependenceSets fr =
            ground_nbb_family(Lr, NbbStrategy::Fast, DisjointConvention::DistinctAtoms);
        for (std::uint64_t m = 0; m <= all; ++m) {
          bool lhs = (m & ~A) == 0 && Igr.is_independent(m);
          bool rhs = (m & ~A) == 0 && fr.is_independent(m);
          if (lhs != rhs) {
            add(inv, false, "restriction to " + mask_text(L.n, A) + " differs at " +
                                mask_text(L.n, m));
            return;
          }
        }
      }
      add(inv, true, "");
    });

    run("402-admissible-flats", [&](const std::string& inv) {
      std::set<std::uint64_t> flats;
      for (const SignedSet& f : ground_flat_lattice(L))
        if (f.is_admissible()) flats.insert(f.bits);
      std::set<std::uint64_t> expected;
      for (const SignedSet& e : L.elems)
        if (e.bits != SignedSet::full(L.n).bits) expected.insert(e.bits);
      if (flats != expected) {
        for (std::uint64_t b : flats)
          if (!expected.count(b)) {
            add(inv, false, "extra admissible flat " + mask_text(L.n, b));
            return;
          }
        for (std::uint64_t b : expected)
          if (!flats.count(b)) {
            add(inv, false, L.name_of(L.index_of(SignedSet(L.n, b))) + " is not a flat");
            return;
          }
      }
      add(inv, true, "");
    });

    if (!is_full)
      run("403-admissible-rank-cardinality", [&](const std::string& inv) {
        RankOracle RM = rank_from_independents(Igr);
        for (std::uint64_t m : Iad.members())
          if (RM.rank(m) != std::popcount(m)) {
            add(inv, false, mask_text(L.n, m) + " has rank " +
                                std::to_string(RM.rank(m)));
            return;
          }
        for (std::uint64_t m : Iad.maximal_members())
          if (std::popcount(m) != top_rank) {
            add(inv, false, "maximal admissible independent " + mask_text(L.n, m) +
                                " has size " + std::to_string(std::popcount(m)));
            return;
          }
        add(inv, true, "");
      });

    run("404-symplectic-conversion", [&](const std::string& inv) {
      if (is_full) {
        try {
          lattice_to_symplectic(L);
          add(inv, false, "the lattice of all admissible sets was not rejected");
        } catch (const InputError&) {
          add(inv, true, "");
        }
        return;
      }
      BasisFamily B = lattice_to_symplectic(L);
      CheckResult s = is_symplectic(B);
      if (!s.ok) {
        add(inv, false, "basis family: " + s.axiom + ": " + s.detail);
        return;
      }
      CheckResult c = chow_check(Iad, L.n);
      if (!c.ok) {
        add(inv, false, "admissible independents: " + c.axiom + ": " + c.detail);
        return;
      }
      add(inv, true, "");
    });

    run("405-nonadmissible-extension", [&](const std::string& inv) {
      IndependenceSets E = nonadmissible_extension(Iad, top_rank);
      if (!(E == Igr)) {
        for (std::uint64_t m = 0; m < (1ull << (2 * L.n)); ++m)
          if (E.indep[m] != Igr.indep[m]) {
            add(inv, false, "extension differs at " + mask_text(L.n, m));
            return;
          }
      }
      add(inv, true, "");
    });

    run("407-lattice-round-trip", [&](const std::string& inv) {
      SetLattice L2 = symplectic_to_lattice(Iad, top_rank);
      if (L2.n != L.n || !(L2.elems == L.elems)) {
        add(inv, false, "rebuilt lattice has " + std::to_string(L2.size()) +
                            " elements, original has " + std::to_string(L.size()));
        return;
      }
      add(inv, true, "");
    });
  }

  if (cn.ok) {
    run("601-recursive-atom-ordering", [&](const std::string& inv) {
      std::vector<int> ord = admissible_atom_ordering(L);
      CheckResult r = is_recursive_atom_ordering(L, ord);
      add(inv, r.ok, r.axiom + ": " + r.detail);
    });

    if (top_rank <= 3)
      run("602-lex-chain-shelling", [&](const std::string& inv) {
        std::vector<std::vector<int>> chains = lex_maximal_chains(L);
        ChainComplex K = order_complex(L, false);
        std::string err;
        auto ord = facet_order_from_chains(L, K, chains, false, &err);
        if (!ord) {
          add(inv, false, err);
          return;
        }
        CheckResult s = is_shelling(K, *ord);
        if (!s.ok) {
          add(inv, false, "lexicographic chain order: " + s.detail);
          return;
        }
        if (!brute_force_shellable(K)) {
          add(inv, false, "no shelling order exists for the full complex");
          return;
        }
        if (top_rank >= 2) {
          ChainComplex Kp = order_complex(L, true);
          auto ordp = facet_order_from_chains(L, Kp, chains, true, &err);
          if (!ordp) {
            add(inv, false, err);
            return;
          }
          CheckResult sp = is_shelling(Kp, *ordp);
          if (!sp.ok) {
            add(inv, false, "proper-part chain order: " + sp.detail);
            return;
          }
          if (!brute_force_shellable(Kp)) {
            add(inv, false, "no shelling order exists for the proper part");
            return;
          }
        }
        add(inv, true, "");
      });
  }

  bool members_admissible = true;
  for (int x = 0; x < L.size(); ++x)
    if (x != L.top && !L.elems[static_cast<std::size_t>(x)].is_admissible())
      members_admissible = false;
  if (full_ground && structured && members_admissible && t <= 6)
    run("605-cn-criteria-agreement", [&](const std::string& inv) {
      bool ind = cn_criterion_independents(L);
      bool ords = cn_criterion_orderings(L);
      bool pairing = cn_isomorphic_by_pairing(L);
      add(inv, ind == pairing && ords == pairing,
          std::string("independents=") + (ind ? "yes" : "no") +
              " orderings=" + (ords ? "yes" : "no") +
              " pairing=" + (pairing ? "yes" : "no"));
    });

  if (L.unique_bounds && L.lattice_ok && L.graded && t <= 6)
    run("606-rao-relabel-invariance", [&](const std::string& inv) {
      std::mt19937_64 rng(seed ^ fnv1a(it.name));
      const bool base_ok = is_recursive_atom_ordering(L, L.atoms).ok;
      std::vector<int> gcodes = L.ground.members();
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> perm = gcodes;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> code_map(static_cast<std::size_t>(2 * L.n));
        for (int c = 0; c < 2 * L.n; ++c) code_map[static_cast<std::size_t>(c)] = c;
        for (std::size_t i = 0; i < gcodes.size(); ++i)
          code_map[static_cast<std::size_t>(gcodes[i])] = perm[i];
        auto map_bits = [&](std::uint64_t bits) {
          std::uint64_t out = 0;
          for (std::uint64_t rest = bits; rest;) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            out |= 1ull << code_map[static_cast<std::size_t>(c)];
          }
          return out;
        };
        std::vector<SignedSet> imgs;
        for (const SignedSet& e : L.elems) imgs.emplace_back(L.n, map_bits(e.bits));
        SetLattice L2 = build_lattice(L.n, std::move(imgs), L.ground);
        std::vector<int> ord2;
        for (int a : L.atoms)
          ord2.push_back(L2.index_of(
              SignedSet(L.n, map_bits(L.elems[static_cast<std::size_t>(a)].bits))));
        bool relabeled_ok = is_recursive_atom_ordering(L2, ord2).ok;
        if (relabeled_ok != base_ok) {
          add(inv, false, "relabeling trial " + std::to_string(trial) + " flips the verdict");
          return;
        }
      }
      add(inv, true, "");
    });

  return out;
}

std::vector<SuiteItem> core_checks(int k) {
  std::vector<SuiteItem> out;
  const std::string item = "core-n" + std::to_string(k);
  auto add = [&](const std::string& inv, bool pass, const std::string& wit) {
    out.push_back({inv, item, pass, pass ? std::string() : wit});
  };
  auto run = [&](const std::string& inv, auto&& body) {
    try {
      body(inv);
    } catch (const std::exception& e) {
      add(inv, false, std::string("unexpected error: ") + e.what());
    }
  };

  run("101-star-involution", [&](const std::string& inv) {
    for (std::uint64_t m = 0; m < (1ull << (2 * k)); ++m) {
      SignedSet s(k, m);
      if (s.star().star() != s) {
        add(inv, false, "star is not an involution at " + s.to_string());
        return;
      }
      if (s.is_admissible() != s.star().is_admissible()) {
        add(inv, false, "admissibility is not star-symmetric at " + s.to_string());
        return;
      }
    }
    add(inv, true, "");
  });

  run("102-gale-order-laws", [&](const std::string& inv) {
    std::vector<std::vector<SignedSet>> by_size(static_cast<std::size_t>(2 * k + 1));
    for (std::uint64_t m = 0; m < (1ull << (2 * k)); ++m) {
      SignedSet s(k, m);
      if (s.is_admissible()) by_size[static_cast<std::size_t>(s.count())].push_back(s);
    }
    for (const GroundOrder& ord : admissible_orders(k)) {
      for (const auto& group : by_size) {
        const int sz = static_cast<int>(group.size());
        std::vector<char> leqm(static_cast<std::size_t>(sz) * sz, 0);
        for (int i = 0; i < sz; ++i)
          for (int j = 0; j < sz; ++j)
            leqm[static_cast<std::size_t>(i) * sz + j] =
                gale_leq(group[static_cast<std::size_t>(i)],
                         group[static_cast<std::size_t>(j)], ord)
                    ? 1
                    : 0;
        for (int i = 0; i < sz; ++i) {
          if (!leqm[static_cast<std::size_t>(i) * sz + i]) {
            add(inv, false, "not reflexive at " + group[static_cast<std::size_t>(i)].to_string());
            return;
          }
          for (int j = 0; j < sz; ++j) {
            if (i != j && leqm[static_cast<std::size_t>(i) * sz + j] &&
                leqm[static_cast<std::size_t>(j) * sz + i]) {
              add(inv, false,
                  "not antisymmetric at " + group[static_cast<std::size_t>(i)].to_string() +
                      ", " + group[static_cast<std::size_t>(j)].to_string());
              return;
            }
            if (!leqm[static_cast<std::size_t>(i) * sz + j]) continue;
            for (int l = 0; l < sz; ++l)
              if (leqm[static_cast<std::size_t>(j) * sz + l] &&
                  !leqm[static_cast<std::size_t>(i) * sz + l]) {
                add(inv, false,
                    "not transitive at " + group[static_cast<std::size_t>(i)].to_string() +
                        ", " + group[static_cast<std::size_t>(j)].to_string() + ", " +
                        group[static_cast<std::size_t>(l)].to_string());
                return;
              }
          }
        }
      }
    }
    add(inv, true, "");
  });

  run("103-transversal-census", [&](const std::string& inv) {
    std::vector<SignedSet> trans = transversals(k);
    if (static_cast<int>(trans.size()) != (1 << k)) {
      add(inv, false, std::to_string(trans.size()) + " transversals");
      return;
    }
    std::set<std::uint64_t> seen;
    for (const SignedSet& T : trans) {
      if (!seen.insert(T.bits).second || !T.is_transversal() || !T.is_admissible()) {
        add(inv, false, T.to_string() + " is not a distinct admissible transversal");
        return;
      }
      for (int c = 0; c < 2 * k; ++c)
        if (!T.contains(c) && T.with(c).is_admissible()) {
          add(inv, false, T.to_string() + " is not maximal admissible");
          return;
        }
    }
    add(inv, true, "");
  });

  run("104-admissible-order-census", [&](const std::string& inv) {
    std::vector<GroundOrder> orders = admissible_orders(k);
    int expected = (1 << k);
    for (int i = 2; i <= k; ++i) expected *= i;
    if (static_cast<int>(orders.size()) != expected) {
      add(inv, false, std::to_string(orders.size()) + " orders, expected " +
                          std::to_string(expected));
      return;
    }
    std::set<std::vector<int>> seen;
    for (const GroundOrder& ord : orders) {
      if (!seen.insert(ord.seq).second) {
        add(inv, false, "duplicate order");
        return;
      }
      if (!is_admissible_order(ord)) {
        add(inv, false, "order violates the star-reversal law");
        return;
      }
      for (int i = 0; i < 2 * k; ++i)
        if (ord.pos[static_cast<std::size_t>(star_code(ord.seq[static_cast<std::size_t>(i)], k))] !=
            2 * k - 1 - i) {
          add(inv, false, "star-reversal fails at position " + std::to_string(i));
          return;
        }
    }
    add(inv, true, "");
  });

  return out;
}

std::vector<SuiteItem> spike_checks(int n) {
  std::vector<SuiteItem> out;
  const std::string item = "spikes-n" + std::to_string(n);
  auto add = [&](const std::string& inv, bool pass, const std::string& wit) {
    out.push_back({inv, item, pass, pass ? std::string() : wit});
  };

  bool ok1 = true, ok2 = true, ok3 = true;
  std::string w1, w2, w3;
  try {
    std::vector<SignedSet> trans = transversals(n);
    const int tn = static_cast<int>(trans.size());
    for (std::uint64_t s = 0; s < (1ull << tn); ++s) {
      SpikeGraph G;
      G.n = n;
      for (int i = 0; i < tn; ++i)
        if (s >> i & 1) G.balanced.push_back(trans[static_cast<std::size_t>(i)]);
      if (!theta_check(G).ok) continue;
      const std::string tag = "balanced=" + family_text(G.balanced);

      IndependenceSets lift = lift_independents(G);
      CheckResult ax = check_matroid_axioms(lift);
      if (!ax.ok) {
        if (ok1) {
          ok1 = false;
          w1 = tag + ": " + ax.axiom + ": " + ax.detail;
        }
        continue;
      }
      IndependenceSets adm = lift;
      for (std::uint64_t m = 0; m < (1ull << (2 * n)); ++m)
        if (adm.indep[m] && !SignedSet(n, m).is_admissible()) adm.indep[m] = 0;
      CheckResult ch = chow_check(adm, n);
      if (!ch.ok && ok1) {
        ok1 = false;
        w1 = tag + " admissible part: " + ch.axiom + ": " + ch.detail;
      }
      try {
        SpikeResult sr = spike_to_symplectic(G);
        CheckResult cnres = is_cn_lattice(sr.lattice);
        if (!cnres.ok && ok1) {
          ok1 = false;
          w1 = tag + " lattice: " + cnres.axiom + ": " + cnres.detail;
        }
      } catch (const InputError& e) {
        if (ok1) {
          ok1 = false;
          w1 = tag + ": " + e.what();
        }
      }

      const int d = lift.max_size();
      for (std::uint64_t m : lift.members()) {
        if (!SignedSet(n, m).is_admissible() || std::popcount(m) >= d) continue;
        for (std::uint64_t rest = m; rest;) {
          const int a = std::countr_zero(rest);
          rest &= rest - 1;
          if (!lift.is_independent(m | (1ull << star_code(a, n))) && ok2) {
            ok2 = false;
            w2 = tag + ": " + mask_text(n, m) + " loses independence with " +
                 element_name(star_code(a, n), n);
          }
        }
      }

      if (static_cast<int>(G.balanced.size()) < tn && d != n && ok3) {
        ok3 = false;
        w3 = tag + ": lift rank " + std::to_string(d);
      }
    }
  } catch (const std::exception& e) {
    ok1 = false;
    w1 = std::string("unexpected error: ") + e.what();
  }
  add("501-spike-lift-structure", ok1, w1);
  add("502-spike-star-extension", ok2, w2);
  add("503-spike-lift-rank", ok3, w3);
  return out;
}

std::vector<SuiteItem> enumeration_checks(int level) {
  std::vector<SuiteItem> out;
  const std::string item = "enumeration";
  auto add = [&](const std::string& inv, bool pass, const std::string& wit) {
    out.push_back({inv, item, pass, pass ? std::string() : wit});
  };
  auto run = [&](const std::string& inv, auto&& body) {
    try {
      body(inv);
    } catch (const std::exception& e) {
      add(inv, false, std::string("unexpected error: ") + e.what());
    }
  };

  run("701-enumeration-determinism", [&](const std::string& inv) {
    for (int n = 1; n <= level; ++n) {
      CnEnumeration a = enumerate_cn(n);
      CnEnumeration b = enumerate_cn(n);
      bool same = a.raw_count == b.raw_count && a.truncated == b.truncated &&
                  a.lattices.size() == b.lattices.size();
      for (std::size_t i = 0; same && i < a.lattices.size(); ++i)
        same = a.lattices[i].elems == b.lattices[i].elems;
      if (!same) {
        add(inv, false, "two runs of the n=" + std::to_string(n) + " stream differ");
        return;
      }
    }
    std::vector<std::pair<int, int>> cases = {{1, 1}};
    if (level >= 2) {
      cases.push_back({2, 1});
      cases.push_back({2, 2});
    }
    for (auto [n, kk] : cases) {
      std::vector<BasisFamily> a = enumerate_symplectic(n, kk);
      std::vector<BasisFamily> b = enumerate_symplectic(n, kk);
      bool same = a.size() == b.size();
      for (std::size_t i = 0; same && i < a.size(); ++i)
        same = a[i].bases == b[i].bases;
      if (!same) {
        add(inv, false, "two runs of the (" + std::to_string(n) + "," +
                            std::to_string(kk) + ") basis stream differ");
        return;
      }
    }
    add(inv, true, "");
  });

  run("702-canonical-distinctness", [&](const std::string& inv) {
    for (int n = 1; n <= level; ++n) {
      std::vector<SymmetryAction> group = hyperoctahedral_group(n);
      CnEnumeration e = enumerate_cn(n);
      std::vector<std::vector<std::uint64_t>> masks;
      for (const SetLattice& L : e.lattices) {
        std::vector<std::uint64_t> v;
        for (const SignedSet& s : L.elems) v.push_back(s.bits);
        std::sort(v.begin(), v.end());
        masks.push_back(std::move(v));
      }
      for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
          for (const SymmetryAction& act : group) {
            std::vector<std::uint64_t> mapped;
            for (std::uint64_t b : masks[i]) mapped.push_back(act.apply(b));
            std::sort(mapped.begin(), mapped.end());
            if (mapped == masks[j]) {
              add(inv, false, "stream items " + std::to_string(i) + " and " +
                                  std::to_string(j) + " are symmetric for n=" +
                                  std::to_string(n));
              return;
            }
          }
    }
    add(inv, true, "");
  });

  run("703-stream-symplectic-injective", [&](const std::string& inv) {
    for (int n = 1; n <= level; ++n) {
      CnEnumeration e = enumerate_cn(n);
      std::set<std::vector<std::uint64_t>> images;
      for (const SetLattice& L : e.lattices) {
        if (L.size() == pow3(n) + 1) continue;
        BasisFamily B = lattice_to_symplectic(L);
        CheckResult s = is_symplectic(B);
        if (!s.ok) {
          add(inv, false, "a stream lattice maps to a non-symplectic family: " + s.detail);
          return;
        }
        std::vector<std::uint64_t> key;
        for (const SignedSet& b : B.bases) key.push_back(b.bits);
        std::sort(key.begin(), key.end());
        if (!images.insert(key).second) {
          add(inv, false, "two stream lattices map to the same basis family (n=" +
                              std::to_string(n) + ")");
          return;
        }
      }
    }
    add(inv, true, "");
  });

  return out;
}

std::vector<SuiteItem> rank3_matroid_checks() {
  std::vector<SuiteItem> out;
  const std::string item = "rank3-admissible-matroids";
  bool ok = true;
  std::string wit;
  try {
    std::vector<SignedSet> trans = transversals(3);
    for (std::uint64_t s = 1; s < (1ull << trans.size()); ++s) {
      std::vector<std::uint64_t> gens;
      std::vector<SignedSet> chosen;
      for (std::size_t i = 0; i < trans.size(); ++i)
        if (s >> i & 1) {
          gens.push_back(trans[i].bits);
          chosen.push_back(trans[i]);
        }
      IndependenceSets F = downward_closure(6, (1ull << 6) - 1, gens);
      if (!check_matroid_axioms(F).ok) continue;
      if (is_ranked_symplectic(F, 3)) {
        ok = false;
        wit = "bases " + family_text(chosen) + " satisfy every rank axiom";
        break;
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    wit = std::string("unexpected error: ") + e.what();
  }
  out.push_back({"408-admissible-bases-not-ranked", item, ok, ok ? std::string() : wit});
  return out;
}

}  // namespace

SuiteCorpus parse_corpus(const std::string& name) {
  if (name == "fixtures") return SuiteCorpus::Fixtures;
  if (name == "cn1") return SuiteCorpus::Cn1;
  if (name == "cn2") return SuiteCorpus::Cn2;
  if (name == "broken") return SuiteCorpus::Broken;
  if (name == "all") return SuiteCorpus::All;
  throw InputError("unknown corpus \"" + name + "\"");
}

bool SuiteReport::all_pass() const {
  for (const SuiteItem& e : entries)
    if (!e.pass) return false;
  return true;
}

SuiteReport run_property_suite(SuiteCorpus corpus, std::uint64_t seed, int threads) {
  std::vector<CorpusItem> items;
  std::vector<int> core_ns;
  std::vector<int> spike_ns;
  int enum_level = 0;
  bool rank3_scan = false;

  auto add_fixtures = [&] {
    for (NamedLattice& nl : standard_fixtures()) {
      const bool cn_fix =
          nl.name == "fix-a" || nl.name == "fix-b" || nl.name == "fix-c";
      items.push_back({nl.name, std::move(nl.lattice), cn_fix});
    }
  };
  auto add_stream = [&](int n, const std::string& prefix) {
    CnEnumeration e = enumerate_cn(n);
    for (std::size_t i = 0; i < e.lattices.size(); ++i)
      items.push_back({prefix + std::to_string(i), std::move(e.lattices[i]), true});
  };

  switch (corpus) {
    case SuiteCorpus::Fixtures:
      add_fixtures();
      core_ns = {1, 2, 3};
      spike_ns = {2, 3};
      break;
    case SuiteCorpus::Cn1:
      add_stream(1, "cn1-");
      core_ns = {1};
      enum_level = 1;
      break;
    case SuiteCorpus::Cn2:
      add_stream(2, "cn2-");
      core_ns = {1, 2};
      enum_level = 2;
      break;
    case SuiteCorpus::Broken:
      items.push_back({"broken", broken_lattice(), true});
      break;
    case SuiteCorpus::All:
      add_fixtures();
      add_stream(1, "cn1-");
      add_stream(2, "cn2-");
      items.push_back({"broken", broken_lattice(), true});
      core_ns = {1, 2, 3};
      spike_ns = {2, 3};
      enum_level = 2;
      rank3_scan = true;
      break;
  }

  std::vector<std::function<std::vector<SuiteItem>()>> tasks;
  for (CorpusItem& item : items)
    tasks.push_back(
        [it = std::move(item), seed] { return lattice_checks(it, seed); });
  for (int k : core_ns) tasks.push_back([k] { return core_checks(k); });
  for (int n : spike_ns) tasks.push_back([n] { return spike_checks(n); });
  if (enum_level > 0)
    tasks.push_back([enum_level] { return enumeration_checks(enum_level); });
  if (rank3_scan) tasks.push_back([] { return rank3_matroid_checks(); });

  std::vector<std::vector<SuiteItem>> results(tasks.size());
  std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
  workers = std::min(workers, tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        results[i] = tasks[i]();
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }

  SuiteReport rep;
  for (const auto& part : results)
    rep.entries.insert(rep.entries.end(), part.begin(), part.end());
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const SuiteItem& a, const SuiteItem& b) {
                     if (a.invariant != b.invariant) return a.invariant < b.invariant;
                     return a.item < b.item;
                   });
  return rep;
}

std::string suite_report_json(const SuiteReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SuiteItem& e : report.entries)
    arr.push_back({{"invariant", e.invariant},
                   {"item", e.item},
                   {"pass", e.pass},
                   {"witness", e.witness}});
  return arr.dump(2);
}

}  // namespace cnlat
