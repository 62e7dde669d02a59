#include "cnlat/lattice.hpp"

#include <algorithm>
#include <bit>

namespace cnlat {

namespace {

std::string set_text(const SetLattice& L, std::uint64_t bits) {
  std::string out = "{";
  bool first = true;
  for (int c = 0; c < 2 * L.n; ++c) {
    if (!(bits >> c & 1)) continue;
    if (!first) out += ",";
    first = false;
    if (c < static_cast<int>(L.code_names.size()) && !L.code_names[c].empty())
      out += L.code_names[c];
    else
      out += element_name(c, L.n);
  }
  return out + "}";
}

}  // namespace

int SetLattice::index_of(const SignedSet& s) const {
  for (int i = 0; i < size(); ++i)
    if (elems[i].bits == s.bits) return i;
  return -1;
}

int SetLattice::upper_min(std::uint64_t mask) const {
  int best = -1;
  for (int i = 0; i < size(); ++i) {
    if ((elems[i].bits & mask) != mask) continue;
    if (best == -1 || elems[i].count() < elems[best].count()) best = i;
  }
  if (best == -1) return -1;
  for (int i = 0; i < size(); ++i) {
    if ((elems[i].bits & mask) != mask) continue;
    if (!leq(best, i)) return -1;
  }
  return best;
}

int SetLattice::join_of(const std::vector<int>& idxs) const {
  std::uint64_t mask = 0;
  for (int i : idxs) mask |= elems[i].bits;
  if (idxs.empty()) return bottom;
  return upper_min(mask);
}

std::string SetLattice::name_of(int idx) const {
  if (idx < 0) return "(none)";
  if (idx < static_cast<int>(elem_names.size()) && !elem_names[idx].empty())
    return elem_names[idx];
  return set_text(*this, elems[idx].bits);
}

SetLattice build_lattice(int n, std::vector<SignedSet> elems) {
  return build_lattice(n, std::move(elems), SignedSet::full(n));
}

SetLattice build_lattice(int n, std::vector<SignedSet> elems, SignedSet ground) {
  SetLattice L;
  L.n = n;
  L.ground = ground;
  for (const auto& e : elems) {
    if (e.n != n) throw InputError("set over a different ground size");
    if (!e.is_subset_of(ground))
      throw InputError("set " + e.to_string() + " is not contained in the ground set");
  }
  std::sort(elems.begin(), elems.end(), [](const SignedSet& a, const SignedSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
  });
  for (std::size_t i = 1; i < elems.size(); ++i)
    if (elems[i].bits == elems[i - 1].bits)
      throw InputError("duplicate element " + elems[i].to_string());
  L.elems = std::move(elems);
  const int v = L.size();
  if (v == 0) {
    L.structure_note = "empty family";
    return L;
  }

  L.up.assign(v, {});
  L.down.assign(v, {});
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      if (a == b || !L.leq(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < v; ++c) {
        if (c == a || c == b) continue;
        if (L.leq(a, c) && L.leq(c, b)) {
          covered = false;
          break;
        }
      }
      if (covered) {
        L.up[a].push_back(b);
        L.down[b].push_back(a);
      }
    }
  }

  int minima = 0, maxima = 0;
  for (int a = 0; a < v; ++a) {
    if (L.down[a].empty()) {
      ++minima;
      L.bottom = a;
    }
    if (L.up[a].empty()) {
      ++maxima;
      L.top = a;
    }
  }
  L.unique_bounds = (minima == 1 && maxima == 1);
  if (!L.unique_bounds) {
    L.bottom = L.top = -1;
    L.structure_note = "no unique bounds";
  }

  L.rank_of.assign(v, 0);
  for (int a = 0; a < v; ++a)  // elems sorted by size, so below come first
    for (int b : L.down[a]) L.rank_of[a] = std::max(L.rank_of[a], L.rank_of[b] + 1);

  L.graded = L.unique_bounds;
  for (int a = 0; a < v && L.graded; ++a)
    for (int b : L.up[a])
      if (L.rank_of[b] != L.rank_of[a] + 1) {
        L.graded = false;
        if (L.structure_note.empty())
          L.structure_note = "cover " + L.name_of(a) + " < " + L.name_of(b) +
                             " skips a rank level";
      }

  if (L.unique_bounds) L.atoms = L.up[L.bottom];

  L.meet_tab.assign(static_cast<std::size_t>(v) * v, -1);
  L.join_tab.assign(static_cast<std::size_t>(v) * v, -1);
  L.lattice_ok = true;
  L.meets_are_intersections = true;
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      int meet = -1, join = -1;
      int low = 0, high = 0;
      for (int c = 0; c < v; ++c) {
        if (L.leq(c, a) && L.leq(c, b)) {
          ++low;
          if (meet == -1 || L.leq(meet, c)) meet = c;
        }
        if (L.leq(a, c) && L.leq(b, c)) {
          ++high;
          if (join == -1 || L.leq(c, join)) join = c;
        }
      }
      int below = 0, above = 0;
      for (int c = 0; c < v; ++c) {
        if (meet != -1 && L.leq(c, a) && L.leq(c, b) && L.leq(c, meet)) ++below;
        if (join != -1 && L.leq(a, c) && L.leq(b, c) && L.leq(join, c)) ++above;
      }
      if (meet == -1 || below != low) meet = -1;
      if (join == -1 || above != high) join = -1;
      L.meet_tab[static_cast<std::size_t>(a) * v + b] = meet;
      L.join_tab[static_cast<std::size_t>(a) * v + b] = join;
      if (meet == -1 || join == -1) {
        L.lattice_ok = false;
        L.meets_are_intersections = false;
        if (L.structure_note.empty())
          L.structure_note = "meet or join of " + L.name_of(a) + " and " +
                             L.name_of(b) + " is undefined";
      } else if (L.elems[meet].bits != (L.elems[a].bits & L.elems[b].bits)) {
        L.meets_are_intersections = false;
      }
    }
  }

  L.atomistic = L.unique_bounds;
  for (int a = 0; a < v && L.atomistic; ++a) {
    std::uint64_t mask = 0;
    for (int at : L.atoms)
      if (L.leq(at, a)) mask |= L.elems[at].bits;
    int j = L.upper_min(mask);
    if (j != a) {
      L.atomistic = false;
      if (L.structure_note.empty())
        L.structure_note = L.name_of(a) + " is not a join of atoms";
    }
  }
  return L;
}

CheckResult is_geometric_lattice(const SetLattice& L) {
  const int v = L.size();
  bool has_bottom = false, has_top = false;
  for (int i = 0; i < v; ++i) {
    if (L.elems[i].bits == 0) has_bottom = true;
    if (L.elems[i].bits == L.ground.bits) has_top = true;
  }
  if (!has_bottom || !has_top)
    return {false, "bounds",
            std::string(!has_bottom ? "empty set" : "ground set") + " is missing"};
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) {
      SignedSet cap = L.elems[a].intersect(L.elems[b]);
      if (L.index_of(cap) == -1)
        return {false, "intersection-closed",
                L.name_of(a) + " and " + L.name_of(b) + " meet outside the family"};
    }
  for (int a = 0; a < v; ++a) {
    if (L.elems[a].bits == L.ground.bits) continue;
    const auto& cov = L.up[a];
    for (std::size_t i = 0; i < cov.size(); ++i)
      for (std::size_t j = i + 1; j < cov.size(); ++j) {
        SignedSet cap = L.elems[cov[i]].intersect(L.elems[cov[j]]);
        if (cap.bits != L.elems[a].bits)
          return {false, "cover-intersection",
                  "covers " + L.name_of(cov[i]) + " and " + L.name_of(cov[j]) +
                      " of " + L.name_of(a) + " meet above it"};
      }
    std::uint64_t uni = 0;
    for (int c : cov) uni |= L.elems[c].bits;
    if (uni != L.ground.bits)
      return {false, "cover-union",
              "covers of " + L.name_of(a) + " miss " +
                  set_text(L, L.ground.bits & ~uni)};
  }
  return {true, "", ""};
}

CheckResult geometric_structure_check(const SetLattice& L) {
  if (!L.unique_bounds) return {false, "bounded", L.structure_note};
  if (!L.lattice_ok) return {false, "lattice", L.structure_note};
  if (!L.graded) return {false, "graded", L.structure_note};
  if (!L.atomistic) return {false, "atomistic", L.structure_note};
  const int v = L.size();
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b) {
      int m = L.meet(a, b), j = L.join(a, b);
      if (L.rank(a) + L.rank(b) < L.rank(j) + L.rank(m))
        return {false, "submodular",
                "rank(" + L.name_of(a) + ") + rank(" + L.name_of(b) +
                    ") < rank of their join plus meet"};
    }
  return {true, "", ""};
}

CheckResult is_cn_lattice(const SetLattice& L) {
  const int v = L.size();
  int ground_idx = -1;
  bool has_bottom = false;
  for (int i = 0; i < v; ++i) {
    if (L.elems[i].bits == 0) has_bottom = true;
    if (L.elems[i].bits == L.ground.bits) ground_idx = i;
  }
  if (!has_bottom || ground_idx == -1)
    return {false, "bounds",
            std::string(!has_bottom ? "empty set" : "ground set") + " is missing"};
  for (int i = 0; i < v; ++i) {
    if (i == ground_idx) continue;
    if (!L.elems[i].is_admissible())
      return {false, "admissible",
              L.name_of(i) + " contains an element together with its pair"};
  }
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) {
      SignedSet cap = L.elems[a].intersect(L.elems[b]);
      if (L.index_of(cap) == -1)
        return {false, "intersection-closed",
                L.name_of(a) + " and " + L.name_of(b) + " meet outside the family"};
    }
  for (int a = 0; a < v; ++a) {
    const auto& cov = L.up[a];
    bool covered_by_ground = false;
    for (int c : cov)
      if (c == ground_idx) covered_by_ground = true;
    if (covered_by_ground) continue;
    for (std::size_t i = 0; i < cov.size(); ++i)
      for (std::size_t j = i + 1; j < cov.size(); ++j) {
        SignedSet cap = L.elems[cov[i]].intersect(L.elems[cov[j]]);
        if (cap.bits != L.elems[a].bits)
          return {false, "cover-intersection",
                  "covers " + L.name_of(cov[i]) + " and " + L.name_of(cov[j]) +
                      " of " + L.name_of(a) + " meet above it"};
      }
    std::uint64_t uni = 0;
    for (int c : cov) uni |= L.elems[c].bits;
    std::uint64_t want = L.ground.bits & ~(L.elems[a].star().bits);
    if (uni != want)
      return {false, "cover-union",
              "covers of " + L.name_of(a) + " union to " + set_text(L, uni) +
                  " instead of " + set_text(L, want)};
  }
  return {true, "", ""};
}

SetLattice interval_restrict(const SetLattice& L, int a_idx) {
  if (a_idx < 0 || a_idx >= L.size()) throw InputError("interval base out of range");
  SignedSet a = L.elems[a_idx];
  std::uint64_t removed = a.bits | a.star().bits;
  SignedSet ground(L.n, L.ground.bits & ~removed);
  std::vector<SignedSet> elems;
  for (int i = 0; i < L.size(); ++i) {
    if (!L.leq(a_idx, i)) continue;
    SignedSet img(L.n, L.elems[i].bits & ground.bits);
    bool seen = false;
    for (const auto& e : elems)
      if (e.bits == img.bits) seen = true;
    if (!seen) elems.push_back(img);
  }
  return build_lattice(L.n, std::move(elems), ground);
}

ChainComplex order_complex(const SetLattice& L, bool proper_part) {
  ChainComplex C;
  const int v = L.size();
  std::vector<int> verts;
  for (int i = 0; i < v; ++i) {
    if (proper_part && (i == L.bottom || i == L.top)) continue;
    verts.push_back(i);
  }
  C.vertex_elem = verts;
  const int m = static_cast<int>(verts.size());
  std::vector<std::vector<int>> succ(m);
  std::vector<bool> has_pred(m, false);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y || !L.leq(verts[x], verts[y])) continue;
      bool covers = true;
      for (int z = 0; z < m && covers; ++z)
        if (z != x && z != y && L.leq(verts[x], verts[z]) && L.leq(verts[z], verts[y]))
          covers = false;
      if (covers) {
        succ[x].push_back(y);
        has_pred[y] = true;
      }
    }
  std::vector<int> chain;
  auto dfs = [&](auto&& self, int x) -> void {
    chain.push_back(x);
    if (succ[x].empty()) {
      C.facets.push_back(chain);
    } else {
      for (int y : succ[x]) self(self, y);
    }
    chain.pop_back();
  };
  for (int x = 0; x < m; ++x)
    if (!has_pred[x]) dfs(dfs, x);
  std::sort(C.facets.begin(), C.facets.end());
  C.pure = true;
  for (const auto& f : C.facets) {
    C.dim = std::max(C.dim, static_cast<int>(f.size()) - 1);
    if (f.size() != C.facets.front().size()) C.pure = false;
  }
  return C;
}

}  // namespace cnlat
