#include "cnlat/nbb.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cnlat {

namespace {

void require_structure(const SetLattice& L) {
  if (!L.unique_bounds) throw InputError("lattice is not bounded: " + L.structure_note);
  if (!L.lattice_ok) throw InputError("family is not a lattice: " + L.structure_note);
  if (!L.graded) throw InputError("lattice is not graded: " + L.structure_note);
  if (!L.atomistic) throw InputError("lattice is not atomistic: " + L.structure_note);
}

int min_pos(std::uint64_t D, const std::vector<int>& pos) {
  int best = INT32_MAX;
  for (int a = 0; a < static_cast<int>(pos.size()); ++a)
    if (D >> a & 1) best = std::min(best, pos[a]);
  return best;
}

}  // namespace

int AtomContext::join_atoms(std::uint64_t D) const {
  int& slot = join_memo[D];
  if (slot != -2) return slot;
  std::uint64_t bits = L->elems[base].bits;
  for (int a = 0; a < t(); ++a)
    if (D >> a & 1) bits |= L->elems[atom_idx[a]].bits;
  slot = L->upper_min(bits);
  return slot;
}

std::string AtomContext::atom_set_text(std::uint64_t D) const {
  std::string out = "{";
  bool first = true;
  for (int a = 0; a < t(); ++a) {
    if (!(D >> a & 1)) continue;
    if (!first) out += ",";
    first = false;
    out += L->name_of(atom_idx[a]);
  }
  return out + "}";
}

AtomContext atom_context(const SetLattice& L, int base) {
  if (base < 0 || base >= L.size()) throw InputError("interval base out of range");
  AtomContext ctx;
  ctx.L = &L;
  ctx.base = base;
  ctx.atom_idx = L.up[base];
  if (ctx.t() > kMaxAtoms) throw InputError("more than 8 atoms is unsupported");
  ctx.atoms_below.assign(L.size(), 0);
  for (int e = 0; e < L.size(); ++e)
    for (int a = 0; a < ctx.t(); ++a)
      if (L.leq(ctx.atom_idx[a], e)) ctx.atoms_below[e] |= 1ull << a;
  ctx.join_memo.assign(1ull << ctx.t(), -2);
  return ctx;
}

bool is_bounded_below(const AtomContext& ctx, std::uint64_t D,
                      const std::vector<int>& pos) {
  if (D == 0) return false;
  int j = ctx.join_atoms(D);
  if (j < 0) throw InputError("join of " + ctx.atom_set_text(D) + " is undefined");
  std::uint64_t witnesses = ctx.atoms_below[j];
  int mp = min_pos(D, pos);
  for (int a = 0; a < ctx.t(); ++a)
    if ((witnesses >> a & 1) && pos[a] < mp) return true;
  return false;
}

bool is_nbb(const AtomContext& ctx, std::uint64_t B, const std::vector<int>& pos) {
  std::uint64_t D = B;
  while (D != 0) {
    if (is_bounded_below(ctx, D, pos)) return false;
    D = (D - 1) & B;
  }
  return true;
}

namespace {

IndependenceSets family_oracle(const AtomContext& ctx) {
  const int t = ctx.t();
  IndependenceSets F = empty_family(t, t == 0 ? 0 : (1ull << t) - 1);
  std::vector<int> order(t);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(t);
  do {
    for (int i = 0; i < t; ++i) pos[order[i]] = i;
    std::vector<char> ok(1ull << t, 0);
    ok[0] = 1;
    for (std::uint64_t m = 1; m < (1ull << t); ++m) {
      bool good = true;
      for (int a = 0; a < t && good; ++a)
        if ((m >> a & 1) && !ok[m & ~(1ull << a)]) good = false;
      if (good && !is_bounded_below(ctx, m, pos)) ok[m] = 1;
      if (ok[m]) F.indep[m] = 1;
    }
    F.indep[0] = 1;
  } while (std::next_permutation(order.begin(), order.end()));
  if (t == 0) F.indep[0] = 1;
  return F;
}

IndependenceSets family_fast(const AtomContext& ctx) {
  const int t = ctx.t();
  IndependenceSets F = empty_family(t, t == 0 ? 0 : (1ull << t) - 1);
  F.indep[0] = 1;
  std::vector<std::vector<std::uint64_t>> by_size(t + 1);
  for (std::uint64_t m = 1; m < (1ull << t); ++m)
    by_size[std::popcount(m)].push_back(m);
  for (int size = 1; size <= t; ++size) {
    for (std::uint64_t B : by_size[size]) {
      bool hereditary = true;
      for (int a = 0; a < t && hereditary; ++a)
        if ((B >> a & 1) && !F.indep[B & ~(1ull << a)]) hereditary = false;
      if (!hereditary) continue;
      std::vector<int> members;
      for (int a = 0; a < t; ++a)
        if (B >> a & 1) members.push_back(a);
      std::vector<int> pos(t, t);
      std::sort(members.begin(), members.end());
      do {
        for (int i = 0; i < size; ++i) pos[members[i]] = i;
        if (is_nbb(ctx, B, pos)) {
          F.indep[B] = 1;
          break;
        }
      } while (std::next_permutation(members.begin(), members.end()));
    }
  }
  return F;
}

}  // namespace

IndependenceSets independence_family_interval(const SetLattice& L, int base,
                                              NbbStrategy strategy) {
  require_structure(L);
  AtomContext ctx = atom_context(L, base);
  return strategy == NbbStrategy::Oracle ? family_oracle(ctx) : family_fast(ctx);
}

IndependenceSets independence_family_atoms(const SetLattice& L, NbbStrategy strategy) {
  require_structure(L);
  return independence_family_interval(L, L.bottom, strategy);
}

MatroidHandle matroid_from_family(const IndependenceSets& F) {
  CheckResult c = check_matroid_axioms(F);
  if (!c.ok)
    throw InputError("independence axioms fail (" + c.axiom + "): " + c.detail);
  return {F, rank_from_independents(F)};
}

InducedGeometric induce_geometric(const SetLattice& L) {
  require_structure(L);
  AtomContext ctx = atom_context(L, L.bottom);
  IndependenceSets F = family_fast(ctx);
  MatroidHandle M = matroid_from_family(F);
  const int t = ctx.t();
  const int half = (t + 1) / 2;
  SignedSet ground(half, t == 0 ? 0 : (1ull << t) - 1);
  std::vector<SignedSet> elems;
  for (std::uint64_t f : matroid_flats(M.rank)) elems.emplace_back(half, f);
  InducedGeometric out;
  out.lattice = build_lattice(half, std::move(elems), ground);
  out.lattice.code_names.assign(2 * half, "");
  for (int a = 0; a < t; ++a) out.lattice.code_names[a] = L.name_of(ctx.atom_idx[a]);
  out.image_of = ctx.atoms_below;
  return out;
}

CheckResult is_geometric_by_independents(const SetLattice& L) {
  require_structure(L);
  AtomContext ctx = atom_context(L, L.bottom);
  IndependenceSets F = family_fast(ctx);
  for (std::uint64_t I : F.members()) {
    if (I == 0) continue;
    int j = ctx.join_atoms(I);
    if (L.rank(j) != std::popcount(I))
      return {false, "size-rank",
              "independent set " + ctx.atom_set_text(I) + " has size " +
                  std::to_string(std::popcount(I)) + " but rank " +
                  std::to_string(L.rank(j))};
  }
  return {true, "", ""};
}

}  // namespace cnlat
