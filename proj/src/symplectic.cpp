#include "cnlat/symplectic.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace cnlat {

namespace {

std::string order_text(const GroundOrder& w) {
  std::string out;
  for (std::size_t i = 0; i < w.seq.size(); ++i) {
    if (i) out += " < ";
    out += element_name(w.seq[i], w.n);
  }
  return out;
}

std::uint64_t star_mask(std::uint64_t bits, int n) {
  const std::uint64_t lo = (n >= 64) ? ~0ull : ((1ull << n) - 1);
  return ((bits & lo) << n) | (bits >> n);
}

std::string mask_name(std::uint64_t m, int n) {
  return SignedSet{n, m}.to_string();
}

}  // namespace

CheckResult is_symplectic(const BasisFamily& B) {
  if (B.bases.empty())
    return {false, "nonempty", "a basis family must have at least one member"};
  std::vector<SignedSet> bases = B.bases;
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int k = bases.front().count();
  for (const SignedSet& b : bases) {
    if (b.n != B.n)
      return {false, "ground", b.to_string() + " lives on the wrong ground set"};
    if (b.count() != k)
      return {false, "equinumerous",
              bases.front().to_string() + " and " + b.to_string() +
                  " have different sizes"};
    if (!b.is_admissible())
      return {false, "admissible", b.to_string() + " contains a starred pair"};
  }
  for (const GroundOrder& w : admissible_orders(B.n)) {
    std::vector<SignedSet> maxima;
    for (const SignedSet& b : bases) {
      bool dominated = false;
      for (const SignedSet& m : maxima)
        if (gale_leq(b, m, w)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      maxima.erase(std::remove_if(maxima.begin(), maxima.end(),
                                  [&](const SignedSet& m) {
                                    return gale_leq(m, b, w);
                                  }),
                   maxima.end());
      maxima.push_back(b);
    }
    if (maxima.size() != 1)
      return {false, "unique-maximum",
              "order " + order_text(w) + " leaves " + maxima[0].to_string() +
                  " and " + maxima[1].to_string() + " incomparable at the top"};
  }
  return {};
}

bool is_loop_free(const BasisFamily& B) {
  std::uint64_t covered = 0;
  for (const SignedSet& b : B.bases) covered |= b.bits;
  return covered == SignedSet::full(B.n).bits;
}

CheckResult chow_check(const IndependenceSets& I, int n) {
  if (I.ground_size != 2 * n)
    throw InputError("independence family is not over a rank-" +
                     std::to_string(n) + " signed ground set");
  const std::vector<std::uint64_t> members = I.members();
  for (std::uint64_t m : members)
    if (!SignedSet{n, m}.is_admissible())
      throw InputError("independent set " + mask_name(m, n) +
                       " contains a starred pair");
  for (std::uint64_t m : members)
    for (int c = 0; c < 2 * n; ++c)
      if ((m >> c) & 1) {
        if (!I.is_independent(m & ~(1ull << c)))
          throw InputError("family is not downward closed at " +
                           mask_name(m, n));
      }
  if (!I.is_independent(0))
    throw InputError("family must contain the empty set");

  for (const SignedSet& T : transversals(n)) {
    IndependenceSets F;
    F.ground_size = I.ground_size;
    F.universe = T.bits;
    F.indep.assign(std::size_t{1} << I.ground_size, 0);
    for (std::uint64_t m : members) F.indep[m & T.bits] = 1;
    CheckResult c = check_matroid_axioms(F);
    if (!c.ok)
      return {false, "transversal-restriction",
              "restriction to " + T.to_string() + " fails (" + c.axiom +
                  "): " + c.detail};
  }

  for (std::uint64_t big : members)
    for (std::uint64_t small : members) {
      if (SignedSet{n, small}.count() >= SignedSet{n, big}.count()) continue;
      bool augmented = false;
      for (int c = 0; c < 2 * n && !augmented; ++c) {
        const std::uint64_t bit = 1ull << c;
        if ((big & bit) && !(small & bit) && I.is_independent(small | bit))
          augmented = true;
      }
      for (int c = 0; c < 2 * n && !augmented; ++c) {
        const std::uint64_t bit = 1ull << c;
        if ((big | small) & bit) continue;
        if (!I.is_independent(small | bit)) continue;
        const std::uint64_t residue = small & ~star_mask(big, n);
        const std::uint64_t swapped =
            residue | (1ull << star_code(c, n));
        if (I.is_independent(swapped)) augmented = true;
      }
      if (!augmented)
        return {false, "augmentation",
                mask_name(small, n) + " cannot be augmented from " +
                    mask_name(big, n)};
    }
  return {};
}

namespace {

struct GroundNbbContext {
  const SetLattice* L = nullptr;
  int n = 0;
  std::uint64_t universe = 0;
  std::vector<int> codes;
  std::vector<int> atom_of;        // per code; -1 when no atom contains it
  int atom_count = 0;
  std::vector<std::uint64_t> join_bits;  // memo: element bits of the closure

  std::uint64_t closure_bits(std::uint64_t m) {
    if (join_bits[m] != ~0ull) return join_bits[m];
    int idx = L->upper_min(m);
    std::uint64_t out = (idx < 0) ? 0 : L->elems[idx].bits;
    join_bits[m] = out;
    return out;
  }

  bool distinct_atoms(std::uint64_t m) const {
    std::uint64_t seen = 0;
    for (std::uint64_t rest = m; rest;) {
      const int c = std::countr_zero(rest);
      rest &= rest - 1;
      const int a = atom_of[c];
      if (a < 0) return false;
      if ((seen >> a) & 1) return false;
      seen |= 1ull << a;
    }
    return true;
  }

  bool meets_every_atom(std::uint64_t m) const {
    std::uint64_t seen = 0;
    for (std::uint64_t rest = m; rest;) {
      const int c = std::countr_zero(rest);
      rest &= rest - 1;
      const int a = atom_of[c];
      if (a >= 0) seen |= 1ull << a;
    }
    return std::popcount(seen) == atom_count;
  }

  bool disjoint(std::uint64_t m, DisjointConvention conv) const {
    return conv == DisjointConvention::DistinctAtoms ? distinct_atoms(m)
                                                     : meets_every_atom(m);
  }
};

GroundNbbContext ground_context(const SetLattice& L) {
  if (!L.unique_bounds || !L.lattice_ok)
    throw InputError("ground-level independence needs a bounded lattice: " +
                     L.structure_note);
  GroundNbbContext ctx;
  ctx.L = &L;
  ctx.n = L.n;
  ctx.universe = L.ground.bits;
  for (int c = 0; c < 2 * L.n; ++c)
    if ((ctx.universe >> c) & 1) ctx.codes.push_back(c);
  ctx.atom_of.assign(2 * L.n, -1);
  ctx.atom_count = static_cast<int>(L.atoms.size());
  for (std::size_t a = 0; a < L.atoms.size(); ++a) {
    const std::uint64_t bits = L.elems[L.atoms[a]].bits;
    for (std::uint64_t rest = bits; rest;) {
      const int c = std::countr_zero(rest);
      rest &= rest - 1;
      if (ctx.atom_of[c] == -1) ctx.atom_of[c] = static_cast<int>(a);
    }
  }
  ctx.join_bits.assign(std::size_t{1} << (2 * L.n), ~0ull);
  return ctx;
}

int min_pos_of(std::uint64_t m, const std::vector<int>& pos) {
  int best = 1 << 20;
  for (std::uint64_t rest = m; rest;) {
    const int c = std::countr_zero(rest);
    rest &= rest - 1;
    best = std::min(best, pos[c]);
  }
  return best;
}

// D is bounded below when its members are spread per the convention and some
// ground element of the closure sits strictly before all of D.
bool ground_bb(GroundNbbContext& ctx, std::uint64_t D,
               const std::vector<int>& pos, DisjointConvention conv) {
  if (D == 0) return false;
  if (!ctx.disjoint(D, conv)) return false;
  const std::uint64_t cl = ctx.closure_bits(D);
  return min_pos_of(cl & ctx.universe, pos) < min_pos_of(D, pos);
}

bool ground_nbb(GroundNbbContext& ctx, std::uint64_t X,
                const std::vector<int>& pos, DisjointConvention conv) {
  for (std::uint64_t D = X; D; D = (D - 1) & X)
    if (ground_bb(ctx, D, pos, conv)) return false;
  return true;
}

IndependenceSets ground_family_fast(GroundNbbContext& ctx,
                                    DisjointConvention conv) {
  const int g = 2 * ctx.n;
  IndependenceSets F;
  F.ground_size = g;
  F.universe = ctx.universe;
  F.indep.assign(std::size_t{1} << g, 0);
  F.indep[0] = 1;

  std::vector<std::vector<std::uint64_t>> by_size(ctx.codes.size() + 1);
  for (std::uint64_t m = ctx.universe; m; m = (m - 1) & ctx.universe)
    by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);

  std::vector<int> pos(g, 0);
  for (std::size_t s = 1; s < by_size.size(); ++s)
    for (std::uint64_t X : by_size[s]) {
      bool hereditary = true;
      for (std::uint64_t rest = X; rest && hereditary;) {
        const std::uint64_t low = rest & (rest - 1);
        if (!F.indep[X & ~(rest ^ low)]) hereditary = false;
        rest = low;
      }
      if (!hereditary) continue;
      if (conv == DisjointConvention::DistinctAtoms && !ctx.distinct_atoms(X))
        continue;
      std::vector<int> elems;
      for (std::uint64_t rest = X; rest;) {
        elems.push_back(std::countr_zero(rest));
        rest &= rest - 1;
      }
      const int t = static_cast<int>(elems.size());
      do {
        std::fill(pos.begin(), pos.end(), t);
        for (int i = 0; i < t; ++i) pos[elems[static_cast<std::size_t>(i)]] = i;
        if (ground_nbb(ctx, X, pos, conv)) {
          F.indep[X] = 1;
          break;
        }
      } while (std::next_permutation(elems.begin(), elems.end()));
    }
  return F;
}

IndependenceSets ground_family_oracle(GroundNbbContext& ctx,
                                      DisjointConvention conv) {
  const int g = 2 * ctx.n;
  IndependenceSets F;
  F.ground_size = g;
  F.universe = ctx.universe;
  F.indep.assign(std::size_t{1} << g, 0);
  F.indep[0] = 1;

  std::vector<int> order = ctx.codes;
  std::sort(order.begin(), order.end());
  std::vector<int> pos(g, 0);
  std::vector<char> ok(std::size_t{1} << g, 0);
  do {
    for (std::size_t i = 0; i < order.size(); ++i)
      pos[order[i]] = static_cast<int>(i);
    ok[0] = 1;
    for (std::uint64_t m = 1; m < (1ull << g); ++m) {
      if (m & ~ctx.universe) continue;
      bool sub_ok = true;
      for (std::uint64_t rest = m; rest && sub_ok;) {
        const std::uint64_t low = rest & (rest - 1);
        if (!ok[m & ~(rest ^ low)]) sub_ok = false;
        rest = low;
      }
      ok[m] = sub_ok && !ground_bb(ctx, m, pos, conv);
      if (ok[m]) F.indep[m] = 1;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  if (conv == DisjointConvention::DistinctAtoms)
    for (std::uint64_t m = 1; m < (1ull << g); ++m)
      if (F.indep[m] && !ctx.distinct_atoms(m)) F.indep[m] = 0;
  return F;
}

}  // namespace

IndependenceSets ground_nbb_family(const SetLattice& L, NbbStrategy strategy,
                                   DisjointConvention conv) {
  GroundNbbContext ctx = ground_context(L);
  return strategy == NbbStrategy::Fast ? ground_family_fast(ctx, conv)
                                       : ground_family_oracle(ctx, conv);
}

IndependenceSets ground_independents(const SetLattice& L, NbbStrategy strategy,
                                     DisjointConvention conv) {
  CheckResult c = is_cn_lattice(L);
  if (!c.ok)
    throw InputError("ground independents need a signed-set lattice (" +
                     c.axiom + "): " + c.detail);
  return ground_nbb_family(L, strategy, conv);
}

IndependenceSets admissible_independents(const SetLattice& L,
                                         NbbStrategy strategy) {
  IndependenceSets F = ground_independents(L, strategy);
  for (std::uint64_t m = 0; m < (1ull << F.ground_size); ++m)
    if (F.indep[m] && !SignedSet{L.n, m}.is_admissible()) F.indep[m] = 0;
  return F;
}

BasisFamily lattice_to_symplectic(const SetLattice& L) {
  CheckResult c = is_cn_lattice(L);
  if (!c.ok)
    throw InputError("basis extraction needs a signed-set lattice (" +
                     c.axiom + "): " + c.detail);
  std::size_t admissible_count = 0;
  for (std::uint64_t m = L.ground.bits;; m = (m - 1) & L.ground.bits) {
    if (SignedSet{L.n, m}.is_admissible()) ++admissible_count;
    if (m == 0) break;
  }
  if (L.elems.size() == admissible_count + 1)
    throw InputError(
        "the lattice of all admissible sets shares its maximal independents "
        "with a smaller lattice; basis extraction is not injective there");
  IndependenceSets F = admissible_independents(L);
  BasisFamily B;
  B.n = L.n;
  for (std::uint64_t m : F.maximal_members()) B.bases.push_back({L.n, m});
  std::sort(B.bases.begin(), B.bases.end());
  return B;
}

IndependenceSets nonadmissible_extension(const IndependenceSets& I_ad,
                                         int rank_L) {
  const int g = I_ad.ground_size;
  const int n = g / 2;
  std::vector<int> parent(static_cast<std::size_t>(g));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int x = 0; x < g; ++x)
    for (int y = x + 1; y < g; ++y) {
      if (!((I_ad.universe >> x) & 1) || !((I_ad.universe >> y) & 1)) continue;
      if (star_code(x, n) == y) continue;
      if (!I_ad.is_independent((1ull << x) | (1ull << y)))
        parent[static_cast<std::size_t>(find(x))] = find(y);
    }

  IndependenceSets out = I_ad;
  for (std::uint64_t m : I_ad.members()) {
    if (std::popcount(m) + 1 > rank_L) continue;
    std::uint64_t classes = 0;
    for (std::uint64_t rest = m; rest;) {
      const int c = std::countr_zero(rest);
      rest &= rest - 1;
      classes |= 1ull << find(c);
    }
    for (std::uint64_t rest = m; rest;) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      const int as = star_code(a, n);
      if (!((I_ad.universe >> as) & 1)) continue;
      if ((classes >> find(as)) & 1) continue;
      out.indep[m | (1ull << as)] = 1;
    }
  }
  return out;
}

SymplecticRank symplectic_rank(const IndependenceSets& I, int d) {
  const int g = I.ground_size;
  const int n = g / 2;
  SymplecticRank R;
  R.n = n;
  R.d = d;
  R.universe = I.universe;
  R.r.assign(std::size_t{1} << g, 0);

  int max_size = 0;
  for (std::uint64_t m : I.members())
    max_size = std::max(max_size, std::popcount(m));
  if (d < max_size)
    throw InputError("rank bound " + std::to_string(d) +
                     " is below the largest independent set (size " +
                     std::to_string(max_size) + ")");

  for (std::uint64_t A = 0; A < (1ull << g); ++A) {
    int best = 0;
    for (std::uint64_t sub = A;; sub = (sub - 1) & A) {
      if (I.is_independent(sub)) {
        int f = std::popcount(sub);
        bool bump = false;
        for (std::uint64_t rest = sub; rest && !bump;) {
          const int a = std::countr_zero(rest);
          rest &= rest - 1;
          const int as = star_code(a, n);
          if (!((A >> as) & 1)) continue;
          bool pairs_ok = true;
          for (std::uint64_t r2 = sub & ~(1ull << a); r2 && pairs_ok;) {
            const int b = std::countr_zero(r2);
            r2 &= r2 - 1;
            if (!I.is_independent((1ull << as) | (1ull << b))) pairs_ok = false;
          }
          if (pairs_ok) bump = true;
        }
        if (bump) ++f;
        best = std::max(best, f);
      }
      if (sub == 0) break;
    }
    R.r[A] = std::min(d, best);
  }
  return R;
}

SymplecticRank symplectic_rank(const IndependenceSets& I) {
  return symplectic_rank(I, I.max_size());
}

SymplecticRank symplectic_rank_simple(const IndependenceSets& I, int d) {
  const int g = I.ground_size;
  const int n = g / 2;
  RankOracle M = rank_from_independents(I);
  SymplecticRank R;
  R.n = n;
  R.d = d;
  R.universe = I.universe;
  R.r.assign(std::size_t{1} << g, 0);
  for (std::uint64_t A = 0; A < (1ull << g); ++A) {
    const int m = M.rank(A);
    R.r[A] = SignedSet{n, A}.is_admissible() ? m : std::min(m + 1, d);
  }
  return R;
}

bool family_is_simple(const IndependenceSets& I) {
  const int n = I.ground_size / 2;
  for (int x = 0; x < I.ground_size; ++x) {
    if (!((I.universe >> x) & 1)) continue;
    if (!I.is_independent(1ull << x)) return false;
    for (int y = x + 1; y < I.ground_size; ++y) {
      if (!((I.universe >> y) & 1)) continue;
      if (star_code(x, n) == y) continue;
      if (!I.is_independent((1ull << x) | (1ull << y))) return false;
    }
  }
  return true;
}

bool RankAxioms::has(const std::string& axiom) const {
  for (const CheckResult& v : violations)
    if (v.axiom == axiom) return true;
  return false;
}

RankAxioms rank_axioms(const SymplecticRank& R) {
  RankAxioms out;
  const int g = 2 * R.n;
  auto record = [&](const std::string& axiom, const std::string& detail) {
    if (!out.has(axiom)) out.violations.push_back({false, axiom, detail});
    out.ok = false;
  };

  if (R.r[0] != 0)
    record("normalization", "empty set has rank " + std::to_string(R.r[0]));

  for (int c = 0; c < g; ++c) {
    if (R.r[1ull << c] != 1) {
      record("loop", element_name(c, R.n) + " has rank " +
                         std::to_string(R.r[1ull << c]));
      break;
    }
  }

  bool unit_done = false;
  for (std::uint64_t m = 0; m < (1ull << g) && !unit_done; ++m)
    for (int c = 0; c < g; ++c) {
      if ((m >> c) & 1) continue;
      const std::uint64_t up = m | (1ull << c);
      if (R.r[up] < R.r[m] || R.r[up] > R.r[m] + 1) {
        record("unit-increase",
               "rank goes from " + std::to_string(R.r[m]) + " at " +
                   mask_name(m, R.n) + " to " + std::to_string(R.r[up]) +
                   " after adding " + element_name(c, R.n));
        unit_done = true;
        break;
      }
    }

  bool sub_done = false;
  for (std::uint64_t a = 0; a < (1ull << g) && !sub_done; ++a)
    for (std::uint64_t b = a + 1; b < (1ull << g); ++b)
      if (R.r[a | b] + R.r[a & b] > R.r[a] + R.r[b]) {
        record("submodular",
               "A=" + mask_name(a, R.n) + " B=" + mask_name(b, R.n) +
                   " give r(A∪B)+r(A∩B)=" +
                   std::to_string(R.r[a | b] + R.r[a & b]) +
                   " > r(A)+r(B)=" + std::to_string(R.r[a] + R.r[b]));
        sub_done = true;
        break;
      }
  return out;
}

bool is_ranked_symplectic(const IndependenceSets& I, int d) {
  return rank_axioms(symplectic_rank(I, d)).ok;
}

SetLattice symplectic_to_lattice(const IndependenceSets& I, int d) {
  SymplecticRank R = symplectic_rank(I, d);
  RankAxioms ax = rank_axioms(R);
  if (!ax.ok)
    throw InputError("induced rank is not a loop-free matroid rank (" +
                     ax.violations.front().axiom +
                     "): " + ax.violations.front().detail);
  RankOracle M;
  M.ground_size = 2 * R.n;
  M.universe = (1ull << (2 * R.n)) - 1;
  M.r = R.r;
  std::vector<SignedSet> elems;
  for (std::uint64_t f : matroid_flats(M)) {
    SignedSet s{R.n, f};
    if (s.is_admissible()) elems.push_back(s);
  }
  elems.push_back(SignedSet::full(R.n));
  return build_lattice(R.n, elems);
}

std::vector<SignedSet> ground_flat_lattice(const SetLattice& L) {
  IndependenceSets F = ground_independents(L);
  RankOracle M = rank_from_independents(F);
  std::vector<SignedSet> out;
  for (std::uint64_t f : matroid_flats(M)) out.push_back({L.n, f});
  return out;
}

AdmissibleRankAgreement admissible_rank_agreement(const IndependenceSets& M,
                                                  int n) {
  if (M.ground_size != 2 * n)
    throw InputError("matroid is not over a rank-" + std::to_string(n) +
                     " signed ground set");
  CheckResult c = check_matroid_axioms(M);
  if (!c.ok)
    throw InputError("independence family is not a matroid (" + c.axiom +
                     "): " + c.detail);
  RankOracle RM = rank_from_independents(M);
  const int d = RM.rank(M.universe);

  IndependenceSets I_ad = M;
  for (std::uint64_t m = 0; m < (1ull << M.ground_size); ++m)
    if (I_ad.indep[m] && !SignedSet{n, m}.is_admissible()) I_ad.indep[m] = 0;

  SymplecticRank R = symplectic_rank(I_ad, d);
  AdmissibleRankAgreement out;
  out.bases.n = n;
  for (std::uint64_t b : M.members())
    if (std::popcount(b) == d && SignedSet{n, b}.is_admissible())
      out.bases.bases.push_back({n, b});
  std::sort(out.bases.bases.begin(), out.bases.bases.end());

  for (std::uint64_t A = 0; A < (1ull << M.ground_size); ++A) {
    if (A & ~M.universe) continue;
    if (RM.rank(A) != R.rank(A)) {
      out.ok = false;
      out.witness = SignedSet{n, A};
      out.matroid_rank = RM.rank(A);
      out.induced_rank = R.rank(A);
      return out;
    }
  }
  return out;
}

}  // namespace cnlat
