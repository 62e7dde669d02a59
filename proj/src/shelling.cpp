#include "cnlat/shelling.hpp"

#include "cnlat/nbb.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace cnlat {

namespace {

std::string facet_text(const std::vector<int>& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(f[i]);
  }
  return out + ")";
}

// The new facet must meet the union of the placed ones so that every maximal
// common face has exactly one vertex fewer than the facet itself.
bool shelling_step(const std::vector<std::vector<int>>& facets,
                   const std::vector<int>& placed, int f, std::string* why) {
  const std::vector<int>& F = facets[static_cast<std::size_t>(f)];
  std::vector<std::vector<int>> inters;
  for (int i : placed) {
    std::vector<int> I;
    std::set_intersection(F.begin(), F.end(),
                          facets[static_cast<std::size_t>(i)].begin(),
                          facets[static_cast<std::size_t>(i)].end(),
                          std::back_inserter(I));
    inters.push_back(std::move(I));
  }
  std::sort(inters.begin(), inters.end());
  inters.erase(std::unique(inters.begin(), inters.end()), inters.end());
  for (const std::vector<int>& I : inters) {
    bool maximal = true;
    for (const std::vector<int>& J : inters)
      if (&I != &J && I.size() < J.size() &&
          std::includes(J.begin(), J.end(), I.begin(), I.end())) {
        maximal = false;
        break;
      }
    if (maximal && I.size() + 1 != F.size()) {
      if (why)
        *why = "facet " + facet_text(F) + " meets its predecessors in the " +
               (I.empty() ? std::string("empty face")
                          : "face " + facet_text(I)) +
               ", which has " + std::to_string(I.size()) +
               " vertices instead of " + std::to_string(F.size() - 1);
      return false;
    }
  }
  return true;
}

void require_permutation(const std::vector<int>& order, std::size_t count,
                         const std::string& what) {
  if (order.size() != count)
    throw InputError(what + " must list each item exactly once");
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i))
      throw InputError(what + " is not a permutation");
}

}  // namespace

CheckResult is_shelling(const ChainComplex& K, const std::vector<int>& order) {
  if (!K.pure) throw InputError("shelling is only defined for pure complexes");
  require_permutation(order, K.facets.size(), "facet order");
  std::vector<int> placed;
  for (int f : order) {
    if (!placed.empty()) {
      std::string why;
      if (!shelling_step(K.facets, placed, f, &why))
        return {false, "intersection", why};
    }
    placed.push_back(f);
  }
  return {};
}

bool brute_force_shellable(const ChainComplex& K, std::vector<int>* order_out) {
  if (!K.pure) throw InputError("shelling is only defined for pure complexes");
  const int t = static_cast<int>(K.facets.size());
  if (t > 63) throw InputError("too many facets for exhaustive search");
  if (t <= 1) {
    if (order_out) {
      order_out->clear();
      if (t == 1) order_out->push_back(0);
    }
    return true;
  }
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> seq;
  std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t used) -> bool {
    if (std::popcount(used) == t) return true;
    if (dead.count(used)) return false;
    for (int f = 0; f < t; ++f) {
      if ((used >> f) & 1) continue;
      if (!seq.empty() && !shelling_step(K.facets, seq, f, nullptr)) continue;
      seq.push_back(f);
      if (dfs(used | (1ull << f))) return true;
      seq.pop_back();
    }
    dead.insert(used);
    return false;
  };
  if (!dfs(0)) return false;
  if (order_out) *order_out = seq;
  return true;
}

bool RaoSearch::exists(int base, const std::vector<int>& required_first) {
  return order(base, required_first).has_value();
}

std::optional<std::vector<int>> RaoSearch::order(
    int base, const std::vector<int>& required_first) {
  const std::vector<int>& covers = L_->up[static_cast<std::size_t>(base)];
  if (covers.size() > 62)
    throw InputError("interval has too many atoms for the ordering search");
  std::uint64_t mask = 0;
  for (int r : required_first) {
    auto it = std::find(covers.begin(), covers.end(), r);
    if (it == covers.end()) return std::nullopt;
    mask |= 1ull << (it - covers.begin());
  }
  return search(base, mask);
}

std::optional<std::vector<int>> RaoSearch::search(int base,
                                                  std::uint64_t prefix_mask) {
  const auto key = std::make_pair(base, prefix_mask);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const std::vector<int>& covers = L_->up[static_cast<std::size_t>(base)];
  const int m = static_cast<int>(covers.size());
  std::optional<std::vector<int>> result;

  if (m <= 1) {
    result = std::vector<int>(covers.begin(), covers.end());
    memo_[key] = result;
    return result;
  }

  std::vector<std::uint64_t> above(static_cast<std::size_t>(L_->size()), 0);
  for (int e = 0; e < L_->size(); ++e)
    for (int c = 0; c < m; ++c)
      if (L_->leq(covers[static_cast<std::size_t>(c)], e))
        above[static_cast<std::size_t>(e)] |= 1ull << c;

  const int need = std::popcount(prefix_mask);
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> seq;

  auto step_ok = [&](std::uint64_t placed, int c) -> bool {
    const int A = covers[static_cast<std::size_t>(c)];
    std::vector<int> SA;
    for (int C : L_->up[static_cast<std::size_t>(A)]) {
      bool early = false;
      for (int p = 0; p < m && !early; ++p) {
        if (!((placed >> p) & 1)) continue;
        const std::vector<int>& up_p =
            L_->up[static_cast<std::size_t>(covers[static_cast<std::size_t>(p)])];
        if (std::find(up_p.begin(), up_p.end(), C) != up_p.end()) early = true;
      }
      if (early) SA.push_back(C);
    }
    if (!this->order(A, SA).has_value()) return false;
    for (int e = 0; e < L_->size(); ++e) {
      const std::uint64_t ae = above[static_cast<std::size_t>(e)];
      if (!((ae >> c) & 1) || !(ae & placed)) continue;
      bool has = false;
      for (int C : SA)
        if (L_->leq(C, e)) {
          has = true;
          break;
        }
      if (!has) return false;
    }
    return true;
  };

  std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t placed) -> bool {
    if (std::popcount(placed) == m) return true;
    if (dead.count(placed)) return false;
    const int cnt = std::popcount(placed);
    for (int c = 0; c < m; ++c) {
      if ((placed >> c) & 1) continue;
      if (cnt < need && !((prefix_mask >> c) & 1)) continue;
      if (!step_ok(placed, c)) continue;
      seq.push_back(covers[static_cast<std::size_t>(c)]);
      if (dfs(placed | (1ull << c))) return true;
      seq.pop_back();
    }
    dead.insert(placed);
    return false;
  };

  if (dfs(0)) result = seq;
  memo_[key] = result;
  return memo_[key];
}

namespace {

CheckResult rao_check_with(const SetLattice& L, RaoSearch& rs,
                           const std::vector<int>& order) {
  const int t = static_cast<int>(order.size());
  for (int j = 0; j < t; ++j) {
    const int A = order[static_cast<std::size_t>(j)];
    std::vector<int> SA;
    for (int C : L.up[static_cast<std::size_t>(A)]) {
      bool early = false;
      for (int i = 0; i < j && !early; ++i) {
        const std::vector<int>& up_i =
            L.up[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        if (std::find(up_i.begin(), up_i.end(), C) != up_i.end()) early = true;
      }
      if (early) SA.push_back(C);
    }
    if (!rs.exists(A, SA))
      return {false, "interval-prefix",
              "no recursive ordering of the interval above " + L.name_of(A) +
                  " starts from exactly its early-covering atoms"};
    for (int e = 0; e < L.size(); ++e) {
      if (!L.leq(A, e)) continue;
      bool above_early = false;
      for (int i = 0; i < j && !above_early; ++i)
        if (L.leq(order[static_cast<std::size_t>(i)], e)) above_early = true;
      if (!above_early) continue;
      bool has = false;
      for (int C : SA)
        if (L.leq(C, e)) {
          has = true;
          break;
        }
      if (!has)
        return {false, "common-cover",
                L.name_of(e) + " lies above " + L.name_of(A) +
                    " and an earlier atom, but above no cover of " +
                    L.name_of(A) + " that also covers an earlier atom"};
    }
  }
  return {};
}

void require_atom_permutation(const SetLattice& L,
                              const std::vector<int>& order) {
  std::vector<int> a = L.atoms, b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw InputError("order is not a permutation of the atoms");
}

struct CriterionContext {
  IndependenceSets F;
  int t = 0;
  int lattice_rank = 0;
};

CriterionContext criterion_context(const SetLattice& L) {
  if (!L.unique_bounds || !L.lattice_ok || !L.graded || !L.atomistic)
    throw InputError("criterion needs a bounded graded atomistic lattice: " +
                     L.structure_note);
  CriterionContext ctx;
  ctx.F = independence_family_atoms(L);
  ctx.t = static_cast<int>(L.atoms.size());
  ctx.lattice_rank = L.rank(L.top);
  return ctx;
}

void all_matchings(int t, std::vector<std::vector<int>>& out) {
  std::vector<int> partner(static_cast<std::size_t>(t), -1);
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t matched) {
    int i = -1;
    for (int c = 0; c < t; ++c)
      if (!((matched >> c) & 1)) {
        i = c;
        break;
      }
    if (i < 0) {
      out.push_back(partner);
      return;
    }
    for (int j = i + 1; j < t; ++j) {
      if ((matched >> j) & 1) continue;
      partner[static_cast<std::size_t>(i)] = j;
      partner[static_cast<std::size_t>(j)] = i;
      rec(matched | (1ull << i) | (1ull << j));
    }
  };
  rec(0);
}

bool mask_admissible(std::uint64_t m, const std::vector<int>& partner) {
  for (std::uint64_t rest = m; rest;) {
    const int a = std::countr_zero(rest);
    rest &= rest - 1;
    if ((m >> partner[static_cast<std::size_t>(a)]) & 1) return false;
  }
  return true;
}

}  // namespace

CheckResult is_recursive_atom_ordering(const SetLattice& L,
                                       const std::vector<int>& order) {
  if (!L.unique_bounds || !L.graded)
    throw InputError("recursive atom ordering needs a bounded graded order: " +
                     L.structure_note);
  require_atom_permutation(L, order);
  if (L.rank(L.top) <= 1) return {};
  RaoSearch rs(L);
  return rao_check_with(L, rs, order);
}

std::vector<int> admissible_atom_ordering(const SetLattice& L) {
  CheckResult cn = is_cn_lattice(L);
  if (!cn.ok)
    throw InputError("admissible ordering needs a signed-set lattice (" +
                     cn.axiom + "): " + cn.detail);
  const int t = static_cast<int>(L.atoms.size());
  if (t == 0) return {};
  const int d = L.rank(L.top);
  IndependenceSets F = independence_family_atoms(L);

  std::vector<int> partner(static_cast<std::size_t>(t), -1);
  for (int i = 0; i < t; ++i) {
    const std::uint64_t starred =
        L.elems[static_cast<std::size_t>(L.atoms[static_cast<std::size_t>(i)])]
            .star()
            .bits;
    for (int j = 0; j < t; ++j)
      if (L.elems[static_cast<std::size_t>(L.atoms[static_cast<std::size_t>(j)])]
              .bits == starred)
        partner[static_cast<std::size_t>(i)] = j;
  }

  auto star_free = [&](std::uint64_t m) {
    for (std::uint64_t rest = m; rest;) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      const int p = partner[static_cast<std::size_t>(a)];
      if (p >= 0 && ((m >> p) & 1)) return false;
    }
    return true;
  };

  const int k = std::max(d - 1, 0);
  if (k > t)
    throw std::runtime_error("internal: prefix size exceeds the atom count");
  std::uint64_t prefix = 0;
  bool found = false;
  for (std::uint64_t m = 0; m < (1ull << t) && !found; ++m) {
    if (std::popcount(m) != k || !F.indep[m] || !star_free(m)) continue;
    prefix = m;
    found = true;
  }
  if (!found)
    throw std::runtime_error(
        "internal: no admissible independent atom set of size " +
        std::to_string(k));

  std::vector<int> seq;
  for (int i = 0; i < t; ++i)
    if ((prefix >> i) & 1) seq.push_back(i);

  auto complete = [&](bool star_separated) -> bool {
    seq.resize(static_cast<std::size_t>(k));
    std::uint64_t used = prefix;
    std::function<bool()> dfs = [&]() -> bool {
      if (static_cast<int>(seq.size()) == t) return true;
      for (int i = 0; i < t; ++i) {
        if ((used >> i) & 1) continue;
        if (star_separated && !seq.empty() &&
            partner[static_cast<std::size_t>(seq.back())] == i)
          continue;
        seq.push_back(i);
        used |= 1ull << i;
        if (dfs()) return true;
        seq.pop_back();
        used &= ~(1ull << i);
      }
      return false;
    };
    return dfs();
  };
  if (!complete(true)) complete(false);

  std::vector<int> out;
  for (int i : seq)
    out.push_back(L.atoms[static_cast<std::size_t>(i)]);
  return out;
}

bool cn_criterion_independents(const SetLattice& L) {
  CriterionContext ctx = criterion_context(L);
  if (ctx.t % 2) return false;
  AtomContext ac = atom_context(L, L.bottom);

  std::vector<char> lhs(std::size_t{1} << ctx.t, 0);
  for (std::uint64_t m = 0; m < (1ull << ctx.t); ++m) {
    if (!ctx.F.indep[m]) continue;
    if (std::popcount(m) >= ctx.lattice_rank) continue;
    if (L.rank(ac.join_atoms(m)) == std::popcount(m)) lhs[m] = 1;
  }

  std::vector<std::vector<int>> matchings;
  all_matchings(ctx.t, matchings);
  for (const std::vector<int>& partner : matchings) {
    bool equal = true;
    for (std::uint64_t m = 0; m < (1ull << ctx.t) && equal; ++m) {
      const bool rhs = ctx.F.indep[m] &&
                       std::popcount(m) < ctx.lattice_rank &&
                       mask_admissible(m, partner);
      if (rhs != static_cast<bool>(lhs[m])) equal = false;
    }
    if (equal) return true;
  }
  return false;
}

bool cn_criterion_orderings(const SetLattice& L) {
  CriterionContext ctx = criterion_context(L);
  if (ctx.t % 2) return false;
  const bool trivially_rao = ctx.lattice_rank <= 1;
  RaoSearch rs(L);

  std::vector<std::vector<int>> matchings;
  all_matchings(ctx.t, matchings);
  for (const std::vector<int>& partner : matchings) {
    int d = 0;
    for (std::uint64_t m = 0; m < (1ull << ctx.t); ++m)
      if (ctx.F.indep[m] && mask_admissible(m, partner))
        d = std::max(d, std::popcount(m));
    if (d == 0) return true;

    bool pairing_ok = true;
    for (std::uint64_t S = 0; S < (1ull << ctx.t) && pairing_ok; ++S) {
      if (std::popcount(S) != d - 1) continue;
      if (!ctx.F.indep[S] || !mask_admissible(S, partner)) continue;

      std::vector<int> seq;
      std::uint64_t used = 0;
      std::function<bool()> try_orders = [&]() -> bool {
        if (static_cast<int>(seq.size()) == ctx.t) {
          if (trivially_rao) return true;
          std::vector<int> order;
          for (int i : seq)
            order.push_back(L.atoms[static_cast<std::size_t>(i)]);
          return rao_check_with(L, rs, order).ok;
        }
        const bool in_prefix = static_cast<int>(seq.size()) < d - 1;
        for (int i = 0; i < ctx.t; ++i) {
          if ((used >> i) & 1) continue;
          if (in_prefix && !((S >> i) & 1)) continue;
          if (!seq.empty() &&
              partner[static_cast<std::size_t>(seq.back())] == i)
            continue;
          seq.push_back(i);
          used |= 1ull << i;
          const bool ok = try_orders();
          seq.pop_back();
          used &= ~(1ull << i);
          if (!ok) return false;
        }
        return true;
      };
      if (!try_orders()) pairing_ok = false;
    }
    if (pairing_ok) return true;
  }
  return false;
}

CheckResult interval_join_independents_check(const SetLattice& L) {
  if (!L.unique_bounds || !L.lattice_ok || !L.graded || !L.atomistic)
    throw InputError("criterion needs a bounded graded atomistic lattice: " +
                     L.structure_note);
  AtomContext ac = atom_context(L, L.bottom);
  const int t = ac.t();

  for (std::uint64_t m = 0; m < (1ull << t); ++m) {
    const int k = std::popcount(m);
    if (k == 0) continue;
    if (L.rank(ac.join_atoms(m)) != k) continue;
    for (std::uint64_t rest = m; rest;) {
      const int anchor = std::countr_zero(rest);
      rest &= rest - 1;
      const int a = ac.atom_idx[static_cast<std::size_t>(anchor)];
      std::vector<int> joined;
      for (std::uint64_t r2 = m & ~(1ull << anchor); r2;) {
        const int other = std::countr_zero(r2);
        r2 &= r2 - 1;
        joined.push_back(
            L.join(a, ac.atom_idx[static_cast<std::size_t>(other)]));
      }
      std::sort(joined.begin(), joined.end());
      joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
      for (int e : joined) {
        const std::vector<int>& up_a = L.up[static_cast<std::size_t>(a)];
        if (std::find(up_a.begin(), up_a.end(), e) == up_a.end())
          return {false, "interval-atom",
                  L.name_of(e) + " is a join with " + L.name_of(a) +
                      " but does not cover it"};
      }
      const int total = L.rank(ac.join_atoms(m));
      if (total - 1 != static_cast<int>(joined.size()))
        return {false, "interval-rank",
                "joins with " + L.name_of(a) + " of " +
                    ac.atom_set_text(m & ~(1ull << anchor)) + " span rank " +
                    std::to_string(total - 1) + " above it but only " +
                    std::to_string(joined.size()) + " remain distinct"};
    }
  }
  return {};
}

bool cn_isomorphic_by_pairing(const SetLattice& L) {
  if (!L.unique_bounds || !L.lattice_ok || !L.graded || !L.atomistic)
    throw InputError("criterion needs a bounded graded atomistic lattice: " +
                     L.structure_note);
  const int t = static_cast<int>(L.atoms.size());
  if (t % 2) return false;

  std::vector<std::vector<int>> matchings;
  all_matchings(t, matchings);
  for (const std::vector<int>& partner : matchings) {
    const int half = t / 2;
    std::vector<int> code(static_cast<std::size_t>(t), -1);
    int slot = 0;
    for (int i = 0; i < t; ++i) {
      if (code[static_cast<std::size_t>(i)] >= 0) continue;
      code[static_cast<std::size_t>(i)] = slot;
      code[static_cast<std::size_t>(partner[static_cast<std::size_t>(i)])] =
          slot + half;
      ++slot;
    }
    std::vector<SignedSet> images;
    for (int e = 0; e < L.size(); ++e) {
      std::uint64_t bits = 0;
      for (int i = 0; i < t; ++i)
        if (L.leq(L.atoms[static_cast<std::size_t>(i)], e))
          bits |= 1ull << code[static_cast<std::size_t>(i)];
      images.push_back({half, bits});
    }
    try {
      if (is_cn_lattice(build_lattice(half, images)).ok) return true;
    } catch (const InputError&) {
    }
  }
  return false;
}

std::vector<std::vector<int>> lex_maximal_chains(
    const SetLattice& L, const std::vector<int>& top_order) {
  if (!L.unique_bounds || !L.graded)
    throw InputError("chain ordering needs a bounded graded order: " +
                     L.structure_note);
  require_atom_permutation(L, top_order);
  RaoSearch rs(L);

  std::function<std::vector<std::vector<int>>(int, const std::vector<int>&)>
      chains = [&](int b, const std::vector<int>& seq)
      -> std::vector<std::vector<int>> {
    if (L.up[static_cast<std::size_t>(b)].empty()) return {{b}};
    std::vector<std::vector<int>> out;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      const int A = seq[j];
      std::vector<int> SA;
      for (int C : L.up[static_cast<std::size_t>(A)]) {
        bool early = false;
        for (std::size_t i = 0; i < j && !early; ++i) {
          const std::vector<int>& up_i = L.up[static_cast<std::size_t>(seq[i])];
          if (std::find(up_i.begin(), up_i.end(), C) != up_i.end()) early = true;
        }
        if (early) SA.push_back(C);
      }
      std::optional<std::vector<int>> sub = rs.order(A, SA);
      if (!sub)
        throw std::runtime_error("no recursive ordering above " + L.name_of(A));
      for (std::vector<int>& chain : chains(A, *sub)) {
        chain.insert(chain.begin(), b);
        out.push_back(std::move(chain));
      }
    }
    return out;
  };
  return chains(L.bottom, top_order);
}

std::vector<std::vector<int>> lex_maximal_chains(const SetLattice& L) {
  if (!L.unique_bounds || !L.graded)
    throw InputError("chain ordering needs a bounded graded order: " +
                     L.structure_note);
  RaoSearch rs(L);
  std::optional<std::vector<int>> top = rs.order(L.bottom, {});
  if (!top) throw std::runtime_error("no recursive atom ordering exists");
  return lex_maximal_chains(L, *top);
}

}  // namespace cnlat
