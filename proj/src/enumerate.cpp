#include "cnlat/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>

namespace cnlat {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::uint64_t> admissible_masks(int n, bool include_empty) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = include_empty ? 0 : 1; m < (1ull << (2 * n)); ++m)
    if (SignedSet{n, m}.is_admissible()) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> orbit_min(const std::vector<SymmetryAction>& group,
                                     const std::vector<std::uint64_t>& masks) {
  std::vector<std::uint64_t> best;
  for (const SymmetryAction& g : group) {
    std::vector<std::uint64_t> mapped;
    mapped.reserve(masks.size());
    for (std::uint64_t m : masks) mapped.push_back(g.apply(m));
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  }
  return best;
}

}  // namespace

std::uint64_t SymmetryAction::apply(std::uint64_t bits) const {
  std::uint64_t out = 0;
  for (std::uint64_t rest = bits; rest;) {
    const int c = std::countr_zero(rest);
    rest &= rest - 1;
    out |= 1ull << image[static_cast<std::size_t>(c)];
  }
  return out;
}

std::vector<SymmetryAction> hyperoctahedral_group(int n) {
  std::vector<SymmetryAction> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint64_t signs = 0; signs < (1ull << n); ++signs) {
      SymmetryAction g;
      g.n = n;
      g.image.assign(static_cast<std::size_t>(2 * n), 0);
      for (int i = 0; i < n; ++i) {
        const int t = perm[static_cast<std::size_t>(i)];
        const bool flip = (signs >> i) & 1;
        g.image[static_cast<std::size_t>(i)] = flip ? t + n : t;
        g.image[static_cast<std::size_t>(i + n)] = flip ? t : t + n;
      }
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::uint64_t> canonical_family(
    int n, const std::vector<SignedSet>& elems) {
  std::vector<std::uint64_t> masks;
  masks.reserve(elems.size());
  for (const SignedSet& s : elems) masks.push_back(s.bits);
  return orbit_min(hyperoctahedral_group(n), masks);
}

CnEnumeration enumerate_cn(int n, int budget_ms) {
  if (n < 1 || n > 3)
    throw InputError("enumeration is supported for n in {1, 2, 3}");
  const std::vector<SymmetryAction> group = hyperoctahedral_group(n);
  const std::uint64_t full = SignedSet::full(n).bits;
  const auto deadline =
      budget_ms > 0 ? Clock::now() + std::chrono::milliseconds(budget_ms)
                    : Clock::time_point::max();

  CnEnumeration result;
  std::set<std::vector<std::uint64_t>> seen;

  auto offer = [&](const std::vector<SignedSet>& elems) {
    SetLattice L = build_lattice(n, elems);
    if (!is_cn_lattice(L).ok) return;
    ++result.raw_count;
    std::vector<std::uint64_t> masks;
    for (const SignedSet& s : L.elems) masks.push_back(s.bits);
    if (seen.insert(orbit_min(group, masks)).second)
      result.lattices.push_back(std::move(L));
  };

  if (n <= 2) {
    const std::vector<std::uint64_t> adm = admissible_masks(n, false);
    const std::size_t bits = adm.size();
    for (std::uint64_t sel = 0; sel < (1ull << bits); ++sel) {
      std::vector<SignedSet> elems = {SignedSet{n, 0}};
      for (std::size_t i = 0; i < bits; ++i)
        if ((sel >> i) & 1) elems.push_back({n, adm[i]});
      if (std::find(elems.begin(), elems.end(), SignedSet{n, full}) ==
          elems.end())
        elems.push_back({n, full});
      offer(elems);
    }
  } else {
    // Depth-first growth of intersection-closed families between {∅, J} and
    // the admissible sets, cut off by the budget.
    const std::vector<std::uint64_t> adm = admissible_masks(n, false);
    std::set<std::vector<std::uint64_t>> visited;
    std::function<void(std::vector<std::uint64_t>, std::size_t)> grow =
        [&](std::vector<std::uint64_t> members, std::size_t next) {
          if (Clock::now() > deadline) {
            result.truncated = true;
            return;
          }
          std::vector<SignedSet> elems;
          for (std::uint64_t m : members) elems.push_back({n, m});
          offer(elems);
          for (std::size_t i = next; i < adm.size(); ++i) {
            if (result.truncated) return;
            if (std::binary_search(members.begin(), members.end(), adm[i]))
              continue;
            std::vector<std::uint64_t> grown = members;
            grown.push_back(adm[i]);
            std::sort(grown.begin(), grown.end());
            for (;;) {
              std::vector<std::uint64_t> add;
              for (std::size_t a = 0; a < grown.size(); ++a)
                for (std::size_t b = a + 1; b < grown.size(); ++b) {
                  const std::uint64_t meet = grown[a] & grown[b];
                  if (!std::binary_search(grown.begin(), grown.end(), meet))
                    add.push_back(meet);
                }
              if (add.empty()) break;
              grown.insert(grown.end(), add.begin(), add.end());
              std::sort(grown.begin(), grown.end());
              grown.erase(std::unique(grown.begin(), grown.end()),
                          grown.end());
            }
            if (!visited.insert(grown).second) continue;
            grow(std::move(grown), i + 1);
          }
        };
    std::vector<std::uint64_t> base = {0, full};
    visited.insert(base);
    grow(base, 0);
  }

  std::sort(result.lattices.begin(), result.lattices.end(),
            [&](const SetLattice& a, const SetLattice& b) {
              if (a.elems.size() != b.elems.size())
                return a.elems.size() < b.elems.size();
              std::vector<std::uint64_t> ma, mb;
              for (const SignedSet& s : a.elems) ma.push_back(s.bits);
              for (const SignedSet& s : b.elems) mb.push_back(s.bits);
              return orbit_min(group, ma) < orbit_min(group, mb);
            });
  return result;
}

std::vector<BasisFamily> enumerate_symplectic(int n, int k) {
  if (n < 1 || n > 3 || k < 0 || k > n)
    throw InputError("basis enumeration needs 1 <= n <= 3 and 0 <= k <= n");
  std::vector<std::uint64_t> sets;
  for (std::uint64_t m = 0; m < (1ull << (2 * n)); ++m)
    if (std::popcount(m) == k && SignedSet{n, m}.is_admissible())
      sets.push_back(m);

  const std::vector<SymmetryAction> group = hyperoctahedral_group(n);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<BasisFamily> out;
  for (std::uint64_t sel = 1; sel < (1ull << sets.size()); ++sel) {
    BasisFamily B;
    B.n = n;
    std::vector<std::uint64_t> masks;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if ((sel >> i) & 1) {
        B.bases.push_back({n, sets[i]});
        masks.push_back(sets[i]);
      }
    if (!is_symplectic(B).ok) continue;
    if (seen.insert(orbit_min(group, masks)).second)
      out.push_back(std::move(B));
  }
  std::sort(out.begin(), out.end(), [&](const BasisFamily& a,
                                        const BasisFamily& b) {
    if (a.bases.size() != b.bases.size()) return a.bases.size() < b.bases.size();
    std::vector<std::uint64_t> ma, mb;
    for (const SignedSet& s : a.bases) ma.push_back(s.bits);
    for (const SignedSet& s : b.bases) mb.push_back(s.bits);
    return orbit_min(group, ma) < orbit_min(group, mb);
  });
  return out;
}

}  // namespace cnlat
