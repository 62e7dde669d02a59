#include "cnlat/matroid.hpp"

#include <algorithm>
#include <bit>

namespace cnlat {

namespace {

std::string mask_text(std::uint64_t m) {
  std::string out = "{";
  bool first = true;
  for (int c = 0; c < 64; ++c) {
    if (!(m >> c & 1)) continue;
    if (!first) out += ",";
    first = false;
    out += std::to_string(c);
  }
  return out + "}";
}

void check_ground(int ground_size) {
  if (ground_size < 0 || ground_size > kMaxGround)
    throw InputError("ground size out of supported range");
}

}  // namespace

std::vector<std::uint64_t> IndependenceSets::members() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < indep.size(); ++m)
    if (indep[m]) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> IndependenceSets::maximal_members() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < indep.size(); ++m) {
    if (!indep[m]) continue;
    bool maximal = true;
    for (int c = 0; c < ground_size && maximal; ++c)
      if ((universe >> c & 1) && !(m >> c & 1) && indep[m | (1ull << c)])
        maximal = false;
    if (maximal) out.push_back(m);
  }
  return out;
}

int IndependenceSets::max_size() const {
  int best = 0;
  for (std::uint64_t m = 0; m < indep.size(); ++m)
    if (indep[m]) best = std::max(best, std::popcount(m));
  return best;
}

IndependenceSets empty_family(int ground_size, std::uint64_t universe) {
  check_ground(ground_size);
  IndependenceSets I;
  I.ground_size = ground_size;
  I.universe = universe;
  I.indep.assign(1ull << ground_size, 0);
  return I;
}

IndependenceSets downward_closure(int ground_size, std::uint64_t universe,
                                  const std::vector<std::uint64_t>& gens) {
  IndependenceSets I = empty_family(ground_size, universe);
  for (std::uint64_t g : gens) {
    if ((g & ~universe) != 0)
      throw InputError("set " + mask_text(g) + " leaves the ground set");
    std::uint64_t sub = g;
    while (true) {
      I.indep[sub] = 1;
      if (sub == 0) break;
      sub = (sub - 1) & g;
    }
  }
  return I;
}

CheckResult check_matroid_axioms(const IndependenceSets& I) {
  if (!I.indep[0]) return {false, "nonempty", "the empty set is not a member"};
  const std::uint64_t total = I.indep.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    if (!I.indep[m]) continue;
    for (int c = 0; c < I.ground_size; ++c)
      if ((m >> c & 1) && !I.indep[m & ~(1ull << c)])
        return {false, "downward-closed",
                mask_text(m) + " is a member but " + mask_text(m & ~(1ull << c)) +
                    " is not"};
  }
  std::vector<std::uint64_t> mem = I.members();
  for (std::uint64_t a : mem)
    for (std::uint64_t b : mem) {
      if (std::popcount(a) <= std::popcount(b)) continue;
      bool extended = false;
      std::uint64_t diff = a & ~b;
      for (int c = 0; c < I.ground_size && !extended; ++c)
        if ((diff >> c & 1) && I.indep[b | (1ull << c)]) extended = true;
      if (!extended)
        return {false, "exchange",
                mask_text(b) + " cannot be extended from " + mask_text(a)};
    }
  return {true, "", ""};
}

std::uint64_t RankOracle::closure(std::uint64_t m) const {
  m &= universe;
  std::uint64_t out = m;
  for (int c = 0; c < ground_size; ++c)
    if ((universe >> c & 1) && !(m >> c & 1) && rank(m | (1ull << c)) == rank(m))
      out |= 1ull << c;
  return out;
}

RankOracle rank_from_independents(const IndependenceSets& I) {
  RankOracle R;
  R.ground_size = I.ground_size;
  R.universe = I.universe;
  R.r.assign(I.indep.size(), 0);
  for (std::uint64_t m = 1; m < I.indep.size(); ++m) {
    if (I.indep[m]) {
      R.r[m] = std::popcount(m);
      continue;
    }
    int best = 0;
    for (int c = 0; c < I.ground_size; ++c)
      if (m >> c & 1) best = std::max(best, R.r[m & ~(1ull << c)]);
    R.r[m] = best;
  }
  return R;
}

std::vector<std::uint64_t> matroid_flats(const RankOracle& R) {
  std::vector<std::uint64_t> out;
  std::uint64_t sub = R.universe;
  while (true) {
    if (R.closure(sub) == sub) out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & R.universe;
  }
  std::sort(out.begin(), out.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (std::popcount(a) != std::popcount(b))
      return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  return out;
}

std::vector<std::uint64_t> flats_of_rank(const RankOracle& R, int k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f : matroid_flats(R))
    if (R.rank(f) == k) out.push_back(f);
  return out;
}

}  // namespace cnlat
