#include "cnlat/fixtures.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>

namespace cnlat {

namespace {

std::uint64_t of_codes(std::initializer_list<int> codes) {
  std::uint64_t m = 0;
  for (int c : codes) m |= 1ull << c;
  return m;
}

void name_element(SetLattice& L, std::uint64_t bits, const std::string& name) {
  const int idx = L.index_of(SignedSet{L.n, bits});
  if (idx < 0) return;
  if (L.elem_names.size() < L.elems.size()) L.elem_names.resize(L.elems.size());
  L.elem_names[static_cast<std::size_t>(idx)] = name;
}

SetLattice dual_partition_lattice(bool with_x) {
  // Atom codes: 0=14/23 1=1/234 2=124/3 3=13/24 4=123/4 5=134/2 6=12/34.
  const std::vector<std::string> atom_names = {"14/23", "1/234", "124/3",
                                               "13/24", "123/4", "134/2",
                                               "12/34"};
  std::vector<SignedSet> elems;
  elems.push_back({4, 0});
  for (int c = 0; c < 7; ++c) elems.push_back({4, 1ull << c});
  const std::vector<std::pair<std::uint64_t, std::string>> lines = {
      {of_codes({0, 4, 1}), "23/1/4"}, {of_codes({0, 2, 5}), "14/2/3"},
      {of_codes({2, 3, 1}), "24/1/3"}, {of_codes({3, 4, 5}), "13/2/4"},
      {of_codes({6, 4, 2}), "12/3/4"}, {of_codes({6, 5, 1}), "34/1/2"}};
  for (const auto& [bits, name] : lines) elems.push_back({4, bits});
  if (with_x) elems.push_back({4, of_codes({0, 3, 6})});
  elems.push_back({4, 0x7F});

  SetLattice L = build_lattice(4, elems, SignedSet{4, 0x7F});
  L.code_names.assign(atom_names.begin(), atom_names.end());
  name_element(L, 0, "1234");
  name_element(L, 0x7F, "1/2/3/4");
  for (int c = 0; c < 7; ++c)
    name_element(L, 1ull << c, atom_names[static_cast<std::size_t>(c)]);
  for (const auto& [bits, name] : lines) name_element(L, bits, name);
  if (with_x) name_element(L, of_codes({0, 3, 6}), "X");
  return L;
}

}  // namespace

SetLattice fix_a() {
  std::vector<SignedSet> elems;
  for (std::uint64_t m = 0; m < 16; ++m)
    if (SignedSet{2, m}.is_admissible()) elems.push_back({2, m});
  elems.push_back(SignedSet::full(2));
  return build_lattice(2, elems);
}

SetLattice fix_b() {
  return build_lattice(
      2, {SignedSet{2, 0}, SignedSet{2, 0b1001}, SignedSet{2, 0b0110},
          SignedSet::full(2)});
}

SetLattice fix_c() {
  return build_lattice(2, {SignedSet{2, 0}, SignedSet{2, 1}, SignedSet{2, 2},
                           SignedSet{2, 4}, SignedSet{2, 8},
                           SignedSet::full(2)});
}

SetLattice fix_d() { return dual_partition_lattice(false); }

SetLattice fix_e() { return dual_partition_lattice(true); }

SetLattice boolean_lattice(int k) {
  std::vector<SignedSet> elems;
  for (std::uint64_t m = 0; m < (1ull << k); ++m) elems.push_back({k, m});
  return build_lattice(k, std::move(elems), SignedSet{k, (1ull << k) - 1});
}

SetLattice partition_lattice_4() {
  // Edge codes: 0=12 1=13 2=14 3=23 4=24 5=34.
  const int edge_of[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5},
                             {2, 4, 5, -1}};
  std::vector<SignedSet> elems;
  std::vector<int> block(4, 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == 4) {
      std::uint64_t bits = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (block[static_cast<std::size_t>(a)] ==
              block[static_cast<std::size_t>(b)])
            bits |= 1ull << edge_of[a][b];
      elems.push_back({3, bits});
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      block[static_cast<std::size_t>(i)] = v;
      rec(i + 1, std::max(max_used, v));
    }
  };
  rec(1, 0);

  SetLattice L = build_lattice(3, std::move(elems), SignedSet{3, 0x3F});
  L.code_names = {"12", "13", "14", "23", "24", "34"};
  return L;
}

std::vector<NamedLattice> standard_fixtures() {
  return {{"fix-a", fix_a()},
          {"fix-b", fix_b()},
          {"fix-c", fix_c()},
          {"fix-d", fix_d()},
          {"fix-e", fix_e()},
          {"boolean-3", boolean_lattice(3)},
          {"boolean-4", boolean_lattice(4)},
          {"partition-4", partition_lattice_4()}};
}

std::vector<NamedLattice> cn_fixtures() {
  return {{"fix-a", fix_a()}, {"fix-b", fix_b()}, {"fix-c", fix_c()}};
}

}  // namespace cnlat
