#include "cnlat/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cnlat {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

int read_n(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw InputError("missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 31) throw InputError("\"n\" out of range");
  return n;
}

SignedSet entry_to_set(const json& entry, int n) {
  if (entry.is_string()) {
    if (entry.get<std::string>() == "J") return SignedSet::full(n);
    throw InputError("unknown element literal \"" +
                     entry.get<std::string>() + "\"");
  }
  if (!entry.is_array()) throw InputError("element must be an array or \"J\"");
  std::vector<std::string> names;
  for (const json& e : entry) {
    if (!e.is_string()) throw InputError("element members must be strings");
    names.push_back(e.get<std::string>());
  }
  return parse_set(n, names);
}

json set_to_entry(const SignedSet& s) {
  json arr = json::array();
  for (int c : s.members()) arr.push_back(element_name(c, s.n));
  return arr;
}

std::vector<SignedSet> read_set_list(const json& j, const std::string& field,
                                     int n) {
  if (!j.contains(field) || !j[field].is_array())
    throw InputError("missing array field \"" + field + "\"");
  std::vector<SignedSet> out;
  for (const json& entry : j[field]) out.push_back(entry_to_set(entry, n));
  return out;
}

}  // namespace

SetLattice parse_lattice_json(const std::string& text) {
  const json j = parse_json(text);
  const int n = read_n(j);
  std::vector<SignedSet> elems = read_set_list(j, "elements", n);
  std::set<std::uint64_t> seen;
  for (const SignedSet& s : elems)
    if (!seen.insert(s.bits).second)
      throw InputError("duplicate element " + s.to_string());
  return build_lattice(n, std::move(elems));
}

SetLattice load_lattice(const std::string& path) {
  return parse_lattice_json(read_text_file(path));
}

std::string lattice_json(const SetLattice& L) {
  json j;
  j["n"] = L.n;
  json elems = json::array();
  for (const SignedSet& s : L.elems) {
    if (s.bits == SignedSet::full(L.n).bits && s.count() == 2 * L.n)
      elems.push_back("J");
    else
      elems.push_back(set_to_entry(s));
  }
  j["elements"] = elems;
  return j.dump(2);
}

LoadedFamily parse_family_json(const std::string& text) {
  const json j = parse_json(text);
  LoadedFamily out;
  out.n = read_n(j);
  const int g = 2 * out.n;
  if (g > kMaxGround) throw InputError("\"n\" out of range for set families");
  out.family.ground_size = g;
  out.family.universe = (1ull << g) - 1;
  out.family.indep.assign(std::size_t{1} << g, 0);
  for (const SignedSet& s : read_set_list(j, "independents", out.n))
    out.family.indep[s.bits] = 1;
  IndependenceSets closed = out.family;
  for (std::uint64_t m = (1ull << g) - 1;; --m) {
    if (closed.indep[m])
      for (int c = 0; c < g; ++c)
        if ((m >> c) & 1) closed.indep[m & ~(1ull << c)] = 1;
    if (m == 0) break;
  }
  out.closure_added = !(closed == out.family);
  out.family = std::move(closed);
  return out;
}

LoadedFamily load_family(const std::string& path) {
  return parse_family_json(read_text_file(path));
}

std::string family_json(const IndependenceSets& F, int n) {
  json j;
  j["n"] = n;
  json arr = json::array();
  for (std::uint64_t m : F.members()) arr.push_back(set_to_entry({n, m}));
  j["independents"] = arr;
  return j.dump(2);
}

BasisFamily parse_bases_json(const std::string& text) {
  const json j = parse_json(text);
  BasisFamily B;
  B.n = read_n(j);
  B.bases = read_set_list(j, "bases", B.n);
  return B;
}

BasisFamily load_bases(const std::string& path) {
  return parse_bases_json(read_text_file(path));
}

std::string bases_json(const BasisFamily& B) {
  json j;
  j["n"] = B.n;
  json arr = json::array();
  for (const SignedSet& b : B.bases) arr.push_back(set_to_entry(b));
  j["bases"] = arr;
  return j.dump(2);
}

SpikeGraph parse_spike_json(const std::string& text) {
  const json j = parse_json(text);
  SpikeGraph G;
  G.n = read_n(j);
  G.balanced = read_set_list(j, "balanced", G.n);
  for (const SignedSet& b : G.balanced)
    if (!b.is_transversal())
      throw InputError("balanced cycle " + b.to_string() +
                       " is not a transversal");
  return G;
}

SpikeGraph load_spike(const std::string& path) {
  return parse_spike_json(read_text_file(path));
}

std::string matroid_json(const IndependenceSets& F, int n, bool as_bases) {
  json j;
  json ground = json::array();
  for (int c = 0; c < 2 * n; ++c)
    if ((F.universe >> c) & 1) ground.push_back(element_name(c, n));
  j["ground"] = ground;
  json arr = json::array();
  if (as_bases) {
    for (std::uint64_t m : F.maximal_members())
      arr.push_back(set_to_entry({n, m}));
    j["bases"] = arr;
  } else {
    for (std::uint64_t m : F.members()) arr.push_back(set_to_entry({n, m}));
    j["independents"] = arr;
  }
  return j.dump(2);
}

std::string atom_order_json(const SetLattice& L, const std::vector<int>& order) {
  json arr = json::array();
  for (int idx : order)
    arr.push_back(set_to_entry(L.elems[static_cast<std::size_t>(idx)]));
  return arr.dump(2);
}

std::vector<int> parse_atom_order_json(const SetLattice& L,
                                       const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_array()) throw InputError("atom order must be a JSON array");
  std::vector<int> out;
  for (const json& entry : j) {
    const SignedSet s = entry_to_set(entry, L.n);
    const int idx = L.index_of(s);
    if (idx < 0)
      throw InputError(s.to_string() + " is not an element of the lattice");
    out.push_back(idx);
  }
  std::vector<int> sorted = out, atoms = L.atoms;
  std::sort(sorted.begin(), sorted.end());
  std::sort(atoms.begin(), atoms.end());
  if (sorted != atoms)
    throw InputError("order must list each atom exactly once");
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cnlat
