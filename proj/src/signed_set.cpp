#include "cnlat/signed_set.hpp"

#include <algorithm>
#include <bit>

namespace cnlat {

std::string element_name(int code, int n) {
  if (code < 0 || code >= 2 * n) throw InputError("element code out of range");
  if (code < n) return std::to_string(code + 1);
  return std::to_string(code - n + 1) + "*";
}

int parse_element(const std::string& name, int n) {
  if (name.empty()) throw InputError("empty element name");
  bool starred = name.back() == '*';
  std::string digits = starred ? name.substr(0, name.size() - 1) : name;
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("bad element name '" + name + "'");
  long v = std::stol(digits);
  if (v < 1 || v > n)
    throw InputError("element '" + name + "' out of range for n=" +
                     std::to_string(n));
  return starred ? static_cast<int>(v - 1 + n) : static_cast<int>(v - 1);
}

SignedSet::SignedSet(int n_, std::uint64_t bits_) : n(n_), bits(bits_) {
  if (n < 0 || n > 32) throw InputError("n must be in 0..32");
  if (n < 32 && (bits >> (2 * n)) != 0)
    throw InputError("set bits outside ground set");
}

SignedSet SignedSet::full(int n) {
  std::uint64_t all = n == 32 ? ~0ull : ((1ull << (2 * n)) - 1);
  return SignedSet(n, all);
}

SignedSet SignedSet::star() const {
  std::uint64_t lo_mask = n == 32 ? 0xffffffffull : (1ull << n) - 1;
  std::uint64_t lo = bits & lo_mask;
  std::uint64_t hi = bits >> n;
  return SignedSet(n, (lo << n) | hi);
}

bool SignedSet::is_transversal() const {
  if (count() != n) return false;
  return is_admissible();
}

int SignedSet::count() const { return std::popcount(bits); }

std::vector<int> SignedSet::members() const {
  std::vector<int> out;
  for (int c = 0; c < 2 * n; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string SignedSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int c : members()) {
    if (!first) s += ",";
    s += element_name(c, n);
    first = false;
  }
  return s + "}";
}

SignedSet parse_set(int n, const std::vector<std::string>& names) {
  SignedSet s = SignedSet::empty(n);
  for (const auto& nm : names) {
    int c = parse_element(nm, n);
    if (s.contains(c)) throw InputError("duplicate element '" + nm + "'");
    s = s.with(c);
  }
  return s;
}

std::vector<SignedSet> transversals(int n) {
  std::vector<SignedSet> out;
  out.reserve(1ull << n);
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    SignedSet s = SignedSet::empty(n);
    for (int i = 0; i < n; ++i)
      s = s.with((m >> i) & 1 ? i + n : i);
    out.push_back(s);
  }
  return out;
}

GroundOrder::GroundOrder(int n_, std::vector<int> seq_)
    : n(n_), seq(std::move(seq_)) {
  if (static_cast<int>(seq.size()) != 2 * n)
    throw InputError("order must list all 2n elements");
  pos.assign(2 * n, -1);
  for (int k = 0; k < 2 * n; ++k) {
    int c = seq[k];
    if (c < 0 || c >= 2 * n || pos[c] != -1)
      throw InputError("order is not a permutation of the ground set");
    pos[c] = k;
  }
}

bool is_admissible_order(const GroundOrder& ord) {
  int m = 2 * ord.n;
  for (int k = 0; k < m; ++k)
    if (ord.pos[star_code(ord.seq[k], ord.n)] != m - 1 - k) return false;
  return true;
}

std::vector<GroundOrder> admissible_orders(int n) {
  std::vector<GroundOrder> out;
  // First half: pick, per position, which sign comes early, then a
  // permutation of positions. Second half is the star-image reversed.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    for (std::uint64_t signs = 0; signs < (1ull << n); ++signs) {
      std::vector<int> seq(2 * n);
      for (int k = 0; k < n; ++k) {
        int c = (signs >> k) & 1 ? perm[k] + n : perm[k];
        seq[k] = c;
        seq[2 * n - 1 - k] = star_code(c, n);
      }
      out.emplace_back(n, seq);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool gale_leq(const SignedSet& a, const SignedSet& b, const GroundOrder& ord) {
  if (a.count() != b.count()) throw InputError("gale_leq needs equal sizes");
  std::vector<int> ra, rb;
  for (int c : a.members()) ra.push_back(ord.pos[c]);
  for (int c : b.members()) rb.push_back(ord.pos[c]);
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  for (size_t i = 0; i < ra.size(); ++i)
    if (ra[i] > rb[i]) return false;
  return true;
}

}  // namespace cnlat
