#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cnlat {

// Thrown on malformed user input (bad element names, inconsistent files,
// out-of-range parameters). The CLI maps it to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The signed ground set J over n positions has 2n elements:
// "1".."n" (codes 0..n-1) and "1*".."n*" (codes n..2n-1).
inline int star_code(int code, int n) { return code < n ? code + n : code - n; }

std::string element_name(int code, int n);
int parse_element(const std::string& name, int n);

// Subset of J as a bitmask over codes. n <= 32 keeps star() branch-free
// in 64 bits; that bound is checked at construction.
struct SignedSet {
  int n = 0;
  std::uint64_t bits = 0;

  SignedSet() = default;
  SignedSet(int n_, std::uint64_t bits_);

  static SignedSet empty(int n) { return SignedSet(n, 0); }
  static SignedSet full(int n);

  bool contains(int code) const { return (bits >> code) & 1u; }
  SignedSet with(int code) const { return SignedSet(n, bits | (1ull << code)); }
  SignedSet without(int code) const { return SignedSet(n, bits & ~(1ull << code)); }

  SignedSet star() const;
  bool is_admissible() const { return (bits & star().bits) == 0; }
  bool is_transversal() const;

  bool is_subset_of(const SignedSet& o) const { return (bits & ~o.bits) == 0; }
  SignedSet intersect(const SignedSet& o) const { return SignedSet(n, bits & o.bits); }
  SignedSet unite(const SignedSet& o) const { return SignedSet(n, bits | o.bits); }
  SignedSet minus(const SignedSet& o) const { return SignedSet(n, bits & ~o.bits); }

  int count() const;
  std::vector<int> members() const;
  std::string to_string() const;

  bool operator==(const SignedSet& o) const { return n == o.n && bits == o.bits; }
  bool operator!=(const SignedSet& o) const { return !(*this == o); }
  bool operator<(const SignedSet& o) const { return bits < o.bits; }
};

SignedSet parse_set(int n, const std::vector<std::string>& names);

// All 2^n transversals (one of {i, i*} per position).
std::vector<SignedSet> transversals(int n);

// A linear order on J: seq[k] = code at rank k (smallest first),
// pos[c] = rank of code c.
struct GroundOrder {
  int n = 0;
  std::vector<int> seq;
  std::vector<int> pos;

  explicit GroundOrder(int n_, std::vector<int> seq_);
  bool leq(int a, int b) const { return pos[a] <= pos[b]; }
};

// Admissible orders: pos[star(seq[k])] == 2n-1-k for all k. There are
// 2^n * n! of them; the first n entries determine the rest.
std::vector<GroundOrder> admissible_orders(int n);
bool is_admissible_order(const GroundOrder& ord);

// Gale dominance of equal-size sets under ord: sort both ascending by ord,
// compare componentwise.
bool gale_leq(const SignedSet& a, const SignedSet& b, const GroundOrder& ord);

}  // namespace cnlat
