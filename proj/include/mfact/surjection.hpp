#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mfact/chain.hpp"
#include "mfact/parking.hpp"
#include "mfact/permutation.hpp"

namespace mfact {

using BigInt = boost::multiprecision::cpp_int;

/// A in {1..n}^k and B a (k+1)-subset of {1..n}, stored sorted.
struct PairAB {
  int n = 1;
  std::vector<int> a;
  std::vector<int> b;

  PairAB() : b{1} {}
  /// Sorts b and throws Error unless the invariants hold.
  PairAB(int n, std::vector<int> a, std::vector<int> b);

  int k() const noexcept { return static_cast<int>(a.size()); }

  friend bool operator==(const PairAB&, const PairAB&) = default;
  friend auto operator<=>(const PairAB&, const PairAB&) = default;
};

/// Every intermediate value of the construction, for diagnostics and golden tests.
struct GammaTrace {
  ParkingOutcome first_parking;  // on (sorted A, B); its residue is rho(A, B)
  int shift = 0;                 // 1 - rho(A, B) mod n
  PairAB normalized;             // (A~, B~)
  std::vector<int> sorted_entries;  // I
  ParkingOutcome second_parking;    // on (I, B~): J and residue 1
  Chain sorted_chain;               // ((i_1 j_1), ..., (i_k j_k))
  Permutation sorter;               // sigma with sigma . A~ = I
  Chain result;
};

/// The surjection onto length-k members. Throws Error(precondition) when k >= n.
Chain gamma(const PairAB& p);
GammaTrace gamma_traced(const PairAB& p);

/// Right inverse of gamma with residue 1.
PairAB section(const Chain& c);

/// The n shifts of section(c), ordered by shift amount 0..n-1.
std::vector<PairAB> fiber(const Chain& c);

/// n^(k-1) * C(n, k+1) exactly; 1 for k = 0 and 0 for k >= n.
BigInt count_formula(int n, int k);

struct VerifyRow {
  int k = 0;
  BigInt formula;
  std::uint64_t enumerated = 0;
  std::uint64_t domain_size = 0;
  bool count_ok = false;
  bool surjective = false;   // every member is hit
  bool fibres_ok = false;    // every member is hit exactly n times, by its shift orbit
  bool pass() const noexcept { return count_ok && surjective && fibres_ok; }
};

struct VerifyReport {
  int n = 1;
  std::vector<VerifyRow> rows;
  bool pass() const noexcept;
};

/// Exhaustive check of the count and of the fibre structure for every k in 0..n-1.
/// Throws Error(resource_cap) if a domain n^k * C(n,k+1) exceeds cap.
VerifyReport verify(int n, std::uint64_t cap = default_enumeration_cap);

/// Single-threaded reference for verify.
VerifyReport verify_serial(int n, std::uint64_t cap = default_enumeration_cap);

}  // namespace mfact
