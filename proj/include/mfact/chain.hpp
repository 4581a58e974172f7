#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "mfact/permutation.hpp"

namespace mfact {

/// Finite sequence of transpositions of {1,...,n}. Membership in the prefix set
/// (geodesic and below the long cycle) is not an invariant of the type; use validate().
class Chain {
public:
  Chain() = default;
  /// Throws Error(out_of_range) if any step leaves {1,...,n}.
  Chain(int n, std::vector<Transposition> steps);

  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(steps_.size()); }
  const std::vector<Transposition>& steps() const noexcept { return steps_; }
  const Transposition& operator[](int index) const { return steps_[static_cast<std::size_t>(index)]; }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;

private:
  int n_ = 1;
  std::vector<Transposition> steps_;
};

struct ValidityReport {
  bool is_geodesic = false;       // |gamma_k| = k
  bool is_below = false;          // gamma_k precedes (1 ... n)
  bool is_member = false;         // both of the above
  bool is_nondecreasing = false;  // i_1 <= ... <= i_k
};

/// gamma_l = tau_1 ... tau_l; l = 0 gives the identity.
Permutation intermediate(const Chain& c, int l);

ValidityReport validate(const Chain& c);

/// Throws Error(not_a_member) unless validate(c).is_member.
void require_member(const Chain& c);

/// (i_1, ..., i_k).
std::vector<int> projection(const Chain& c);

/// Mirror image ((n+1-j_k n+1-i_k), ..., (n+1-j_1 n+1-i_1)); input must be a member.
Chain involute(const Chain& c);

/// Union of all step endpoints, sorted. Equals the support of gamma_k for members.
std::vector<int> support(const Chain& c);

/// For a chain with non-decreasing i-sequence: for all l < m, j_l <= i_m or j_l > j_m.
/// Throws Error(precondition) if the i-sequence is not sorted.
bool check_carac(const Chain& c);

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

/// All members of length k in lexicographic order of steps. Empty when k >= n.
/// Throws Error(resource_cap) when the expected count exceeds cap.
/// Uses OpenMP over the first step when available; output order is deterministic.
std::vector<Chain> enumerate_sigma(int n, int k, std::uint64_t cap = default_enumeration_cap);

/// Single-threaded reference for enumerate_sigma.
std::vector<Chain> enumerate_sigma_serial(int n, int k, std::uint64_t cap = default_enumeration_cap);

}  // namespace mfact
