#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mfact {

/// Transposition (i j) of {1,...,n}, always stored with i < j.
struct Transposition {
  int i = 1;
  int j = 2;

  Transposition() = default;
  /// Throws Error(out_of_range) unless 1 <= i < j.
  Transposition(int i, int j);

  /// Builds (min(a,b) max(a,b)); a and b must differ.
  static Transposition unordered(int a, int b);

  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

/// Bijection of {1,...,n} stored in one-line form. All inputs and outputs are 1-based.
///
/// Products follow the right-factor-first convention: (a * b)(x) = a(b(x)).
class Permutation {
public:
  /// Identity of {1}.
  Permutation() : images_{1} {}

  /// Takes one-line images (images[x-1] = sigma(x)); throws unless it is a bijection of {1,...,n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The long cycle (1 2 ... n).
  static Permutation long_cycle(int n);
  static Permutation transposition(int n, Transposition t);
  /// Product of the given cycles (which must be pairwise disjoint).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const;
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// Product a * b (b acts first). Throws Error(size_mismatch) when a.n() != b.n().
Permutation multiply(const Permutation& a, const Permutation& b);

/// Number of cycles, fixed points included.
int cycle_count(const Permutation& s);

/// Cayley-graph distance to the identity with transpositions as generators: n - cycle_count.
int norm(const Permutation& s);

/// a lies on a geodesic from the identity to b: |b| = |a| + |a^-1 b|.
bool precedes(const Permutation& a, const Permutation& b);

/// Non-crossing test for s below (1 ... n): every cycle increases from its minimum and
/// no two cycles interleave.
bool below_long_cycle_geometric(const Permutation& s);

namespace detail {
/// below_long_cycle_geometric on raw one-line images; scratch must hold 3 * (n + 1) ints.
bool below_long_cycle(std::span<const int> images, std::span<int> scratch);
}  // namespace detail

/// Cycle through x, listed from x in the order x, s(x), s(s(x)), ...
std::vector<int> cycle_of(const Permutation& s, int x);

/// All cycles including fixed points, each starting at its minimum, sorted by minimum.
std::vector<std::vector<int>> cycles(const Permutation& s);

/// Sorted list of points moved by s.
std::vector<int> support(const Permutation& s);

}  // namespace mfact
