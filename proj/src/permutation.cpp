#include "mfact/permutation.hpp"

#include <algorithm>
#include <string>

#include "mfact/error.hpp"

namespace mfact {

Transposition::Transposition(int i, int j) : i(i), j(j) {
  if (i < 1 || j <= i)
    throw Error(Errc::out_of_range,
                "transposition (" + std::to_string(i) + " " + std::to_string(j) + ") needs 1 <= i < j");
}

Transposition Transposition::unordered(int a, int b) {
  return a < b ? Transposition(a, b) : Transposition(b, a);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1)
    throw Error(Errc::out_of_range, "permutation needs n >= 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw Error(Errc::malformed, "one-line images do not form a bijection of {1.." + std::to_string(n) + "}");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1)
    throw Error(Errc::out_of_range, "permutation needs n >= 1");
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    im[x - 1] = x;
  return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::long_cycle(int n) {
  Permutation c = identity(n);
  for (int x = 1; x <= n; ++x)
    c.images_[x - 1] = x == n ? 1 : x + 1;
  return c;
}

Permutation Permutation::transposition(int n, Transposition t) {
  if (t.j > n)
    throw Error(Errc::out_of_range, "transposition exceeds n = " + std::to_string(n));
  Permutation s = identity(n);
  std::swap(s.images_[t.i - 1], s.images_[t.j - 1]);
  return s;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation s = identity(n);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& cyc : cycles) {
    for (int x : cyc) {
      if (x < 1 || x > n)
        throw Error(Errc::out_of_range, "cycle entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
      if (used[x - 1])
        throw Error(Errc::malformed, "cycles are not disjoint at " + std::to_string(x));
      used[x - 1] = 1;
    }
    for (std::size_t p = 0; p < cyc.size(); ++p)
      s.images_[cyc[p] - 1] = cyc[(p + 1) % cyc.size()];
  }
  return s;
}

int Permutation::operator()(int x) const {
  if (x < 1 || x > n())
    throw Error(Errc::out_of_range, "point " + std::to_string(x) + " outside 1.." + std::to_string(n()));
  return images_[x - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[images_[x] - 1] = static_cast<int>(x) + 1;
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x) + 1)
      return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n())
    throw Error(Errc::size_mismatch,
                "cannot multiply permutations of sizes " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
  std::vector<int> im(a.images_.size());
  for (std::size_t x = 0; x < im.size(); ++x)
    im[x] = a.images_[b.images_[x] - 1];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

Permutation multiply(const Permutation& a, const Permutation& b) { return a * b; }

int cycle_count(const Permutation& s) {
  const auto im = s.images();
  std::vector<char> seen(im.size(), 0);
  int count = 0;
  for (std::size_t x = 0; x < im.size(); ++x) {
    if (seen[x])
      continue;
    ++count;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(im[y] - 1))
      seen[y] = 1;
  }
  return count;
}

int norm(const Permutation& s) { return s.n() - cycle_count(s); }

bool precedes(const Permutation& a, const Permutation& b) {
  return norm(b) == norm(a) + norm(a.inverse() * b);
}

namespace detail {

bool below_long_cycle(std::span<const int> images, std::span<int> scratch) {
  const int n = static_cast<int>(images.size());
  auto img = [&images](int x) { return images[static_cast<std::size_t>(x - 1)]; };
  // block[x] = minimum of the cycle of x; last[b] = maximum of block b; open is a stack of blocks
  const auto stride = static_cast<std::size_t>(n) + 1;
  std::span<int> block = scratch.subspan(0, stride);
  std::span<int> last = scratch.subspan(stride, stride);
  std::span<int> open = scratch.subspan(2 * stride, stride);
  std::fill(block.begin(), block.end(), 0);
  for (int x = 1; x <= n; ++x) {
    if (block[x])
      continue;
    // x is the minimum of its cycle; the cycle must climb until it wraps back to x.
    int prev = x;
    block[x] = x;
    for (int y = img(x); y != x; y = img(y)) {
      if (y < prev)
        return false;
      block[y] = x;
      prev = y;
    }
    last[x] = prev;
  }
  // Blocks are non-crossing iff a left-to-right scan only ever touches the innermost open block.
  std::size_t depth = 0;
  for (int x = 1; x <= n; ++x) {
    const int b = block[x];
    if (b == x) {
      if (last[b] != x)
        open[depth++] = b;
      continue;
    }
    if (depth == 0 || open[depth - 1] != b)
      return false;
    if (last[b] == x)
      --depth;
  }
  return true;
}

}  // namespace detail

bool below_long_cycle_geometric(const Permutation& s) {
  std::vector<int> scratch(3 * (static_cast<std::size_t>(s.n()) + 1));
  return detail::below_long_cycle(s.images(), scratch);
}

std::vector<int> cycle_of(const Permutation& s, int x) {
  std::vector<int> cyc{x};
  for (int y = s(x); y != x; y = s(y))
    cyc.push_back(y);
  return cyc;
}

std::vector<std::vector<int>> cycles(const Permutation& s) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(s.n()) + 1, 0);
  for (int x = 1; x <= s.n(); ++x) {
    if (seen[x])
      continue;
    out.push_back(cycle_of(s, x));
    for (int y : out.back())
      seen[y] = 1;
  }
  return out;
}

std::vector<int> support(const Permutation& s) {
  std::vector<int> out;
  for (int x = 1; x <= s.n(); ++x)
    if (s(x) != x)
      out.push_back(x);
  return out;
}

}  // namespace mfact
