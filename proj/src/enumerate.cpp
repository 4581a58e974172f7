#include <string>

#include "mfact/chain.hpp"
#include "mfact/error.hpp"
#include "mfact/surjection.hpp"

namespace mfact {

namespace {

std::vector<Transposition> all_transpositions(int n) {
  std::vector<Transposition> ts;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      ts.emplace_back(i, j);
  return ts;
}

void check_cap(int n, int k, std::uint64_t cap) {
  if (n < 1 || k < 0)
    throw Error(Errc::out_of_range, "enumeration needs n >= 1 and k >= 0");
  if (count_formula(n, k) > cap)
    throw Error(Errc::resource_cap, "|Sigma_" + std::to_string(n) + "(" + std::to_string(k) +
                                        ")| exceeds the enumeration cap " + std::to_string(cap));
}

// Depth-first extension of valid prefixes on raw one-line images. gamma * (i j) swaps the
// images of i and j; the step is geodesic iff i and j lie in different cycles of gamma, and the
// result stays below (1 ... n) iff its cycles are increasing and non-crossing.
class Extender {
public:
  Extender(int n, int k, const std::vector<Transposition>& ts, std::vector<Chain>& out)
      : n_(n), k_(k), ts_(ts), out_(out), scratch_(3 * (static_cast<std::size_t>(n) + 1)) {
    images_.resize(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x)
      images_[x - 1] = x;
  }

  void run() { extend(); }

  // Only extensions of the single first step `first`.
  void run_from(const Transposition& first) {
    push(first);
    extend();
    pop();
  }

private:
  bool same_cycle(int a, int b) const {
    for (int y = images_[a - 1]; y != a; y = images_[y - 1])
      if (y == b)
        return true;
    return false;
  }

  void push(const Transposition& t) {
    std::swap(images_[t.i - 1], images_[t.j - 1]);
    path_.push_back(t);
  }

  void pop() {
    const Transposition t = path_.back();
    path_.pop_back();
    std::swap(images_[t.i - 1], images_[t.j - 1]);
  }

  void extend() {
    if (static_cast<int>(path_.size()) == k_) {
      out_.emplace_back(n_, path_);
      return;
    }
    for (const auto& t : ts_) {
      if (same_cycle(t.i, t.j))
        continue;
      push(t);
      if (detail::below_long_cycle(images_, scratch_))
        extend();
      pop();
    }
  }

  int n_;
  int k_;
  const std::vector<Transposition>& ts_;
  std::vector<Chain>& out_;
  std::vector<int> images_;
  std::vector<int> scratch_;
  std::vector<Transposition> path_;
};

}  // namespace

std::vector<Chain> enumerate_sigma_serial(int n, int k, std::uint64_t cap) {
  check_cap(n, k, cap);
  std::vector<Chain> out;
  if (k >= n)
    return out;
  const auto ts = all_transpositions(n);
  Extender ext(n, k, ts, out);
  ext.run();
  return out;
}

std::vector<Chain> enumerate_sigma(int n, int k, std::uint64_t cap) {
  check_cap(n, k, cap);
  if (k >= n)
    return {};
  if (k == 0)
    return {Chain(n, {})};
  const auto ts = all_transpositions(n);
  const int roots = static_cast<int>(ts.size());
  // Every transposition is a valid first step, so one bucket per root keeps the order lexicographic.
  std::vector<std::vector<Chain>> buckets(ts.size());
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < roots; ++r) {
    Extender ext(n, k, ts, buckets[r]);
    ext.run_from(ts[r]);
  }
  std::size_t total = 0;
  for (const auto& b : buckets)
    total += b.size();
  std::vector<Chain> out;
  out.reserve(total);
  for (auto& b : buckets)
    out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return out;
}

}  // namespace mfact
