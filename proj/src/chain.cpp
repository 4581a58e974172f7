#include "mfact/chain.hpp"

#include <algorithm>
#include <string>

#include "mfact/error.hpp"

namespace mfact {

Chain::Chain(int n, std::vector<Transposition> steps) : n_(n), steps_(std::move(steps)) {
  if (n < 1)
    throw Error(Errc::out_of_range, "chain needs n >= 1");
  for (const auto& t : steps_)
    if (t.i < 1 || t.j <= t.i || t.j > n)
      throw Error(Errc::out_of_range, "step (" + std::to_string(t.i) + " " + std::to_string(t.j) +
                                          ") is not a transposition of 1.." + std::to_string(n));
}

Permutation intermediate(const Chain& c, int l) {
  if (l < 0 || l > c.length())
    throw Error(Errc::out_of_range,
                "prefix length " + std::to_string(l) + " outside 0.." + std::to_string(c.length()));
  Permutation g = Permutation::identity(c.n());
  for (int s = 0; s < l; ++s)
    g = g * Permutation::transposition(c.n(), c[s]);
  return g;
}

ValidityReport validate(const Chain& c) {
  const Permutation g = intermediate(c, c.length());
  ValidityReport r;
  r.is_geodesic = norm(g) == c.length();
  r.is_below = precedes(g, Permutation::long_cycle(c.n()));
  r.is_member = r.is_geodesic && r.is_below;
  const auto heads = projection(c);
  r.is_nondecreasing = std::is_sorted(heads.begin(), heads.end());
  return r;
}

void require_member(const Chain& c) {
  if (!validate(c).is_member)
    throw Error(Errc::not_a_member, "chain is not a prefix of a minimal factorization of (1 ... " +
                                        std::to_string(c.n()) + ")");
}

std::vector<int> projection(const Chain& c) {
  std::vector<int> heads;
  heads.reserve(c.steps().size());
  for (const auto& t : c.steps())
    heads.push_back(t.i);
  return heads;
}

Chain involute(const Chain& c) {
  require_member(c);
  const int n = c.n();
  std::vector<Transposition> steps;
  steps.reserve(c.steps().size());
  for (auto it = c.steps().rbegin(); it != c.steps().rend(); ++it)
    steps.emplace_back(n + 1 - it->j, n + 1 - it->i);
  return Chain(n, std::move(steps));
}

std::vector<int> support(const Chain& c) {
  require_member(c);
  std::vector<int> pts;
  for (const auto& t : c.steps()) {
    pts.push_back(t.i);
    pts.push_back(t.j);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool check_carac(const Chain& c) {
  const auto heads = projection(c);
  if (!std::is_sorted(heads.begin(), heads.end()))
    throw Error(Errc::precondition, "check_carac needs a non-decreasing i-sequence");
  const int k = c.length();
  for (int l = 0; l < k; ++l)
    for (int m = l + 1; m < k; ++m)
      if (!(c[l].j <= c[m].i || c[l].j > c[m].j))
        return false;
  return true;
}

}  // namespace mfact
