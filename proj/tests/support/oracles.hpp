#pragma once

// Brute-force oracles and structural property checks shared by the unit and acceptance suites.
// Nothing here calls enumerate_sigma or the non-crossing scan it is compared against.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "mfact/mfact.hpp"

namespace mfact::testing {

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

inline std::vector<Transposition> all_transpositions(int n) {
  std::vector<Transposition> ts;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      ts.emplace_back(i, j);
  return ts;
}

// Literal quadruple test for the non-crossing condition plus the increasing-cycle condition.
inline bool below_long_cycle_by_quadruples(const Permutation& s) {
  const int n = s.n();
  std::vector<int> label(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) {
    const auto cyc = cycle_of(s, x);
    const int lo = *std::min_element(cyc.begin(), cyc.end());
    label[x] = lo;
  }
  for (int x = 1; x <= n; ++x) {
    if (label[x] != x)
      continue;
    auto cyc = cycle_of(s, x);
    if (!std::is_sorted(cyc.begin(), cyc.end()))
      return false;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (label[i] == label[k] && label[j] == label[l] && label[i] != label[j])
            return false;
  return true;
}

// Calls f on every sequence in T_n^k.
template <typename F>
void for_each_tuple(int n, int k, F&& f) {
  const auto ts = all_transpositions(n);
  if (ts.empty()) {
    if (k == 0)
      f(Chain(n, {}));
    return;
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<Transposition> steps;
    for (auto x : idx)
      steps.push_back(ts[x]);
    f(Chain(n, std::move(steps)));
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == ts.size())
      idx[pos--] = 0;
    if (pos < 0)
      return;
  }
}

// All factorizations of (1 ... n) into n-1 transpositions, by filtering every tuple on its product.
inline std::vector<Chain> minimal_factorizations(int n) {
  std::vector<Chain> out;
  const Permutation target = Permutation::long_cycle(n);
  for_each_tuple(n, n - 1, [&](const Chain& c) {
    if (intermediate(c, n - 1) == target)
      out.push_back(c);
  });
  return out;
}

// Prefix set as the k-prefixes of minimal factorizations. Independent of the partial order.
inline std::set<Chain> prefixes_of(const std::vector<Chain>& factorizations, int n, int k) {
  std::set<Chain> out;
  if (k >= n)
    return out;
  for (const auto& c : factorizations)
    out.insert(Chain(n, std::vector<Transposition>(c.steps().begin(), c.steps().begin() + k)));
  return out;
}

// Chains with sorted i-sequence, all lengths up to max_k.
inline std::vector<Chain> sorted_head_sequences(int n, int k) {
  std::vector<Chain> out;
  const auto ts = all_transpositions(n);
  std::vector<Transposition> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(n, cur);
      return;
    }
    for (const auto& t : ts) {
      if (!cur.empty() && t.i < cur.back().i)
        continue;
      cur.push_back(t);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline std::set<int> cycle_set(const Permutation& s, int x) {
  const auto c = cycle_of(s, x);
  return {c.begin(), c.end()};
}

// Step-by-step cycle bounds for members. Returns the first failing assertion number, 0 if all hold.
inline int first_failing_step_bound(const Chain& c) {
  const int n = c.n();
  const int k = c.length();
  const auto heads = projection(c);
  const int max_head = heads.empty() ? 0 : *std::max_element(heads.begin(), heads.end());
  int last_max = -1;
  for (int l = 0; l < k; ++l)
    if (heads[l] == max_head)
      last_max = l;
  for (int l = 1; l <= k; ++l) {
    const Permutation prev = intermediate(c, l - 1);
    const int i = c[l - 1].i;
    const int j = c[l - 1].j;
    const auto cj = cycle_set(prev, j);
    const auto ci = cycle_set(prev, i);
    const int min_cj = *cj.begin();
    if (!(i < min_cj))
      return 1;
    for (int x : ci)
      if (x < min_cj && x > i)
        return 1;
    if (j != *cj.rbegin())
      return 2;
    if (i + 1 <= n) {
      const auto cnext = cycle_set(prev, i + 1);
      if (!(i < *cnext.begin()))
        return 3;
      const bool earlier = std::find(heads.begin(), heads.begin() + (l - 1), i + 1) != heads.begin() + (l - 1);
      if (!earlier && cnext != std::set<int>{i + 1})
        return 4;
    }
    if (k == n - 1 && l - 1 == last_max && j != i + 1)
      return 5;
  }
  return 0;
}

inline bool equal_heads_decreasing_tails(const Chain& c) {
  for (int l = 0; l < c.length(); ++l)
    for (int m = l + 1; m < c.length(); ++m) {
      if (c[l].i == c[m].i && !(c[l].j > c[m].j))
        return false;
      if (c[l].j == c[m].j && !(c[l].i > c[m].i))
        return false;
    }
  return true;
}

// For members with sorted heads: tails distinct, each tail fixed before its step, the step
// inserts j right after i, and supports grow by the step endpoints.
inline bool sorted_member_insertion_properties(const Chain& c) {
  std::set<int> tails;
  std::set<int> pts;
  for (int l = 1; l <= c.length(); ++l) {
    const Permutation prev = intermediate(c, l - 1);
    const Permutation cur = intermediate(c, l);
    const int i = c[l - 1].i;
    const int j = c[l - 1].j;
    if (!tails.insert(j).second)
      return false;
    if (prev(j) != j)
      return false;
    for (int x = 1; x <= c.n(); ++x) {
      const int expected = x == i ? j : x == j ? prev(i) : prev(x);
      if (cur(x) != expected)
        return false;
    }
    pts.insert(i);
    pts.insert(j);
    const auto sup = support(cur);
    if (std::set<int>(sup.begin(), sup.end()) != pts)
      return false;
  }
  return true;
}

// j_l = min(support(gamma_l) intersected with [i_l + 1, n]) for members with sorted heads.
inline bool tails_are_support_minima(const Chain& c) {
  for (int l = 1; l <= c.length(); ++l) {
    const auto sup = support(intermediate(c, l));
    const auto it = std::upper_bound(sup.begin(), sup.end(), c[l - 1].i);
    if (it == sup.end() || *it != c[l - 1].j)
      return false;
  }
  return true;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<int> random_sequence(int n, int k, std::mt19937_64& rng) {
  std::vector<int> a(static_cast<std::size_t>(k));
  for (auto& x : a)
    x = uniform(rng, 1, n);
  return a;
}

inline std::vector<int> random_subset(int n, int size, std::mt19937_64& rng) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(size));
  std::sort(all.begin(), all.end());
  return all;
}

// Calls f on every (E, O) with E in [n]^k and O a (k+1)-subset of [n].
template <typename F>
void for_each_parking_input(int n, int k, F&& f) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k + 1) {
      subsets.push_back(cur);
      return;
    }
    for (int x = next; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::vector<int> e(static_cast<std::size_t>(k), 1);
  while (true) {
    for (const auto& o : subsets)
      f(e, o);
    int pos = k - 1;
    while (pos >= 0 && ++e[pos] > n)
      e[pos--] = 1;
    if (pos < 0)
      return;
  }
}

// Random word over the generators 1..k-1.
inline std::vector<int> random_word(int k, int length, std::mt19937_64& rng) {
  std::vector<int> w;
  if (k < 2)
    return w;
  for (int s = 0; s < length; ++s)
    w.push_back(uniform(rng, 1, k - 1));
  return w;
}

// Product s_{w[m-1]} ... s_{w[0]} in S_k.
inline Permutation word_product(int k, const std::vector<int>& word) {
  Permutation p = Permutation::identity(std::max(k, 1));
  for (int l : word)
    p = Permutation::transposition(k, Transposition(l, l + 1)) * p;
  return p;
}

}  // namespace mfact::testing
