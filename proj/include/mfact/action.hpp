#pragma once

#include <utility>
#include <vector>

#include "mfact/chain.hpp"
#include "mfact/permutation.hpp"

namespace mfact {

/// Braid move at positions (l, l+1), 1 <= l <= k-1.
/// forward:  (g_l, g_l+1) -> (g_l+1, g_l+1^-1 g_l g_l+1)
/// inverse:  (g_l, g_l+1) -> (g_l g_l+1 g_l^-1, g_l)
Chain braid_step(const Chain& c, int l, bool inverse);

/// Coxeter generator sigma_l acting on a member chain: identity when i_l = i_l+1,
/// forward braid move when i_l < i_l+1, inverse braid move otherwise.
Chain apply_generator(const Chain& c, int l);

/// Applies the generators of `word` in order (word[0] first). Membership is checked once.
Chain apply_word(const Chain& c, const std::vector<int>& word);

/// Adjacent-transposition word for p: p = s_{w[m-1]} ... s_{w[1]} s_{w[0]}, so that applying
/// the generators in word order realizes p. Built by bubble sort; reduced.
std::vector<int> adjacent_word(const Permutation& p);

/// p . c for p in S_k (k = c.length()). Throws Error(size_mismatch) when p.n() != k.
/// The empty chain accepts the identity of S_1.
Chain apply_permutation(const Chain& c, const Permutation& p);

/// Natural action on sequences: (p . x)_m = x_{p^-1(m)}.
std::vector<int> act_on_sequence(const Permutation& p, const std::vector<int>& x);

/// Stable sorting permutation p of x: p . x is non-decreasing, equal values keep their order.
Permutation stable_sorting_permutation(const std::vector<int>& x);

/// Returns (p, p . c) where p is the stable sorting permutation of projection(c).
std::pair<Permutation, Chain> sort_chain(const Chain& c);

}  // namespace mfact
