#include "mfact/action.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mfact/error.hpp"

namespace mfact {

namespace {

// Image of (a b) under conjugation by the transposition g: (g(a) g(b)).
Transposition conjugate(const Transposition& t, const Transposition& g) {
  auto img = [&g](int x) { return x == g.i ? g.j : x == g.j ? g.i : x; };
  return Transposition::unordered(img(t.i), img(t.j));
}

void check_generator(const Chain& c, int l) {
  if (l < 1 || l > c.length() - 1)
    throw Error(Errc::out_of_range, "generator index " + std::to_string(l) + " outside 1.." +
                                        std::to_string(c.length() - 1));
}

void braid_in_place(std::vector<Transposition>& steps, int l, bool inverse) {
  auto& left = steps[static_cast<std::size_t>(l - 1)];
  auto& right = steps[static_cast<std::size_t>(l)];
  if (!inverse) {
    const Transposition moved = conjugate(left, right);
    left = right;
    right = moved;
  } else {
    const Transposition moved = conjugate(right, left);
    right = left;
    left = moved;
  }
}

void generator_in_place(std::vector<Transposition>& steps, int l) {
  const int lo = steps[static_cast<std::size_t>(l - 1)].i;
  const int hi = steps[static_cast<std::size_t>(l)].i;
  if (lo == hi)
    return;
  braid_in_place(steps, l, lo > hi);
}

Chain apply_word_unchecked(const Chain& c, const std::vector<int>& word) {
  std::vector<Transposition> steps = c.steps();
  for (int l : word) {
    check_generator(c, l);
    generator_in_place(steps, l);
  }
  return Chain(c.n(), std::move(steps));
}

}  // namespace

Chain braid_step(const Chain& c, int l, bool inverse) {
  check_generator(c, l);
  require_member(c);
  std::vector<Transposition> steps = c.steps();
  braid_in_place(steps, l, inverse);
  return Chain(c.n(), std::move(steps));
}

Chain apply_generator(const Chain& c, int l) {
  check_generator(c, l);
  require_member(c);
  std::vector<Transposition> steps = c.steps();
  generator_in_place(steps, l);
  return Chain(c.n(), std::move(steps));
}

Chain apply_word(const Chain& c, const std::vector<int>& word) {
  require_member(c);
  return apply_word_unchecked(c, word);
}

std::vector<int> adjacent_word(const Permutation& p) {
  std::vector<int> w(p.images().begin(), p.images().end());
  std::vector<int> word;
  // w = (w s_l) s_l at every descent l, so recording descents in order peels generators off the right.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t l = 0; l + 1 < w.size(); ++l) {
      if (w[l] > w[l + 1]) {
        std::swap(w[l], w[l + 1]);
        word.push_back(static_cast<int>(l) + 1);
        changed = true;
      }
    }
  }
  return word;
}

Chain apply_permutation(const Chain& c, const Permutation& p) {
  const int k = c.length();
  if (p.n() != std::max(k, 1))
    throw Error(Errc::size_mismatch, "permutation of " + std::to_string(p.n()) + " points cannot act on a chain of length " +
                                         std::to_string(k));
  require_member(c);
  return apply_word_unchecked(c, adjacent_word(p));
}

std::vector<int> act_on_sequence(const Permutation& p, const std::vector<int>& x) {
  if (x.empty() && p.n() == 1)
    return {};
  if (static_cast<std::size_t>(p.n()) != x.size())
    throw Error(Errc::size_mismatch, "permutation of " + std::to_string(p.n()) +
                                         " points cannot act on a sequence of length " + std::to_string(x.size()));
  const Permutation inv = p.inverse();
  std::vector<int> y(x.size());
  for (int m = 1; m <= p.n(); ++m)
    y[m - 1] = x[inv(m) - 1];
  return y;
}

Permutation stable_sorting_permutation(const std::vector<int>& x) {
  if (x.empty())
    return Permutation::identity(1);
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&x](int a, int b) { return x[a - 1] < x[b - 1]; });
  // order is the one-line form of p^-1: position m takes x at index order[m].
  return Permutation(std::move(order)).inverse();
}

std::pair<Permutation, Chain> sort_chain(const Chain& c) {
  Permutation p = stable_sorting_permutation(projection(c));
  Chain d = apply_permutation(c, p);
  return {std::move(p), std::move(d)};
}

}  // namespace mfact
