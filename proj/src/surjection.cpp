#include "mfact/surjection.hpp"

#include <algorithm>
#include <string>

#include "mfact/action.hpp"
#include "mfact/error.hpp"

namespace mfact {

PairAB::PairAB(int n, std::vector<int> a, std::vector<int> b) : n(n), a(std::move(a)) {
  if (n < 1)
    throw Error(Errc::out_of_range, "pair needs n >= 1");
  for (int x : this->a)
    if (x < 1 || x > n)
      throw Error(Errc::out_of_range, "sequence value " + std::to_string(x) + " outside 1.." + std::to_string(n));
  this->b = normalize_set(n, std::move(b));
  if (this->b.size() != this->a.size() + 1)
    throw Error(Errc::size_mismatch, "B must have exactly one more element than A (got |A| = " +
                                         std::to_string(this->a.size()) + ", |B| = " + std::to_string(this->b.size()) + ")");
}

GammaTrace gamma_traced(const PairAB& p) {
  const int n = p.n;
  const int k = p.k();
  if (k >= n)
    throw Error(Errc::precondition, "gamma needs k <= n - 1");

  GammaTrace tr;
  // Cars enter in sorted order; the residue does not depend on the order of A.
  std::vector<int> entries = p.a;
  std::sort(entries.begin(), entries.end());
  tr.first_parking = park(ParkingInput(n, std::move(entries), p.b));
  const ShiftedPair shifted = normalize(p.a, p.b, n);
  tr.shift = shifted.shift;
  tr.normalized = PairAB(n, shifted.a, shifted.b);

  tr.sorted_entries = tr.normalized.a;
  std::sort(tr.sorted_entries.begin(), tr.sorted_entries.end());
  tr.second_parking = park(ParkingInput(n, tr.sorted_entries, tr.normalized.b));

  std::vector<Transposition> steps;
  steps.reserve(static_cast<std::size_t>(k));
  for (int l = 0; l < k; ++l)
    steps.emplace_back(tr.sorted_entries[l], tr.second_parking.spaces[l]);
  tr.sorted_chain = Chain(n, std::move(steps));

  tr.sorter = stable_sorting_permutation(tr.normalized.a);
  tr.result = apply_permutation(tr.sorted_chain, tr.sorter.inverse());
  return tr;
}

Chain gamma(const PairAB& p) { return gamma_traced(p).result; }

PairAB section(const Chain& c) {
  const auto [p, sorted] = sort_chain(c);
  std::vector<int> b{1};
  for (const auto& t : sorted.steps())
    b.push_back(t.j);
  return PairAB(c.n(), projection(c), std::move(b));
}

std::vector<PairAB> fiber(const Chain& c) {
  const PairAB base = section(c);
  std::vector<PairAB> out;
  out.reserve(static_cast<std::size_t>(c.n()));
  for (int t = 0; t < c.n(); ++t) {
    ShiftedPair s = shift_pair(base.a, base.b, t, base.n);
    out.emplace_back(base.n, std::move(s.a), std::move(s.b));
  }
  return out;
}

BigInt count_formula(int n, int k) {
  if (n < 1 || k < 0)
    throw Error(Errc::out_of_range, "count_formula needs n >= 1 and k >= 0");
  if (k >= n)
    return 0;
  if (k == 0)
    return 1;
  BigInt binom = 1;
  for (int r = 0; r < k + 1; ++r)
    binom = binom * (n - r) / (r + 1);
  BigInt power = 1;
  for (int r = 0; r < k - 1; ++r)
    power *= n;
  return power * binom;
}

bool VerifyReport::pass() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass(); });
}

}  // namespace mfact
