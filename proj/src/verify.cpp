#include <algorithm>
#include <cstdint>
#include <string>

#include "mfact/error.hpp"
#include "mfact/surjection.hpp"

namespace mfact {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= n - (size - static_cast<int>(cur.size())) + 1; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Decodes index into a base-n digit sequence of length k with digits 1..n.
std::vector<int> sequence_at(std::uint64_t index, int n, int k) {
  std::vector<int> a(static_cast<std::size_t>(k));
  for (int pos = k - 1; pos >= 0; --pos) {
    a[pos] = static_cast<int>(index % static_cast<std::uint64_t>(n)) + 1;
    index /= static_cast<std::uint64_t>(n);
  }
  return a;
}

VerifyRow verify_row(int n, int k, std::uint64_t cap, bool parallel) {
  VerifyRow row;
  row.k = k;
  row.formula = count_formula(n, k);
  BigInt domain = 1;
  for (int r = 0; r < k; ++r)
    domain *= n;
  const auto subsets = subsets_of_size(n, k + 1);
  domain *= subsets.size();
  if (domain > cap)
    throw Error(Errc::resource_cap, "domain of size " + domain.str() + " for k = " + std::to_string(k) +
                                        " exceeds the cap " + std::to_string(cap));
  row.domain_size = static_cast<std::uint64_t>(domain);

  const std::vector<Chain> members = parallel ? enumerate_sigma(n, k, cap) : enumerate_sigma_serial(n, k, cap);
  row.enumerated = members.size();
  row.count_ok = BigInt(row.enumerated) == row.formula;

  const std::uint64_t sequences = row.domain_size / subsets.size();
  const auto total = static_cast<std::int64_t>(sequences);
  std::vector<std::uint64_t> hits(members.size(), 0);
  std::uint64_t stray = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : stray) if (parallel)
  for (std::int64_t s = 0; s < total; ++s) {
    const std::vector<int> a = sequence_at(static_cast<std::uint64_t>(s), n, k);
    for (const auto& b : subsets) {
      const Chain image = gamma(PairAB(n, a, b));
      const auto it = std::lower_bound(members.begin(), members.end(), image);
      if (it == members.end() || *it != image) {
        ++stray;
        continue;
      }
      const auto idx = static_cast<std::size_t>(it - members.begin());
#pragma omp atomic
      ++hits[idx];
    }
  }

  row.surjective = stray == 0 && std::all_of(hits.begin(), hits.end(), [](std::uint64_t h) { return h > 0; });

  // Each fibre has exactly n elements and contains the n distinct shifts of the section,
  // hence is exactly that shift orbit.
  bool fibres_ok = std::all_of(hits.begin(), hits.end(), [n](std::uint64_t h) { return h == static_cast<std::uint64_t>(n); });
  const auto count = static_cast<std::int64_t>(members.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : fibres_ok) if (parallel)
  for (std::int64_t m = 0; m < count; ++m) {
    const Chain& c = members[static_cast<std::size_t>(m)];
    std::vector<PairAB> orbit = fiber(c);
    int residue_one = 0;
    bool ok = true;
    for (const auto& p : orbit) {
      ok = ok && gamma(p) == c;
      residue_one += residue(ParkingInput(n, p.a, p.b)) == 1;
    }
    std::sort(orbit.begin(), orbit.end());
    ok = ok && std::adjacent_find(orbit.begin(), orbit.end()) == orbit.end() &&
         orbit.size() == static_cast<std::size_t>(n) && residue_one == 1;
    fibres_ok = fibres_ok && ok;
  }
  row.fibres_ok = fibres_ok;
  return row;
}

VerifyReport verify_impl(int n, std::uint64_t cap, bool parallel) {
  if (n < 1)
    throw Error(Errc::out_of_range, "verify needs n >= 1");
  VerifyReport report;
  report.n = n;
  for (int k = 0; k < n; ++k)
    report.rows.push_back(verify_row(n, k, cap, parallel));
  return report;
}

}  // namespace

VerifyReport verify(int n, std::uint64_t cap) { return verify_impl(n, cap, true); }

VerifyReport verify_serial(int n, std::uint64_t cap) { return verify_impl(n, cap, false); }

}  // namespace mfact
