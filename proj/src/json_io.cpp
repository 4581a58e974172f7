#include "mfact/json_io.hpp"

#include <string>

#include "mfact/error.hpp"

namespace mfact {

using nlohmann::json;

namespace {

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::malformed, std::string("bad JSON input: ") + e.what());
  }
}

}  // namespace

json to_json(const Chain& c) {
  json steps = json::array();
  for (const auto& t : c.steps())
    steps.push_back({t.i, t.j});
  return {{"n", c.n()}, {"steps", steps}};
}

Chain chain_from_json(const json& j) {
  return guarded([&] {
    std::vector<Transposition> steps;
    for (const auto& s : j.at("steps")) {
      if (!s.is_array() || s.size() != 2)
        throw Error(Errc::malformed, "each step must be a two-element array");
      const int a = s[0].get<int>();
      const int b = s[1].get<int>();
      if (a == b)
        throw Error(Errc::malformed, "step [" + std::to_string(a) + "," + std::to_string(b) + "] is not a transposition");
      steps.push_back(Transposition::unordered(a, b));
    }
    return Chain(j.at("n").get<int>(), std::move(steps));
  });
}

json to_json(const PairAB& p) { return {{"n", p.n}, {"a", p.a}, {"b", p.b}}; }

PairAB pair_from_json(const json& j) {
  return guarded([&] {
    return PairAB(j.at("n").get<int>(), j.at("a").get<std::vector<int>>(), j.at("b").get<std::vector<int>>());
  });
}

json to_json(const ParkingOutcome& o) { return {{"spaces", o.spaces}, {"residue", o.residue}}; }

json to_json(const ParkingTrace& t) {
  json out = to_json(t.outcome);
  json cars = json::array();
  for (const auto& c : t.cars)
    cars.push_back({{"car", c.index}, {"entry", c.entry}, {"probed", c.probed}, {"space", c.space}});
  out["trace"] = cars;
  return out;
}

json to_json(const ValidityReport& r) {
  return {{"is_geodesic", r.is_geodesic},
          {"is_below", r.is_below},
          {"is_member", r.is_member},
          {"is_nondecreasing", r.is_nondecreasing}};
}

json to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(v);
  return v.str();
}

json to_json(const VerifyReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"k", row.k},
                    {"formula", to_json(row.formula)},
                    {"enumerated", row.enumerated},
                    {"domain", row.domain_size},
                    {"count_ok", row.count_ok},
                    {"surjective", row.surjective},
                    {"fibres_ok", row.fibres_ok},
                    {"pass", row.pass()}});
  return {{"n", r.n}, {"rows", rows}, {"pass", r.pass()}};
}

}  // namespace mfact
