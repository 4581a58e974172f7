#include "mfact/parking.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mfact/error.hpp"

namespace mfact {

namespace {

void check_values(int n, const std::vector<int>& v, const char* what) {
  for (int x : v)
    if (x < 1 || x > n)
      throw Error(Errc::out_of_range,
                  std::string(what) + " value " + std::to_string(x) + " outside 1.." + std::to_string(n));
}

int wrap(int x, int n) { return ((x - 1) % n + n) % n + 1; }

}  // namespace

std::vector<int> normalize_set(int n, std::vector<int> values) {
  check_values(n, values, "set");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw Error(Errc::malformed, "set has repeated elements");
  return values;
}

ParkingInput::ParkingInput(int n, std::vector<int> entries, std::vector<int> open_spaces)
    : n(n), entries(std::move(entries)) {
  if (n < 1)
    throw Error(Errc::out_of_range, "parking needs n >= 1");
  check_values(n, this->entries, "entry");
  this->open_spaces = normalize_set(n, std::move(open_spaces));
  if (this->open_spaces.size() != this->entries.size() + 1)
    throw Error(Errc::size_mismatch, "need exactly one more open space than entries (got " +
                                         std::to_string(this->open_spaces.size()) + " spaces for " +
                                         std::to_string(this->entries.size()) + " entries)");
}

ParkingTrace park_traced(const ParkingInput& input) {
  const int n = input.n;
  const int k = static_cast<int>(input.entries.size());
  // 0 = closed, 1 = open and free, 2 = taken
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  for (int o : input.open_spaces)
    state[o] = 1;

  ParkingTrace trace;
  trace.outcome.spaces.assign(static_cast<std::size_t>(k), 0);
  for (int l = k; l >= 1; --l) {
    CarTrace car;
    car.index = l;
    car.entry = input.entries[l - 1];
    // |O| = k + 1 > taken spaces, so a full loop always finds one.
    for (int s = 1; s <= n; ++s) {
      const int pos = wrap(car.entry + s, n);
      car.probed.push_back(pos);
      if (state[pos] == 1) {
        state[pos] = 2;
        car.space = pos;
        break;
      }
    }
    trace.outcome.spaces[l - 1] = car.space;
    trace.cars.push_back(std::move(car));
  }
  for (int o : input.open_spaces)
    if (state[o] == 1)
      trace.outcome.residue = o;
  return trace;
}

ParkingOutcome park(const ParkingInput& input) { return park_traced(input).outcome; }

int residue(const ParkingInput& input) { return park(input).residue; }

ShiftedPair shift_pair(const std::vector<int>& a, const std::vector<int>& b, int t, int n) {
  if (n < 1)
    throw Error(Errc::out_of_range, "shift needs n >= 1");
  check_values(n, a, "sequence");
  check_values(n, b, "set");
  ShiftedPair out;
  out.shift = ((t % n) + n) % n;
  out.a.reserve(a.size());
  for (int x : a)
    out.a.push_back(wrap(x + out.shift, n));
  for (int x : b)
    out.b.push_back(wrap(x + out.shift, n));
  std::sort(out.b.begin(), out.b.end());
  return out;
}

ShiftedPair normalize(const std::vector<int>& a, const std::vector<int>& b, int n) {
  const int rho = residue(ParkingInput(n, a, b));
  ShiftedPair out = shift_pair(a, b, 1 - rho, n);
  if (residue(ParkingInput(n, out.a, out.b)) != 1)
    throw std::logic_error("normalized pair does not have residue 1");
  return out;
}

}  // namespace mfact
