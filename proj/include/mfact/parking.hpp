#pragma once

#include <vector>

namespace mfact {

/// Entry points E (length k) and open spaces O (k+1 distinct values) in a circular lot of n spaces.
struct ParkingInput {
  int n = 1;
  std::vector<int> entries;
  std::vector<int> open_spaces;

  /// Sorts open_spaces and throws Error unless the invariants hold.
  ParkingInput(int n, std::vector<int> entries, std::vector<int> open_spaces);
};

struct ParkingOutcome {
  std::vector<int> spaces;  // p_1, ..., p_k
  int residue = 1;

  friend bool operator==(const ParkingOutcome&, const ParkingOutcome&) = default;
};

/// One car of the process. Cars run from the last entry to the first.
struct CarTrace {
  int index = 0;  // l, 1-based
  int entry = 0;
  std::vector<int> probed;  // spaces visited after the entry point, the last one is taken
  int space = 0;
};

struct ParkingTrace {
  std::vector<CarTrace> cars;  // in processing order: car k first
  ParkingOutcome outcome;
};

ParkingOutcome park(const ParkingInput& input);
ParkingTrace park_traced(const ParkingInput& input);
int residue(const ParkingInput& input);

/// Sorted set of distinct values, checked against {1,...,n}.
std::vector<int> normalize_set(int n, std::vector<int> values);

struct ShiftedPair {
  std::vector<int> a;
  std::vector<int> b;  // sorted
  int shift = 0;       // in [0, n-1]

  friend bool operator==(const ShiftedPair&, const ShiftedPair&) = default;
};

/// Adds t modulo n (results in 1..n) to every entry of a and every element of b.
ShiftedPair shift_pair(const std::vector<int>& a, const std::vector<int>& b, int t, int n);

/// Shifts (a, b) by 1 - residue(a, b) so that the residue becomes 1.
ShiftedPair normalize(const std::vector<int>& a, const std::vector<int>& b, int n);

}  // namespace mfact
