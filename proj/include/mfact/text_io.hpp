#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mfact/chain.hpp"
#include "mfact/permutation.hpp"

namespace mfact {

/// Non-trivial cycles in parentheses, each from its minimum, e.g. "(1 3 5 7 8)"; "()" for identity.
std::string format_permutation(const Permutation& s);

/// Accepts cycle lists such as "(1 3)(2 4)", "(1 3) (2 4)" or "()". Throws Error(malformed).
Permutation parse_permutation(int n, std::string_view text);

/// Accepts either cycle notation or a one-line sequence "2,4,1,3" / "2 4 1 3" / "[2,4,1,3]".
/// n is taken from the sequence length in the one-line case.
Permutation parse_permutation_any(int n, std::string_view text);

/// "(3 8)(5 7)(1 8)(3 7)"; the empty chain prints as "()".
std::string format_chain(const Chain& c);
Chain parse_chain(int n, std::string_view text);

/// "1,3,7,1" or "1 3 7 1"; empty input gives an empty sequence.
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(const std::vector<int>& v, std::string_view sep = ",");

}  // namespace mfact
