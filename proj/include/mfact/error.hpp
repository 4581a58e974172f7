#pragma once

#include <stdexcept>
#include <string>

namespace mfact {

enum class Errc {
  size_mismatch,
  out_of_range,
  not_a_member,
  precondition,
  resource_cap,
  malformed,
};

/// Domain error raised by every library operation. The CLI maps it to exit status 1.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace mfact
