#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace clab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user-visible input: wrong field size, malformed matrix text, excluded q.
struct InvalidArgument : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  CapExceeded(const std::string& what, std::uint64_t cap, std::uint64_t needed = 0)
      : Error(what), cap(cap), needed(needed) {}
  std::uint64_t cap;
  std::uint64_t needed;  // 0 when unknown
};

// Internal consistency failure. Never caught by library code.
struct InvariantViolation : Error {
  using Error::Error;
};

// No constructive reduction case applied to a semisimple element.
struct CoverageGap : Error {
  using Error::Error;
};

}  // namespace clab
