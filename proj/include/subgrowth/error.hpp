#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subgrowth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad syntax, invalid embedding, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was hit (group too large, n too large, ...).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Resource caps gating the expensive paths. Defaults are sized so the whole
/// test suite runs in a few minutes on one core.
struct Caps {
  std::size_t max_group_order = 10000;     // element listing
  std::size_t max_subgroup_order = 5040;   // full subgroup enumeration
  std::size_t max_typesum_n = 8;
  std::size_t max_enumerate_n = 6;
  std::size_t max_enumerate_group_order = 120;
  std::size_t max_vertex_enum_vars = 24;
  unsigned threads = 1;
};

}  // namespace subgrowth
