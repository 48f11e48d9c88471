#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pathdepth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (products, subsets, polarized variables, ...) was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Work caps shared by the engines. The defaults are the ones the CLI uses.
struct Limits {
  std::uint64_t max_products = 200'000;     // raw products per multiplication step
  std::size_t max_polarized_vars = 24;
  std::uint64_t max_subsets = 1ull << 24;   // full Hochster sweeps
  std::uint64_t max_path_steps = 10'000'000;
};

}  // namespace pathdepth
