#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace prefab {

using BigInt = boost::multiprecision::cpp_int;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: bad spec selector, negative n, k < 1, ...
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Read past the truncation order of a coefficient series.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration refused because n is above the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Selects between the OpenMP kernels and their serial reference.
enum class ExecPolicy : std::uint8_t { serial, parallel };

inline constexpr int default_oracle_cap = 20;

} // namespace prefab
