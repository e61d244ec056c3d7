#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace kring {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Base class for all library failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unsupported series/rank/pair selector.
struct UnsupportedError : Error {
    using Error::Error;
};

// A mathematical postcondition failed; indicates a bug or inconsistent input.
struct InvariantError : Error {
    using Error::Error;
};

// Requested computation exceeds a configured size bound.
struct CapacityError : Error {
    using Error::Error;
};

// Malformed user-supplied input (matrix files, selectors).
struct InputError : Error {
    using Error::Error;
};

Int binomial(int n, int k);
Int factorial(int n);

// Quotient a/b asserting that b divides a exactly.
Int exact_div(const Int& a, const Int& b);

// Floor division, denominator must be positive.
Int floor_div(const Int& a, const Int& b);

}  // namespace kring
