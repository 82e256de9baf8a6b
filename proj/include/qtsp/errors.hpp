#pragma once

#include <stdexcept>
#include <string>

namespace qtsp {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An insertion code violating 1 <= a_i <= i.
struct InvalidCodeError : Error {
    using Error::Error;
};

// A sequence that is not a rearrangement of 1..n.
struct InvalidPermutationError : Error {
    using Error::Error;
};

// Argument outside its documented range (position, rank, interval).
struct RangeError : Error {
    using Error::Error;
};

// n exceeds the enumeration limit (or another hard size cap).
struct SizeLimitError : Error {
    using Error::Error;
};

// Mismatched sizes between cooperating objects (state vs instance, tables).
struct DimensionError : Error {
    using Error::Error;
};

// Instance with zero spatial extent; cannot be normalized.
struct DegenerateInstanceError : Error {
    using Error::Error;
};

// Zero-variance sample set; no Gaussian fit exists.
struct DegenerateFitError : Error {
    using Error::Error;
};

// Wave state at the wrong depth for the requested operation.
struct DepthError : Error {
    using Error::Error;
};

// Caller broke a usage contract (e.g. even trial count for a majority vote).
struct UsageError : Error {
    using Error::Error;
};

// Malformed input file. `where` carries line/column context when known.
struct ParseError : Error {
    using Error::Error;
};

// Input file in a declared-out-of-scope format.
struct UnsupportedFormatError : Error {
    using Error::Error;
};

// The sampled-oracle scan found no admissible range.
struct SearchFailureError : Error {
    using Error::Error;
};

}  // namespace qtsp
