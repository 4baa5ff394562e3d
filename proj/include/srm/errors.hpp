#pragma once

#include <stdexcept>
#include <string>

namespace srm {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// field construction
struct NonPrime : Error { using Error::Error; };
struct OddExtension : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct NonPrimitiveModulus : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// exponent combinatorics
struct OutOfRange : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct InvalidI : Error { using Error::Error; };

// codes
struct LengthMismatch : Error { using Error::Error; };
struct ZeroScale : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };

// analysis
struct ZeroCodeword : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct BadShape : Error { using Error::Error; };
struct TooMany : Error { using Error::Error; };
struct IneligibleCode : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

}  // namespace srm
