#pragma once

#include <gmpxx.h>

#include <string>

namespace reldp {

/// Arbitrary-precision integer used for counters.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace reldp
