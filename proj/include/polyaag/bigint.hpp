#ifndef POLYAAG_BIGINT_HPP
#define POLYAAG_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace polyaag {

// Exact integer and rational types. O-coordinates and unit exponents grow
// exponentially under conjugation by units, so fixed-width integers are not
// an option anywhere normal forms are touched.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt bigint_from_decimal(const std::string& s) { return BigInt(s, 10); }

}  // namespace polyaag

#endif
