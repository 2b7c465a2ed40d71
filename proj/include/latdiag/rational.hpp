#pragma once

#include <gmpxx.h>
#include <string>

namespace latdiag {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator, which is the invariant everything downstream
// relies on (zero-tolerance comparisons, byte-stable serialization).
using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(unsigned long n);

// Parses "num", "-num" or "num/den". Throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& s);

// "num" when den == 1, otherwise "num/den".
std::string rational_to_string(const Rational& q);

}  // namespace latdiag
