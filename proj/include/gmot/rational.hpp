#pragma once

#include <gmpxx.h>

#include <string>

namespace gmot {

// Parses "p", "-p", or "p/q" into a canonical exact rational.
// Throws std::invalid_argument on malformed input or zero denominator.
mpq_class rational_from_string(const std::string& s);

// Renders as "p" or "p/q" with gcd(p,q)=1 and q>0.
std::string rational_to_string(const mpq_class& r);

// r^e for e >= 0 (r^0 = 1).
mpq_class rational_pow(const mpq_class& r, long e);

}  // namespace gmot
