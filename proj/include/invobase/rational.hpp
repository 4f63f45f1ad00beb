#ifndef INVOBASE_RATIONAL_HPP
#define INVOBASE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace invobase {

/// Exact rational coefficient. GMP keeps values canonical: lowest terms,
/// positive denominator, zero stored as 0/1.
using Rational = mpq_class;

/// Parses "a" or "a/b" with arbitrary-precision integer parts.
/// Throws InputError on malformed text or zero denominator.
Rational rational_from_string(const std::string& text);

/// Renders as "a" or "a/b" (lowest terms).
std::string to_string(const Rational& value);

} // namespace invobase

#endif
