#pragma once

#include <gmpxx.h>

#include <string>

namespace onelight {

// Exact charge. Always kept canonical (reduced, positive denominator).
using Charge = mpq_class;

Charge ratio(long num, long den);

// "num/den", denominator always printed ("-8/1").
std::string format_charge(const Charge& c);

// Inverse of format_charge; also accepts a bare integer. Throws
// std::invalid_argument on malformed text.
Charge parse_charge(const std::string& text);

}  // namespace onelight
