#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toricdeg {

// Exact rational. mpq_class keeps values canonical (den > 0, reduced) after
// every arithmetic operation; construct through make_rat when supplying a raw
// numerator/denominator pair.
using Rat = mpq_class;
using Int = mpz_class;
using RatVector = std::vector<Rat>;

Rat make_rat(const Int& num, const Int& den);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

/// Parses "p" or "p/q" (optional leading sign). Throws SyntaxError.
Rat parse_rat(std::string_view text);

Int lcm_of_denominators(std::span<const Rat> values);

} // namespace toricdeg
