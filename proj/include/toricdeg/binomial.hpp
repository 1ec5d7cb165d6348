#pragma once

#include "toricdeg/poly.hpp"

#include <string_view>
#include <vector>

namespace toricdeg {

/// a*x^u + b*x^v with u != v of equal degree and a, b nonzero.
struct BinomialPattern {
    Exponent u;
    Exponent v;
    Rat a{1};
    Rat b{1};

    /// Throws DomainError when the invariants fail.
    BinomialPattern(Exponent u, Exponent v, Rat a = Rat(1), Rat b = Rat(1));

    /// The two-term form; throws SupportMismatch unless f has exactly two terms.
    static BinomialPattern from_poly(const HomogPoly& f);

    int degree() const { return static_cast<int>(u.degree()); }
    std::size_t nvars() const { return u.size(); }
    HomogPoly to_poly() const;
};

enum class PrimeTag { prime, not_two_terms, shared_variable, proper_power };

struct PrimeVerdict {
    PrimeTag tag = PrimeTag::not_two_terms;
    unsigned power = 0; ///< joint exponent gcd, set for proper_power

    bool is_prime() const { return tag == PrimeTag::prime; }
    friend bool operator==(const PrimeVerdict&, const PrimeVerdict&) = default;
};

std::string_view to_string(PrimeTag tag);

// Over an algebraically closed field of characteristic zero, a*x^u + b*x^v
// generates a prime ideal iff the supports of u and v are disjoint and the gcd
// of all entries of u and v is 1. A shared variable splits off a monomial
// factor; a joint gcd k >= 2 makes it a polynomial in k-th powers, which
// factors over the k-th roots of unity.
PrimeVerdict classify(const BinomialPattern& g);

/// NotTwoTerms unless f has exactly two terms, otherwise as above.
PrimeVerdict classify(const HomogPoly& f);

/// Every unordered pair {u, v} of distinct degree-d exponents in n+1
/// variables that forms a prime binomial, with u before v in graded-lex
/// order and coefficients (1, -1).
std::vector<BinomialPattern> enumerate_patterns(int n, int d);

} // namespace toricdeg
