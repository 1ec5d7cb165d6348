#include "toricdeg/binomial.hpp"

#include "toricdeg/error.hpp"
#include "toricdeg/monomial_basis.hpp"

#include <numeric>

namespace toricdeg {

BinomialPattern::BinomialPattern(Exponent u_, Exponent v_, Rat a_, Rat b_)
    : u(std::move(u_)), v(std::move(v_)), a(std::move(a_)), b(std::move(b_)) {
    if (u.size() != v.size()) throw DomainError("binomial: exponent lengths differ");
    if (u == v) throw DomainError("binomial: the two monomials coincide");
    if (u.degree() != v.degree()) throw DomainError("binomial: monomials of different degree");
    if (a == 0 || b == 0) throw DomainError("binomial: zero coefficient");
}

BinomialPattern BinomialPattern::from_poly(const HomogPoly& f) {
    if (f.size() != 2)
        throw SupportMismatch("expected a two-term polynomial, got " + std::to_string(f.size()) + " terms");
    auto it = f.terms().begin();
    const auto& [u, a] = *it++;
    const auto& [v, b] = *it;
    return BinomialPattern(u, v, a, b);
}

HomogPoly BinomialPattern::to_poly() const {
    HomogPoly f(static_cast<int>(nvars()) - 1, degree());
    f.add_term(u, a);
    f.add_term(v, b);
    return f;
}

std::string_view to_string(PrimeTag tag) {
    switch (tag) {
    case PrimeTag::prime: return "Prime";
    case PrimeTag::not_two_terms: return "NotTwoTerms";
    case PrimeTag::shared_variable: return "SharedVariable";
    case PrimeTag::proper_power: return "ProperPower";
    }
    return "?";
}

PrimeVerdict classify(const BinomialPattern& g) {
    if (!disjoint_support(g.u, g.v)) return {PrimeTag::shared_variable, 0};
    unsigned k = 0;
    for (auto e : g.u) k = std::gcd(k, e);
    for (auto e : g.v) k = std::gcd(k, e);
    if (k >= 2) return {PrimeTag::proper_power, k};
    return {PrimeTag::prime, 0};
}

PrimeVerdict classify(const HomogPoly& f) {
    if (f.size() != 2) return {PrimeTag::not_two_terms, 0};
    return classify(BinomialPattern::from_poly(f));
}

std::vector<BinomialPattern> enumerate_patterns(int n, int d) {
    if (n < 1 || d < 1) throw DomainError("enumerate_patterns requires n >= 1 and d >= 1");
    const MonomialBasis b(n, d);
    std::vector<BinomialPattern> out;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (!disjoint_support(b[i], b[j])) continue;
            BinomialPattern g(b[i], b[j], Rat(1), Rat(-1));
            if (classify(g).is_prime()) out.push_back(std::move(g));
        }
    return out;
}

} // namespace toricdeg
