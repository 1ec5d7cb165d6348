#pragma once

// Independent oracles: each recomputes a claim from first principles with
// plain loops over the library's data types.

#include "toricdeg/family_w.hpp"
#include "toricdeg/weight_geometry.hpp"

#include <numeric>
#include <vector>

namespace toricdeg::testing {

inline Exponent exponent_x0_x1(std::size_t nvars, int a, int b) {
    Exponent u(nvars);
    u[0] = static_cast<unsigned>(a);
    u[1] = static_cast<unsigned>(b);
    return u;
}

// Disjoint supports and joint exponent gcd 1, recomputed with plain loops.
inline bool prime_binomial(const Exponent& u, const Exponent& v) {
    unsigned g = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != 0 && v[i] != 0) return false;
        g = std::gcd(g, u[i]);
        g = std::gcd(g, v[i]);
    }
    return g == 1;
}

// Re-expansion of an infeasibility certificate.
inline bool certificate_holds(const LinearSystem& sys, const InfeasibilityCertificate& cert) {
    if (cert.equality_multipliers.size() != sys.equalities().size() ||
        cert.weak_multipliers.size() != sys.weak_ineqs().size() ||
        cert.strict_multipliers.size() != sys.strict_ineqs().size())
        return false;
    RatVector sum(sys.dim());
    Rat bound = 0;
    bool strict_used = false;
    auto add = [&](const std::vector<Constraint>& cs, const RatVector& ls, bool signed_ok, bool strict) {
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (!signed_ok && ls[k] < 0) return false;
            if (strict && ls[k] > 0) strict_used = true;
            for (std::size_t i = 0; i < sys.dim(); ++i) sum[i] += ls[k] * cs[k].functional[i];
            bound += ls[k] * cs[k].constant;
        }
        return true;
    };
    if (!add(sys.equalities(), cert.equality_multipliers, true, false)) return false;
    if (!add(sys.weak_ineqs(), cert.weak_multipliers, false, false)) return false;
    if (!add(sys.strict_ineqs(), cert.strict_multipliers, false, true)) return false;
    for (const auto& x : sum)
        if (x != 0) return false;
    return bound > 0 || (strict_used && bound >= 0);
}

inline bool satisfies(const LinearSystem& sys, const WeightVector& w) {
    auto dot = [&](const RatVector& a) {
        Rat s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * w[i];
        return s;
    };
    for (const auto& c : sys.equalities())
        if (dot(c.functional) != c.constant) return false;
    for (const auto& c : sys.weak_ineqs())
        if (dot(c.functional) < c.constant) return false;
    for (const auto& c : sys.strict_ineqs())
        if (dot(c.functional) <= c.constant) return false;
    return true;
}

// Key matrix rebuilt from the product generators (i,0), (i,1) by reading
// their coefficients on x0^{d-col} x1^col.
inline QMatrix key_matrix_from_generators(const HomogPoly& f) {
    const int n = f.n(), d = f.d();
    QMatrix k(static_cast<std::size_t>(2 * n - 2), static_cast<std::size_t>(d - 1));
    for (int i = 2; i <= n; ++i)
        for (int j = 0; j <= 1; ++j) {
            Exponent e(f.nvars());
            e[static_cast<std::size_t>(j)] = 1;
            const auto gen = partial_derivative(f, i) * HomogPoly::monomial(n, e);
            for (int col = 0; col < d - 1; ++col)
                k(static_cast<std::size_t>(2 * (i - 2) + j), static_cast<std::size_t>(col)) =
                    gen.coeff(exponent_x0_x1(f.nvars(), d - col, col));
        }
    return k;
}

// Nonnegativity of <functional, w> on the cone w_0 >= ... >= w_{m-1},
// <u - v, w> = 0, decided from its generators instead of by elimination. The
// chain is spanned by the rays (1,..,1,0,..,0) and the line through (1,..,1);
// cutting with the hyperplane keeps the rays on it and the positive
// combinations of one ray from each side.
inline bool nonnegative_on_chain_cone(const Exponent& u, const Exponent& v, const std::vector<Rat>& functional) {
    const std::size_t m = u.size();
    auto ray = [&](std::size_t k) {
        std::vector<Rat> r(m);
        for (std::size_t i = 0; i < k; ++i) r[i] = 1;
        return r;
    };
    auto dot = [&](const std::vector<Rat>& a, const std::vector<Rat>& r) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) s += a[i] * r[i];
        return s;
    };
    std::vector<Rat> h(m);
    for (std::size_t i = 0; i < m; ++i) h[i] = Rat(static_cast<long>(u[i])) - static_cast<long>(v[i]);

    if (dot(functional, ray(m)) != 0) return false; // lineality
    std::vector<std::vector<Rat>> pos, neg;
    for (std::size_t k = 1; k < m; ++k) {
        auto r = ray(k);
        const Rat hr = dot(h, r);
        if (hr == 0 && dot(functional, r) < 0) return false;
        if (hr > 0) pos.push_back(r);
        if (hr < 0) neg.push_back(r);
    }
    for (const auto& a : pos)
        for (const auto& b : neg) {
            const Rat ha = dot(h, a), hb = dot(h, b);
            if (-hb * dot(functional, a) + ha * dot(functional, b) < 0) return false;
        }
    return true;
}

inline RatVector difference(const Exponent& a, const Exponent& b) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(static_cast<long>(a[i])) - static_cast<long>(b[i]);
    return r;
}

// Strata claim for a normalized pattern, rechecked on the cone generators.
inline bool strata_reduced(int n, int d, const BinomialPattern& g) {
    const auto top = x1_power(n, d);
    for (const auto& k : index_set_K(n, d).members) {
        if (k == g.u || k == g.v) return false;
        if (!nonnegative_on_chain_cone(g.u, g.v, difference(k, top))) return false;
    }
    return nonnegative_on_chain_cone(g.u, g.v, difference(top, g.v));
}

} // namespace toricdeg::testing
