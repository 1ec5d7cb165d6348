#pragma once

// Hand-rolled generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls into the code paths it is used to
// check.

#include "toricdeg/matrix.hpp"
#include "toricdeg/poly.hpp"
#include "toricdeg/random.hpp"
#include "toricdeg/weight_geometry.hpp"

#include <numeric>
#include <vector>

namespace toricdeg::testing {

inline long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Exponent random_exponent(Rng& rng, std::size_t nvars, unsigned degree) {
    Exponent u(nvars);
    for (unsigned k = 0; k < degree; ++k) u[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(nvars) - 1))] += 1;
    return u;
}

/// Nonzero form with up to `max_terms` terms and coefficients in [-9, 9].
inline HomogPoly random_poly(Rng& rng, int n, int d, int max_terms = 5) {
    HomogPoly f(n, d);
    while (f.is_zero()) {
        const long terms = uniform(rng, 1, max_terms);
        for (long t = 0; t < terms; ++t) {
            long c = uniform(rng, -9, 9);
            if (c == 0) c = 1;
            f.add_term(random_exponent(rng, static_cast<std::size_t>(n) + 1, static_cast<unsigned>(d)), Rat(c));
        }
    }
    return f;
}

inline WeightVector random_weight(Rng& rng, std::size_t nvars, long range = 5) {
    RatVector w(nvars);
    for (auto& x : w) x = Rat(uniform(rng, -range, range), uniform(rng, 1, 3));
    for (auto& x : w) x.canonicalize();
    return WeightVector(std::move(w));
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t m) {
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long range) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -range, range);
    return m;
}

/// Plain Gauss-Jordan over Q; the reference for rank tests.
inline std::size_t naive_rank(QMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rat f = m(i, c) / m(r, c);
            for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
        }
        ++r;
    }
    return r;
}

/// All exponents of total degree d in m variables, by odometer, unordered.
inline std::vector<Exponent> brute_force_monomials(std::size_t m, unsigned d) {
    std::vector<Exponent> out;
    std::vector<unsigned> e(m, 0);
    for (;;) {
        if (std::accumulate(e.begin(), e.end(), 0u) == d) {
            Exponent u(m);
            for (std::size_t i = 0; i < m; ++i) u[i] = e[i];
            out.push_back(u);
        }
        std::size_t i = 0;
        while (i < m && e[i] == d) e[i++] = 0;
        if (i == m) break;
        ++e[i];
    }
    return out;
}

/// Weight maximum recomputed term by term with plain integer/rational loops.
inline HomogPoly brute_force_initial_form(const HomogPoly& f, const WeightVector& w) {
    std::vector<std::pair<Exponent, Rat>> terms(f.terms().begin(), f.terms().end());
    std::vector<Rat> weights;
    for (const auto& [u, c] : terms) {
        Rat s = 0;
        for (std::size_t i = 0; i < u.size(); ++i) s += Rat(static_cast<long>(u[i])) * w[i];
        weights.push_back(s);
    }
    Rat best = weights.front();
    for (const auto& x : weights)
        if (x > best) best = x;
    HomogPoly r(f.n(), f.d());
    for (std::size_t k = 0; k < terms.size(); ++k)
        if (weights[k] == best) r.add_term(terms[k].first, terms[k].second);
    return r;
}

inline RatVector random_functional(Rng& rng, std::size_t dim, long range = 3) {
    RatVector a(dim);
    for (auto& x : a) x = uniform(rng, -range, range);
    return a;
}

/// One to six constraints of random kind; constants are zero when homogeneous.
inline LinearSystem random_system(Rng& rng, std::size_t dim, bool homogeneous) {
    LinearSystem sys(dim);
    const long count = uniform(rng, 1, 6);
    for (long k = 0; k < count; ++k) {
        const Rat b = homogeneous ? Rat(0) : Rat(uniform(rng, -4, 4));
        switch (uniform(rng, 0, 4)) {
        case 0: sys.add_equality(random_functional(rng, dim), b); break;
        case 1:
        case 2: sys.add_weak(random_functional(rng, dim), b); break;
        default: sys.add_strict(random_functional(rng, dim), b); break;
        }
    }
    return sys;
}

} // namespace toricdeg::testing
