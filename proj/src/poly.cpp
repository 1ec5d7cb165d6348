#include "toricdeg/poly.hpp"

#include "toricdeg/error.hpp"

#include <string>

namespace toricdeg {

Rat weight_of(const Exponent& u, const WeightVector& w) {
    if (u.size() != w.size())
        throw DimensionMismatch("weight_of: exponent has length " + std::to_string(u.size()) +
                                ", weight vector " + std::to_string(w.size()));
    Rat s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) s += w[i] * u[i];
    return s;
}

HomogPoly::HomogPoly(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 0) throw DomainError("HomogPoly: n and d must be non-negative");
}

HomogPoly::HomogPoly(int n, int d, Terms terms) : HomogPoly(n, d) {
    for (auto& [u, c] : terms) {
        check_exponent(u);
        if (c != 0) terms_.emplace(u, c);
    }
}

HomogPoly HomogPoly::monomial(int n, const Exponent& u, const Rat& coeff) {
    HomogPoly p(n, static_cast<int>(u.degree()));
    p.add_term(u, coeff);
    return p;
}

void HomogPoly::check_exponent(const Exponent& u) const {
    if (u.size() != nvars())
        throw DimensionMismatch("exponent length " + std::to_string(u.size()) + " in a form with " +
                                std::to_string(nvars()) + " variables");
    if (u.degree() != static_cast<unsigned>(d_))
        throw DegreeError("monomial of degree " + std::to_string(u.degree()) + " in a form of degree " +
                          std::to_string(d_));
}

Rat HomogPoly::coeff(const Exponent& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? Rat(0) : it->second;
}

void HomogPoly::add_term(const Exponent& u, const Rat& c) {
    if (c == 0) return;
    check_exponent(u);
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HomogPoly HomogPoly::operator-() const {
    HomogPoly r = *this;
    for (auto& [u, c] : r.terms_) c = -c;
    return r;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
    if (o.n_ != n_ || o.d_ != d_) throw DimensionMismatch("adding forms of different shape");
    for (const auto& [u, c] : o.terms_) add_term(u, c);
    return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) {
    if (o.n_ != n_ || o.d_ != d_) throw DimensionMismatch("subtracting forms of different shape");
    for (const auto& [u, c] : o.terms_) add_term(u, -c);
    return *this;
}

HomogPoly& HomogPoly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [u, c] : terms_) c *= s;
    return *this;
}

HomogPoly multiply(const HomogPoly& f, const HomogPoly& g) {
    if (f.n() != g.n()) throw DimensionMismatch("multiply: forms in different numbers of variables");
    HomogPoly r(f.n(), f.d() + g.d());
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms()) r.add_term(u + v, a * b);
    return r;
}

HomogPoly power(const HomogPoly& f, unsigned k) {
    HomogPoly r = HomogPoly::monomial(f.n(), Exponent(f.nvars()));
    for (unsigned i = 0; i < k; ++i) r = multiply(r, f);
    return r;
}

Rat max_weight(const HomogPoly& f, const WeightVector& w) {
    if (f.is_zero()) throw ZeroPolynomial("weight of the zero polynomial is undefined");
    auto it = f.terms().begin();
    Rat best = weight_of(it->first, w);
    for (++it; it != f.terms().end(); ++it) {
        Rat x = weight_of(it->first, w);
        if (x > best) best = x;
    }
    return best;
}

HomogPoly initial_form(const HomogPoly& f, const WeightVector& w) {
    const Rat lambda = max_weight(f, w);
    HomogPoly r(f.n(), f.d());
    for (const auto& [u, c] : f.terms())
        if (weight_of(u, w) == lambda) r.add_term(u, c);
    return r;
}

HomogPoly partial_derivative(const HomogPoly& f, int i) {
    if (i < 0 || i > f.n())
        throw IndexError("partial_derivative: variable index " + std::to_string(i) + " outside 0.." +
                         std::to_string(f.n()));
    if (f.d() == 0) throw DomainError("partial_derivative of a constant form");
    HomogPoly r(f.n(), f.d() - 1);
    const auto k = static_cast<std::size_t>(i);
    for (const auto& [u, c] : f.terms()) {
        if (u[k] == 0) continue;
        Exponent v = u;
        v[k] -= 1;
        r.add_term(v, c * u[k]);
    }
    return r;
}

HomogPoly apply_linear_change(const HomogPoly& f, const QMatrix& a) {
    const std::size_t m = f.nvars();
    if (a.rows() != m || a.cols() != m)
        throw SingularMatrix("apply_linear_change: matrix must be " + std::to_string(m) + "x" +
                             std::to_string(m));
    if (rank(a) != m) throw SingularMatrix("apply_linear_change: matrix is not invertible");

    // images[i][k] = (sum_j A(i,j) x_j)^k
    std::vector<std::vector<HomogPoly>> images(m);
    for (std::size_t i = 0; i < m; ++i) {
        HomogPoly lin(f.n(), 1);
        for (std::size_t j = 0; j < m; ++j) {
            Exponent e(m);
            e[j] = 1;
            lin.add_term(e, a(i, j));
        }
        images[i].push_back(HomogPoly::monomial(f.n(), Exponent(m)));
        for (int k = 1; k <= f.d(); ++k) images[i].push_back(multiply(images[i].back(), lin));
    }

    HomogPoly r(f.n(), f.d());
    for (const auto& [u, c] : f.terms()) {
        HomogPoly t = HomogPoly::monomial(f.n(), Exponent(m), c);
        for (std::size_t i = 0; i < m; ++i)
            if (u[i] != 0) t = multiply(t, images[i][u[i]]);
        r += t;
    }
    return r;
}

Exponent permute(const Exponent& u, std::span<const std::size_t> perm) {
    if (perm.size() != u.size()) throw DimensionMismatch("permutation length mismatch");
    Exponent r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[perm[i]] = u[i];
    return r;
}

WeightVector permute(const WeightVector& w, std::span<const std::size_t> perm) {
    if (perm.size() != w.size()) throw DimensionMismatch("permutation length mismatch");
    RatVector r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[perm[i]] = w[i];
    return WeightVector(std::move(r));
}

HomogPoly permute(const HomogPoly& f, std::span<const std::size_t> perm) {
    HomogPoly r(f.n(), f.d());
    for (const auto& [u, c] : f.terms()) r.add_term(permute(u, perm), c);
    return r;
}

} // namespace toricdeg
