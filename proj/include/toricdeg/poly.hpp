#pragma once

#include "toricdeg/exponent.hpp"
#include "toricdeg/matrix.hpp"
#include "toricdeg/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace toricdeg {

/// Weight vector omega in Q^{n+1}.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(RatVector entries) : entries_(std::move(entries)) {}
    WeightVector(std::initializer_list<Rat> entries) : entries_(entries) {}

    static WeightVector zero(std::size_t length) { return WeightVector(RatVector(length)); }

    std::size_t size() const { return entries_.size(); }
    const Rat& operator[](std::size_t i) const { return entries_[i]; }
    const RatVector& entries() const { return entries_; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    RatVector entries_;
};

/// <u, omega>. Throws DimensionMismatch on length disagreement.
Rat weight_of(const Exponent& u, const WeightVector& w);

// Homogeneous polynomial in x_0..x_n of fixed degree d with exact rational
// coefficients. Stored sparsely; zero coefficients are never kept and terms
// iterate in graded-lexicographic order. The empty polynomial is the zero
// polynomial of the given (n, d).
class HomogPoly {
public:
    using Terms = std::map<Exponent, Rat, GrlexBefore>;

    HomogPoly(int n, int d);
    HomogPoly(int n, int d, Terms terms);

    static HomogPoly monomial(int n, const Exponent& u, const Rat& coeff = Rat(1));

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t nvars() const { return static_cast<std::size_t>(n_) + 1; }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of x^u (zero when absent).
    Rat coeff(const Exponent& u) const;
    bool contains(const Exponent& u) const { return terms_.count(u) != 0; }

    /// Adds c*x^u, collecting with any existing term.
    void add_term(const Exponent& u, const Rat& c);

    HomogPoly operator-() const;
    HomogPoly& operator+=(const HomogPoly& o);
    HomogPoly& operator-=(const HomogPoly& o);
    HomogPoly& operator*=(const Rat& s);

    friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
    friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
    friend HomogPoly operator*(HomogPoly a, const Rat& s) { return a *= s; }
    friend HomogPoly operator*(const Rat& s, HomogPoly a) { return a *= s; }

    friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

private:
    void check_exponent(const Exponent& u) const;

    int n_;
    int d_;
    Terms terms_;
};

/// Product; degrees add. Throws DimensionMismatch if n differs.
HomogPoly multiply(const HomogPoly& f, const HomogPoly& g);
inline HomogPoly operator*(const HomogPoly& f, const HomogPoly& g) { return multiply(f, g); }

HomogPoly power(const HomogPoly& f, unsigned k);

/// Largest weight over the support of f. Throws ZeroPolynomial.
Rat max_weight(const HomogPoly& f, const WeightVector& w);

/// Sum of the terms of f whose weight attains the maximum. Throws
/// ZeroPolynomial for f = 0.
HomogPoly initial_form(const HomogPoly& f, const WeightVector& w);

/// d f / d x_i, a form of degree d-1 (possibly zero).
HomogPoly partial_derivative(const HomogPoly& f, int i);

// The substitution x_i <- sum_j A(i,j) x_j, expanded exactly. With this
// convention A.(B.f) = (B*A).f. Throws SingularMatrix unless A is an
// invertible (n+1)x(n+1) matrix.
HomogPoly apply_linear_change(const HomogPoly& f, const QMatrix& a);

// Coordinate permutation: the variable x_i is renamed x_{perm[i]}.
HomogPoly permute(const HomogPoly& f, std::span<const std::size_t> perm);
Exponent permute(const Exponent& u, std::span<const std::size_t> perm);
WeightVector permute(const WeightVector& w, std::span<const std::size_t> perm);

} // namespace toricdeg
