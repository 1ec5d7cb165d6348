#include "toricdeg/monomial_basis.hpp"

#include "toricdeg/error.hpp"

#include <functional>

namespace toricdeg {

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 0) throw DomainError("basis: n and d must be non-negative");
    const std::size_t m = static_cast<std::size_t>(n) + 1;
    Exponent u(m);
    // Assigning the largest feasible exponent to each variable in turn, from
    // the top down, yields exactly the graded-lex (descending) order.
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == m) {
            u[i] = left;
            monomials_.push_back(u);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            u[i] = e;
            rec(i + 1, left - e);
        }
        u[i] = 0;
    };
    rec(0, static_cast<unsigned>(d));
    for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
}

std::optional<std::size_t> MonomialBasis::index_of(const Exponent& u) const {
    auto it = index_.find(u);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

MonomialBasis basis(int n, int d) { return MonomialBasis(n, d); }

std::size_t basis_size(int n, int d) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + d), static_cast<unsigned long>(n));
    return c.get_ui();
}

namespace {

void check_shape(const HomogPoly& f, const MonomialBasis& b) {
    if (f.n() != b.n() || f.d() != b.d())
        throw DimensionMismatch("form of shape (n=" + std::to_string(f.n()) + ", d=" + std::to_string(f.d()) +
                                ") against basis (n=" + std::to_string(b.n()) + ", d=" +
                                std::to_string(b.d()) + ")");
}

} // namespace

RatVector to_vector(const HomogPoly& f, const MonomialBasis& b) {
    check_shape(f, b);
    RatVector v(b.size());
    for (const auto& [u, c] : f.terms()) v[*b.index_of(u)] = c;
    return v;
}

SparseRow to_sparse_row(const HomogPoly& f, const MonomialBasis& b) {
    check_shape(f, b);
    // Terms iterate in basis order, so indices come out increasing.
    SparseRow row;
    row.reserve(f.size());
    for (const auto& [u, c] : f.terms()) row.emplace_back(*b.index_of(u), c);
    return row;
}

HomogPoly from_vector(std::span<const Rat> v, const MonomialBasis& b) {
    if (v.size() != b.size()) throw DimensionMismatch("vector length differs from basis size");
    HomogPoly f(b.n(), b.d());
    for (std::size_t k = 0; k < v.size(); ++k) f.add_term(b[k], v[k]);
    return f;
}

} // namespace toricdeg
