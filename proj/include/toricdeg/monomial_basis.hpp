#pragma once

#include "toricdeg/matrix.hpp"
#include "toricdeg/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace toricdeg {

/// All degree-d exponents in n+1 variables, graded-lex sorted, with a
/// reverse index. Its size is C(n+d, n).
class MonomialBasis {
public:
    MonomialBasis(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<Exponent>& monomials() const { return monomials_; }
    const Exponent& operator[](std::size_t i) const { return monomials_[i]; }

    std::optional<std::size_t> index_of(const Exponent& u) const;

private:
    int n_;
    int d_;
    std::vector<Exponent> monomials_;
    std::map<Exponent, std::size_t, GrlexBefore> index_;
};

MonomialBasis basis(int n, int d);

/// C(n+d, n) without enumeration.
std::size_t basis_size(int n, int d);

/// Coefficient vector of f in basis order. Throws DimensionMismatch.
RatVector to_vector(const HomogPoly& f, const MonomialBasis& b);
SparseRow to_sparse_row(const HomogPoly& f, const MonomialBasis& b);
HomogPoly from_vector(std::span<const Rat> v, const MonomialBasis& b);

} // namespace toricdeg
