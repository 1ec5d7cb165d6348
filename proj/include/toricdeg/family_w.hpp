#pragma once

#include "toricdeg/matrix.hpp"
#include "toricdeg/monomial_basis.hpp"
#include "toricdeg/poly.hpp"
#include "toricdeg/random.hpp"

#include <string>
#include <vector>

namespace toricdeg {

/// The d exponents x0^d, x0^{d-1} x1, ..., x0 x1^{d-1}; x1^d is excluded.
struct IndexSetK {
    int n = 0;
    int d = 0;
    std::vector<Exponent> members;

    bool contains(const Exponent& u) const;
};

/// Throws DomainError unless n >= 2 and d >= 2.
IndexSetK index_set_K(int n, int d);

/// x0^m * x1^{d-m-1} * x_i for 2 <= i <= n, 1 <= m <= d-1.
Exponent u_index(int n, int d, int i, int m);

/// x1^d and x0^{d-1} x2, the two monomials of the existence binomial.
Exponent x1_power(int n, int d);
Exponent x0_power_times_x2(int n, int d);

// A degree-d form whose coefficients vanish on K: the only monomial in x0 and
// x1 alone that it may contain is x1^d.
class WPoint {
public:
    /// Throws DomainError if a K-coefficient is nonzero or n, d < 2.
    explicit WPoint(HomogPoly f);

    int n() const { return f_.n(); }
    int d() const { return f_.d(); }
    const HomogPoly& poly() const { return f_; }
    Rat coeff(const Exponent& u) const { return f_.coeff(u); }

private:
    HomogPoly f_;
};

/// Coefficients outside K drawn uniformly from the nonzero integers in
/// [-bound, bound], in basis order. Throws DomainError if bound < 1.
WPoint sample_W(int n, int d, Rng& rng, long bound);

struct GeneratorOrigin {
    enum class Kind { monomial, product };
    Kind kind = Kind::monomial;
    Exponent u; ///< for monomial generators
    int i = -1; ///< for product generators: d f / d x_i ...
    int j = -1; ///< ... times x_j

    std::string describe() const;
};

struct DifferentialGenerator {
    GeneratorOrigin origin;
    HomogPoly poly;
};

// Spanning set of the image of the differential of (A, c) -> A.f_c at the
// identity: every monomial x^u with u outside K, followed by the (n+1)^2
// products (d f / d x_i) * x_j in row-major (i, j) order.
std::vector<DifferentialGenerator> differential_generators(const WPoint& c);

/// Same list for an arbitrary form; no membership check against W.
std::vector<DifferentialGenerator> differential_generators(const HomogPoly& f);

// The (2n-2) x (d-1) coefficient matrix of (d f / d x_i) * x0 and
// (d f / d x_i) * x1 (i = 2..n) on the columns x0^d, x0^{d-1} x1, ...,
// x0^2 x1^{d-2}. Row 2(i-2) is (c_{u(i,d-1)}, ..., c_{u(i,1)}); row
// 2(i-2)+1 is (0, c_{u(i,d-1)}, ..., c_{u(i,2)}).
QMatrix key_matrix(const WPoint& c);
QMatrix key_matrix(const HomogPoly& f);

/// min(d-1, 2n-2).
std::size_t expected_key_rank(int n, int d);

/// d-1 - min(d-1, 2n-2).
std::size_t expected_codim(int n, int d);

// Rank of the span of differential_generators(c) in the degree-d forms.
// probabilistic: dense elimination modulo a random prime from `rng`; a result
// equal to the ambient dimension is certified as is, anything lower is
// confirmed by the exact rank.
RankReport differential_rank(const WPoint& c, RankMode mode, Rng& rng);
RankReport differential_rank(const WPoint& c);
RankReport differential_rank(const HomogPoly& f);

struct RedundancyReport {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<GeneratorOrigin> failures;
};

// Checks that each product generator with (i, j) = (1, 1), i = 0, or j > 1
// lies in the span of the monomials outside K together with x0 x1^{d-1}.
RedundancyReport redundancy_check(const WPoint& c);
RedundancyReport redundancy_check(const HomogPoly& f);

} // namespace toricdeg
