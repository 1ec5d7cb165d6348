#include "toricdeg/family_w.hpp"

#include "toricdeg/error.hpp"
#include "toricdeg/poly_text.hpp"

#include <algorithm>

namespace toricdeg {

namespace {

void require_shape(int n, int d) {
    if (n < 2 || d < 2)
        throw DomainError("family W needs n >= 2 and d >= 2 (got n=" + std::to_string(n) +
                          ", d=" + std::to_string(d) + ")");
}

Exponent k_member(int n, int d, int x1_exp) {
    Exponent u(static_cast<std::size_t>(n) + 1);
    u[0] = static_cast<unsigned>(d - x1_exp);
    u[1] = static_cast<unsigned>(x1_exp);
    return u;
}

/// (d f / d x_i) * x_j without going through a general product.
HomogPoly derivative_times_variable(const HomogPoly& f, int i, int j) {
    HomogPoly r(f.n(), f.d());
    const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
    for (const auto& [u, c] : f.terms()) {
        if (u[ii] == 0) continue;
        Exponent v = u;
        v[ii] -= 1;
        v[jj] += 1;
        r.add_term(v, c * u[ii]);
    }
    return r;
}

std::vector<SparseRow> generator_rows(const std::vector<DifferentialGenerator>& gens, const MonomialBasis& b) {
    std::vector<SparseRow> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(to_sparse_row(g.poly, b));
    return rows;
}

} // namespace

bool IndexSetK::contains(const Exponent& u) const {
    return std::find(members.begin(), members.end(), u) != members.end();
}

IndexSetK index_set_K(int n, int d) {
    require_shape(n, d);
    IndexSetK k{n, d, {}};
    for (int a = 0; a < d; ++a) k.members.push_back(k_member(n, d, a));
    return k;
}

Exponent u_index(int n, int d, int i, int m) {
    require_shape(n, d);
    if (i < 2 || i > n || m < 1 || m > d - 1)
        throw DomainError("u(i, m) needs 2 <= i <= n and 1 <= m <= d-1");
    Exponent u(static_cast<std::size_t>(n) + 1);
    u[static_cast<std::size_t>(i)] = 1;
    u[0] = static_cast<unsigned>(m);
    u[1] = static_cast<unsigned>(d - m - 1);
    return u;
}

Exponent x1_power(int n, int d) { return k_member(n, d, d); }

Exponent x0_power_times_x2(int n, int d) {
    require_shape(n, d);
    Exponent u(static_cast<std::size_t>(n) + 1);
    u[0] = static_cast<unsigned>(d - 1);
    u[2] = 1;
    return u;
}

WPoint::WPoint(HomogPoly f) : f_(std::move(f)) {
    const auto k = index_set_K(f_.n(), f_.d());
    for (const auto& u : k.members)
        if (f_.contains(u))
            throw DomainError("not a point of W: coefficient of " + format_monomial(u) + " is nonzero");
}

WPoint sample_W(int n, int d, Rng& rng, long bound) {
    require_shape(n, d);
    if (bound < 1) throw DomainError("sample_W: bound must be positive");
    const auto k = index_set_K(n, d);
    const MonomialBasis b(n, d);
    std::uniform_int_distribution<long> dist(1, 2 * bound);
    HomogPoly f(n, d);
    for (const auto& u : b.monomials()) {
        if (k.contains(u)) continue;
        const long x = dist(rng);
        f.add_term(u, Rat(x <= bound ? -x : x - bound));
    }
    return WPoint(std::move(f));
}

std::string GeneratorOrigin::describe() const {
    if (kind == Kind::monomial) return "x^u, u = " + format_monomial(u);
    return "df/dx" + std::to_string(i) + " * x" + std::to_string(j);
}

std::vector<DifferentialGenerator> differential_generators(const HomogPoly& f) {
    require_shape(f.n(), f.d());
    const auto k = index_set_K(f.n(), f.d());
    const MonomialBasis b(f.n(), f.d());
    std::vector<DifferentialGenerator> gens;
    gens.reserve(b.size() + f.nvars() * f.nvars());
    for (const auto& u : b.monomials()) {
        if (k.contains(u)) continue;
        GeneratorOrigin o;
        o.kind = GeneratorOrigin::Kind::monomial;
        o.u = u;
        gens.push_back({std::move(o), HomogPoly::monomial(f.n(), u)});
    }
    for (int i = 0; i <= f.n(); ++i)
        for (int j = 0; j <= f.n(); ++j) {
            GeneratorOrigin o;
            o.kind = GeneratorOrigin::Kind::product;
            o.i = i;
            o.j = j;
            gens.push_back({std::move(o), derivative_times_variable(f, i, j)});
        }
    return gens;
}

std::vector<DifferentialGenerator> differential_generators(const WPoint& c) {
    return differential_generators(c.poly());
}

QMatrix key_matrix(const HomogPoly& f) {
    const int n = f.n(), d = f.d();
    require_shape(n, d);
    QMatrix m(static_cast<std::size_t>(2 * n - 2), static_cast<std::size_t>(d - 1));
    for (int i = 2; i <= n; ++i) {
        const auto r0 = static_cast<std::size_t>(2 * (i - 2));
        for (int col = 0; col <= d - 2; ++col) {
            const auto cc = static_cast<std::size_t>(col);
            m(r0, cc) = f.coeff(u_index(n, d, i, d - 1 - col));
            if (col >= 1) m(r0 + 1, cc) = f.coeff(u_index(n, d, i, d - col));
        }
    }
    return m;
}

QMatrix key_matrix(const WPoint& c) { return key_matrix(c.poly()); }

std::size_t expected_key_rank(int n, int d) {
    require_shape(n, d);
    return static_cast<std::size_t>(std::min(d - 1, 2 * n - 2));
}

std::size_t expected_codim(int n, int d) {
    return static_cast<std::size_t>(d - 1) - expected_key_rank(n, d);
}

RankReport differential_rank(const HomogPoly& f) {
    const MonomialBasis b(f.n(), f.d());
    const auto rows = generator_rows(differential_generators(f), b);
    return RankReport::make(rank_exact(rows, b.size()), b.size(), RankMethod::exact);
}

RankReport differential_rank(const WPoint& c) { return differential_rank(c.poly()); }

RankReport differential_rank(const WPoint& c, RankMode mode, Rng& rng) {
    if (mode == RankMode::exact) return differential_rank(c);
    const MonomialBasis b(c.n(), c.d());
    const auto rows = generator_rows(differential_generators(c), b);
    std::optional<std::size_t> modular;
    while (!(modular = rank_modular(rows, b.size(), random_prime(rng)))) {
    }
    if (*modular == b.size()) return RankReport::make(*modular, b.size(), RankMethod::modular_exact_confirmed);
    const std::size_t exact = rank_exact(rows, b.size());
    if (*modular > exact) throw CertificateFailure("modular rank exceeds exact rank");
    return RankReport::make(exact, b.size(), RankMethod::modular_exact_confirmed);
}

RedundancyReport redundancy_check(const HomogPoly& f) {
    const int n = f.n(), d = f.d();
    const MonomialBasis b(n, d);
    const auto gens = differential_generators(f);

    std::vector<SparseRow> span;
    for (const auto& g : gens)
        if (g.origin.kind == GeneratorOrigin::Kind::monomial) span.push_back(to_sparse_row(g.poly, b));
    span.push_back(to_sparse_row(HomogPoly::monomial(n, k_member(n, d, d - 1)), b));

    RedundancyReport report;
    for (const auto& g : gens) {
        if (g.origin.kind != GeneratorOrigin::Kind::product) continue;
        const int i = g.origin.i, j = g.origin.j;
        if (!((i == 1 && j == 1) || i == 0 || j > 1)) continue;
        ++report.checked;
        if (!span_contains(to_sparse_row(g.poly, b), span, b.size())) {
            report.ok = false;
            report.failures.push_back(g.origin);
        }
    }
    return report;
}

RedundancyReport redundancy_check(const WPoint& c) { return redundancy_check(c.poly()); }

} // namespace toricdeg
