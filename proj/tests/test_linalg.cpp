#include "support/generators.hpp"

#include "toricdeg/error.hpp"
#include "toricdeg/family_w.hpp"
#include "toricdeg/monomial_basis.hpp"
#include "toricdeg/poly_text.hpp"

#include <doctest.h>

using namespace toricdeg;
using toricdeg::testing::naive_rank;
using toricdeg::testing::random_matrix;
using toricdeg::testing::uniform;

namespace {

std::vector<SparseRow> sparse_rows(const QMatrix& m) {
    std::vector<SparseRow> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_sparse(m.row(r)));
    return rows;
}

std::vector<RatVector> dense_rows(const QMatrix& m) {
    std::vector<RatVector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
    return rows;
}

// Sparse-ish random matrix with a prescribed rank: a product of two random
// factors through an inner dimension, with some columns zeroed.
QMatrix low_rank_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
    auto a = random_matrix(rng, rows, inner, 4);
    auto b = random_matrix(rng, inner, cols, 4);
    for (std::size_t r = 0; r < inner; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (uniform(rng, 0, 2) == 0) b(r, c) = 0;
    return a * b;
}

} // namespace

TEST_CASE("rational text") {
    CHECK(to_string(make_rat(6, 4)) == "3/2");
    CHECK(to_string(make_rat(-4, 2)) == "-2");
    CHECK(parse_rat("-10/4") == Rat(-5, 2));
    CHECK(parse_rat("+7") == 7);
    CHECK_THROWS_AS(parse_rat("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_rat("x"), SyntaxError);
    CHECK_THROWS_AS(parse_rat(""), SyntaxError);
    CHECK(make_rat(6, -4) == Rat(-3, 2));
    const RatVector v{Rat(1, 4), Rat(5, 6), 3};
    CHECK(lcm_of_denominators(v) == 12);
}

TEST_CASE("basis enumeration") {
    const auto b = basis(1, 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == Exponent{2, 0});
    CHECK(b[1] == Exponent{1, 1});
    CHECK(b[2] == Exponent{0, 2});
    CHECK(basis(2, 3).size() == 10);
    CHECK(basis(4, 7).size() == 330);
    CHECK(basis_size(4, 7) == 330);
    CHECK(basis_size(5, 12) == 6188);
}

TEST_CASE("basis agrees with brute-force enumeration") {
    for (int n = 0; n <= 4; ++n)
        for (int d = 0; d <= 6; ++d) {
            const auto b = basis(n, d);
            auto oracle = toricdeg::testing::brute_force_monomials(static_cast<std::size_t>(n) + 1,
                                                                    static_cast<unsigned>(d));
            CHECK(b.size() == oracle.size());
            CHECK(b.size() == basis_size(n, d));
            for (const auto& u : oracle) CHECK(b.index_of(u).has_value());
            for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(GrlexBefore{}(b[i], b[i + 1]));
            for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b[i]) == i);
        }
}

TEST_CASE("to_vector") {
    const auto b = basis(2, 3);
    const auto v = to_vector(parse_poly("x1^3 + x0^2*x2", 2, 3), b);
    CHECK(std::count_if(v.begin(), v.end(), [](const Rat& x) { return x != 0; }) == 2);
    for (const auto& x : v) CHECK((x == 0 || x == 1));
    const auto zero = to_vector(HomogPoly(2, 3), b);
    CHECK(std::all_of(zero.begin(), zero.end(), [](const Rat& x) { return x == 0; }));
    CHECK_THROWS_AS(to_vector(HomogPoly(2, 4), b), DimensionMismatch);

    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        const auto f = toricdeg::testing::random_poly(rng, 2, 3, 6);
        const auto fv = to_vector(f, b);
        CHECK(from_vector(fv, b) == f);
        CHECK(to_vector(from_vector(fv, b), b) == fv);
        CHECK(to_sparse_row(f, b) == to_sparse(fv));
    }
}

TEST_CASE("rank examples") {
    CHECK(rank(QMatrix::identity(3)) == 3);
    CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(QMatrix(4, 5)) == 0);
    CHECK(rank(QMatrix{{Rat(1, 2), Rat(1, 3)}, {3, 2}}) == 1);
    Rng rng(4);
    CHECK(rank(QMatrix{{1, 2}, {2, 4}}, RankMode::probabilistic, rng) == 1);
}

TEST_CASE("key matrix at n=3, d=5 has rank 4") {
    Rng rng(9);
    for (int t = 0; t < 5; ++t) {
        const auto c = sample_W(3, 5, rng, 1000);
        const auto k = key_matrix(c);
        CHECK(k.rows() == 4);
        CHECK(k.cols() == 4);
        CHECK(rank(k) == 4);
    }
}

TEST_CASE("rank agrees with Gauss-Jordan oracle") {
    Rng rng(21);
    for (int t = 0; t < 150; ++t) {
        const auto rows = static_cast<std::size_t>(uniform(rng, 1, 9));
        const auto cols = static_cast<std::size_t>(uniform(rng, 1, 9));
        const auto inner = static_cast<std::size_t>(uniform(rng, 1, 9));
        QMatrix m = t % 2 ? random_matrix(rng, rows, cols, 3) : low_rank_matrix(rng, rows, cols, inner);
        if (t % 3 == 0)
            for (std::size_t r = 0; r < rows; ++r) m(r, 0) /= Rat(uniform(rng, 1, 7));
        const auto expected = naive_rank(m);
        CHECK(rank(m) == expected);
        CHECK(rank_exact(sparse_rows(m), cols) == expected);
        CHECK(rank(m.transpose()) == expected);

        QMatrix scaled = m;
        for (std::size_t r = 0; r < rows; ++r) {
            long s = uniform(rng, -5, 5);
            if (s == 0) s = 3;
            for (std::size_t c = 0; c < cols; ++c) scaled(r, c) *= make_rat(s, 2);
        }
        CHECK(rank(scaled) == expected);
    }
}

TEST_CASE("modular rank never exceeds exact rank") {
    Rng rng(33);
    for (int t = 0; t < 50; ++t) {
        const auto rows = static_cast<std::size_t>(uniform(rng, 1, 8));
        const auto cols = static_cast<std::size_t>(uniform(rng, 1, 8));
        const auto m = random_matrix(rng, rows, cols, 100);
        const auto exact = rank(m);
        const auto prob = rank(m, RankMode::probabilistic, rng);
        CHECK(prob <= exact);
        CHECK(prob == exact);
        CHECK(rank(m, RankMode::exact, rng) == exact);
    }
    // Reduction mod p collapses a multiple of p.
    const std::uint32_t p = 1000003;
    const std::vector<SparseRow> rows{{{0, Rat(p)}}, {{1, Rat(1)}}};
    CHECK(rank_modular(rows, 2, p) == 1);
    CHECK(rank_exact(rows, 2) == 2);
    const std::vector<SparseRow> bad{{{0, Rat(1, p)}}};
    CHECK_FALSE(rank_modular(bad, 1, p).has_value());
}

TEST_CASE("random_prime range") {
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_prime(rng);
        CHECK(p > (1u << 30));
        bool prime = p % 2 == 1;
        for (std::uint64_t k = 3; prime && k * k <= p; k += 2) prime = p % k != 0;
        CHECK(prime);
    }
}

TEST_CASE("span_contains") {
    const std::vector<RatVector> rows{{1, 2, 0}, {0, 1, 1}};
    const RatVector sum{1, 3, 1};
    CHECK(span_contains(sum, rows));
    const std::vector<RatVector> one{{1, 1, 0}};
    const RatVector orth{1, -1, 0};
    CHECK_FALSE(span_contains(orth, one));
    CHECK(span_contains(RatVector{0, 0, 0}, one));

    Rng rng(12);
    for (int t = 0; t < 60; ++t) {
        const auto m = low_rank_matrix(rng, 5, 6, 3);
        const auto dense = dense_rows(m);
        const auto sparse = sparse_rows(m);
        RatVector combo(6);
        for (std::size_t r = 0; r < 5; ++r) {
            const Rat s = make_rat(uniform(rng, -4, 4), uniform(rng, 1, 3));
            for (std::size_t c = 0; c < 6; ++c) combo[c] += s * m(r, c);
        }
        CHECK(span_contains(combo, dense));
        CHECK(span_contains(to_sparse(combo), sparse, 6));

        RatVector other(6);
        for (auto& x : other) x = uniform(rng, -5, 5);
        QMatrix stacked(6, 6);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 6; ++c) stacked(r, c) = m(r, c);
        for (std::size_t c = 0; c < 6; ++c) stacked(5, c) = other[c];
        const bool expected = naive_rank(stacked) == naive_rank(m);
        CHECK(span_contains(other, dense) == expected);
        CHECK(span_contains(to_sparse(other), sparse, 6) == expected);
    }
}

TEST_CASE("rank report") {
    const auto r = RankReport::make(14, 15, RankMethod::exact);
    CHECK(r.codim == 1);
    CHECK_FALSE(r.surjective);
    const auto s = RankReport::make(10, 10, RankMethod::modular_exact_confirmed);
    CHECK(s.surjective);
    CHECK(to_string(s.method) == "modular+exact-confirmed");
}
