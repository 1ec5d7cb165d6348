#include "support/generators.hpp"
#include "support/oracles.hpp"

#include "toricdeg/error.hpp"
#include "toricdeg/poly_text.hpp"
#include "toricdeg/weight_geometry.hpp"

#include <doctest.h>

using namespace toricdeg;
using toricdeg::testing::random_system;
using toricdeg::testing::uniform;

namespace {

bool grid_has_solution(const LinearSystem& sys, long radius) {
    std::vector<long> p(sys.dim(), -radius);
    for (;;) {
        RatVector w(sys.dim());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = make_rat(p[i], 2);
        if (toricdeg::testing::satisfies(sys, WeightVector(w))) return true;
        std::size_t i = 0;
        while (i < p.size() && p[i] == radius) p[i++] = -radius;
        if (i == p.size()) return false;
        ++p[i];
    }
}

} // namespace

TEST_CASE("compatible_cone") {
    const BinomialPattern g({0, 3, 0}, {2, 0, 1});
    const std::vector<std::size_t> id{0, 1, 2};
    const auto cone = compatible_cone(g, id);
    REQUIRE(cone.weak_ineqs().size() == 2);
    CHECK(cone.weak_ineqs()[0].functional == RatVector{1, -1, 0});
    CHECK(cone.weak_ineqs()[1].functional == RatVector{0, 1, -1});
    REQUIRE(cone.equalities().size() == 1);
    const auto& eq = cone.equalities()[0].functional;
    CHECK((eq == RatVector{-2, 3, -1} || eq == RatVector{2, -3, 1}));
    CHECK(cone.strict_ineqs().empty());

    const std::vector<std::size_t> rev{2, 1, 0};
    const auto back = compatible_cone(g, rev);
    CHECK(back.weak_ineqs()[0].functional == RatVector{0, -1, 1});
    CHECK(back.weak_ineqs()[1].functional == RatVector{-1, 1, 0});

    const std::vector<std::size_t> bad{0, 0, 2};
    CHECK_THROWS(compatible_cone(g, bad));
    CHECK(is_permutation_of_indices(rev));
    CHECK_FALSE(is_permutation_of_indices(bad));
}

TEST_CASE("stratum_system") {
    const auto f = parse_poly("x1^3 + x0^2*x2 + x2^3", 2, 3);
    const BinomialPattern g({0, 3, 0}, {2, 0, 1});
    const auto sys = stratum_system(f, g);
    CHECK(sys.equalities().size() == 1);
    REQUIRE(sys.strict_ineqs().size() == 1);
    CHECK(sys.strict_ineqs()[0].functional == RatVector{0, 3, -3});
    CHECK(sys.satisfied_by(WeightVector{3, 2, 0}));

    const auto only = stratum_system(g.to_poly(), g);
    CHECK(only.strict_ineqs().empty());
    const auto r = solve(only);
    CHECK(r.feasible());

    CHECK_THROWS_AS(stratum_system(parse_poly("x1^3 + x2^3", 2, 3), g), SupportMismatch);
}

TEST_CASE("solve examples") {
    LinearSystem sys(3);
    sys.add_weak({1, -1, 0});
    sys.add_weak({0, 1, -1});
    sys.add_equality({2, -3, 1});
    sys.add_strict({0, 3, -3});
    const auto r = solve(sys);
    REQUIRE(r.feasible());
    CHECK(toricdeg::testing::satisfies(sys, r.witness()));

    LinearSystem anti(2);
    anti.add_strict({1, -1});
    anti.add_strict({-1, 1});
    const auto s = solve(anti);
    REQUIRE_FALSE(s.feasible());
    CHECK(toricdeg::testing::certificate_holds(anti, s.certificate()));
    CHECK(verify_certificate(anti, s.certificate()));

    const auto e = solve(LinearSystem(4));
    REQUIRE(e.feasible());
    CHECK(e.witness() == WeightVector::zero(4));

    LinearSystem inconsistent(1);
    inconsistent.add_equality({1}, 1);
    inconsistent.add_equality({2}, 3);
    const auto t = solve(inconsistent);
    REQUIRE_FALSE(t.feasible());
    CHECK(toricdeg::testing::certificate_holds(inconsistent, t.certificate()));
}

TEST_CASE("stratum witness follows the extraction rule") {
    const auto f = parse_poly("x1^3 + x0^2*x2 + x2^3", 2, 3);
    const auto r = solve(stratum_system(f, BinomialPattern({0, 3, 0}, {2, 0, 1})));
    REQUIRE(r.feasible());
    CHECK(r.witness() == WeightVector{3, 2, 0});
}

TEST_CASE("certificates reject tampering") {
    LinearSystem anti(2);
    anti.add_strict({1, -1});
    anti.add_strict({-1, 1});
    auto cert = solve(anti).certificate();
    cert.strict_multipliers[0] += 1;
    CHECK_FALSE(verify_certificate(anti, cert));
    CHECK_FALSE(toricdeg::testing::certificate_holds(anti, cert));
}

TEST_CASE("implies") {
    LinearSystem one(3);
    one.add_weak({1, -1, 0});
    const RatVector diff{1, -1, 0};
    CHECK(implies(one, diff));

    LinearSystem chain(3);
    chain.add_weak({1, -1, 0});
    chain.add_weak({0, 1, -1});
    const RatVector combo{2, -1, -1}; // 2(w0-w1) + (w1-w2)
    CHECK(implies(chain, combo));
    const auto cert = implication_certificate(chain, combo);
    REQUIRE(cert.has_value());
    CHECK(toricdeg::testing::certificate_holds(with_negated(chain, combo), *cert));

    const RatVector w0{1, 0, 0};
    CHECK_FALSE(implies(LinearSystem(3), w0));
    const RatVector wrong{-1, 1, 0};
    CHECK_FALSE(implies(chain, wrong));

    LinearSystem strict(3);
    strict.add_strict({1, 0, 0});
    CHECK_THROWS_AS(implies(strict, w0), DomainError);
}

TEST_CASE("random systems: witnesses and certificates") {
    Rng rng(2024);
    int feasible = 0, infeasible = 0;
    for (int t = 0; t < 300; ++t) {
        const auto dim = static_cast<std::size_t>(uniform(rng, 1, 6));
        const auto sys = random_system(rng, dim, t % 2 == 0);
        const auto r = solve(sys);
        if (r.feasible()) {
            ++feasible;
            CHECK(r.witness().size() == dim);
            CHECK(toricdeg::testing::satisfies(sys, r.witness()));
            if (sys.homogeneous())
                for (const auto& x : r.witness().entries()) CHECK(x.get_den() == 1);
        } else {
            ++infeasible;
            CHECK(toricdeg::testing::certificate_holds(sys, r.certificate()));
        }
        if (dim <= 3 && grid_has_solution(sys, 6)) CHECK(r.feasible());
    }
    CHECK(feasible > 20);
    CHECK(infeasible > 20);
}

TEST_CASE("feasibility is invariant under scaling and translation of the data") {
    Rng rng(77);
    for (int t = 0; t < 100; ++t) {
        const auto dim = static_cast<std::size_t>(uniform(rng, 1, 4));
        const auto sys = random_system(rng, dim, false);
        const bool base = solve(sys).feasible();

        // Positive rescaling of every constraint.
        LinearSystem scaled(dim);
        auto scale = [&](const Constraint& c) {
            const Rat s = make_rat(uniform(rng, 1, 5), uniform(rng, 1, 5));
            RatVector a = c.functional;
            for (auto& x : a) x *= s;
            return std::pair{a, Rat(c.constant * s)};
        };
        for (const auto& c : sys.equalities()) { auto [a, b] = scale(c); scaled.add_equality(a, b); }
        for (const auto& c : sys.weak_ineqs()) { auto [a, b] = scale(c); scaled.add_weak(a, b); }
        for (const auto& c : sys.strict_ineqs()) { auto [a, b] = scale(c); scaled.add_strict(a, b); }
        CHECK(solve(scaled).feasible() == base);

        // Substituting w = w' + s moves each constant by <a, s>.
        RatVector shift(dim);
        for (auto& x : shift) x = uniform(rng, -3, 3);
        auto moved = [&](const Constraint& c) {
            Rat b = c.constant;
            for (std::size_t i = 0; i < dim; ++i) b -= c.functional[i] * shift[i];
            return b;
        };
        LinearSystem translated(dim);
        for (const auto& c : sys.equalities()) translated.add_equality(c.functional, moved(c));
        for (const auto& c : sys.weak_ineqs()) translated.add_weak(c.functional, moved(c));
        for (const auto& c : sys.strict_ineqs()) translated.add_strict(c.functional, moved(c));
        CHECK(solve(translated).feasible() == base);
    }
}
