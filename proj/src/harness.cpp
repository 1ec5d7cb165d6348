#include "toricdeg/harness.hpp"

#include "toricdeg/error.hpp"
#include "toricdeg/poly_text.hpp"

#include <algorithm>
#include <numeric>

namespace toricdeg {

WeightVector build_omega(int n, int d) {
    if (n < 2 || d < 2) throw DomainError("build_omega needs n >= 2 and d >= 2");
    RatVector w(static_cast<std::size_t>(n) + 1);
    w[0] = d;
    w[1] = d - 1;
    for (int i = 2; i <= n; ++i) w[static_cast<std::size_t>(i)] = -(i - 2);
    WeightVector omega(std::move(w));
    if (!satisfies_existence_conditions(omega, d))
        throw DomainError("internal: constructed weight violates the existence conditions");
    return omega;
}

bool satisfies_existence_conditions(const WeightVector& w, int d) {
    if (w.size() < 3) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!(w[i] > w[i + 1])) return false;
    return (d - 1) * w[0] + w[2] == d * w[1];
}

WitnessBundle existence_witness(int n, int d, Rng& rng, long bound) {
    const WeightVector omega = build_omega(n, d);
    const Exponent top = x1_power(n, d);
    const Exponent tie = x0_power_times_x2(n, d);
    for (int attempt = 0; attempt <= kResampleBudget; ++attempt) {
        WPoint c = sample_W(n, d, rng, bound);
        HomogPoly initial = initial_form(c.poly(), omega);
        if (initial.size() != 2 || initial.coeff(top) == 0 || initial.coeff(tie) == 0) continue;
        PrimeVerdict verdict = classify(initial);
        if (!verdict.is_prime()) continue;
        RankReport dominance = differential_rank(c);
        return WitnessBundle{n, d, std::move(c), omega, std::move(initial), verdict, dominance, attempt};
    }
    throw GenericityFailure("no sampled point of W produced the binomial initial form for n=" + std::to_string(n) +
                            ", d=" + std::to_string(d));
}

RankReport dominance_certificate(int n, int d, int samples, Rng& rng, long bound, RankMode mode) {
    if (samples < 1) throw DomainError("dominance_certificate needs at least one sample");
    std::optional<RankReport> best;
    for (int s = 0; s < samples; ++s) {
        WPoint c = sample_W(n, d, rng, bound);
        RankReport r = differential_rank(c, mode, rng);
        if (!best || r.rank > best->rank) best = r;
    }
    return *best;
}

std::vector<std::vector<std::size_t>> all_orderings(std::size_t m) {
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

std::size_t min_support(const Exponent& u) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) return i;
    return u.size();
}

std::size_t max_support(const Exponent& u) {
    for (std::size_t i = u.size(); i-- > 0;)
        if (u[i] != 0) return i;
    return 0;
}

struct Split {
    Exponent first;  // g', holds the smallest index p
    Rat first_coeff;
    Exponent second; // g''
    Rat second_coeff;
    std::size_t p;
    std::size_t q;
};

Split split(const Exponent& u, const Rat& a, const Exponent& v, const Rat& b) {
    if (min_support(u) <= min_support(v)) return {u, a, v, b, min_support(u), min_support(v)};
    return {v, b, u, a, min_support(v), min_support(u)};
}

RatVector difference(const Exponent& x, const Exponent& y) {
    RatVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = Rat(static_cast<long>(x[i])) - static_cast<long>(y[i]);
    return r;
}

} // namespace

StrataNormalization normalize_strata(const BinomialPattern& g, std::span<const std::size_t> ordering) {
    const std::size_t m = g.nvars();
    if (ordering.size() != m || !is_permutation_of_indices(ordering))
        throw DomainError("ordering must be a permutation of the variable indices");
    std::vector<std::size_t> relabel(m);
    for (std::size_t k = 0; k < m; ++k) relabel[ordering[k]] = k;

    const Exponent u = permute(g.u, relabel);
    const Exponent v = permute(g.v, relabel);
    Split s = split(u, g.a, v, g.b);
    if (max_support(s.first) > s.q)
        return {relabel, BinomialPattern(s.first, s.second, s.first_coeff, s.second_coeff), s.p, s.q, false, s.p};

    // g' sits inside [p, q): the compatible cone pins w_p = ... = w_q.
    std::vector<std::size_t> identity(m);
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    const LinearSystem cone = compatible_cone(BinomialPattern(u, v, g.a, g.b), identity);
    std::size_t block_end = s.p;
    while (block_end + 1 < m) {
        RatVector f(m);
        f[block_end + 1] = 1;
        f[s.p] = -1;
        if (!implies(cone, f)) break;
        ++block_end;
    }
    if (block_end < s.q)
        throw NormalizationFailure("compatible cone does not force equal weights on positions " + std::to_string(s.p) +
                                   ".." + std::to_string(s.q));

    std::vector<std::size_t> sigma = identity;
    const auto first = sigma.begin() + static_cast<std::ptrdiff_t>(s.p);
    const auto last = sigma.begin() + static_cast<std::ptrdiff_t>(block_end) + 1;
    while (std::next_permutation(first, last)) {
        const Split t = split(permute(u, sigma), g.a, permute(v, sigma), g.b);
        if (max_support(t.first) > t.q) {
            std::vector<std::size_t> composed(m);
            for (std::size_t i = 0; i < m; ++i) composed[i] = sigma[relabel[i]];
            return {composed, BinomialPattern(t.first, t.second, t.first_coeff, t.second_coeff), t.p, t.q, true,
                    block_end};
        }
    }
    throw NormalizationFailure("no permutation of the forced-equal block moves g' past q");
}

StrataCheck check_strata(int n, int d, const BinomialPattern& g, std::span<const std::size_t> ordering) {
    if (n < 2 || d < 2) throw DomainError("strata check needs n >= 2 and d >= 2");
    if (g.nvars() != static_cast<std::size_t>(n) + 1 || g.degree() != d)
        throw DomainError("binomial does not have shape (n, d)");
    if (!classify(g).is_prime()) throw DomainError("strata check needs a prime binomial");

    StrataCheck out{false, normalize_strata(g, ordering), 0};
    const auto& norm = out.normalization;
    if (norm.q == 0) return out;

    const std::size_t m = g.nvars();
    std::vector<std::size_t> identity(m);
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    const LinearSystem cone = compatible_cone(norm.g, identity);

    auto certify = [&](const RatVector& functional) {
        auto cert = implication_certificate(cone, functional);
        if (!cert) return false;
        if (!verify_certificate(with_negated(cone, functional), *cert))
            throw CertificateFailure("implication certificate does not re-expand");
        ++out.implications;
        return true;
    };

    const Exponent top = x1_power(n, d);
    const auto k = index_set_K(n, d);
    for (const auto& mono : k.members) {
        if (mono == norm.g.u || mono == norm.g.v) return out;
        if (!certify(difference(mono, top))) return out;
    }
    if (!certify(difference(top, norm.g.v))) return out;
    out.reduced = true;
    return out;
}

bool strata_reduction_check(int n, int d, const BinomialPattern& g, std::span<const std::size_t> ordering) {
    return check_strata(n, d, g, ordering).reduced;
}

NonexistenceReport nonexistence_certificate(int n, int d, int samples, Rng& rng, long bound) {
    if (n < 2 || d < 2) throw DomainError("nonexistence_certificate needs n >= 2 and d >= 2");
    if (d <= 2 * n - 1) throw DomainError("nonexistence_certificate needs d > 2n-1");
    if (samples < 1) throw DomainError("nonexistence_certificate needs at least one sample");

    NonexistenceReport rep;
    rep.n = n;
    rep.d = d;
    rep.codim_bound = static_cast<std::size_t>(d - 2 * n + 1);
    if (expected_codim(n, d) != rep.codim_bound) throw CertificateFailure("internal: codimension bound mismatch");

    rep.redundancy_ok = true;
    for (int s = 0; s < samples; ++s) {
        int attempt = 0;
        for (;;) {
            WPoint c = sample_W(n, d, rng, bound);
            const RankReport r = differential_rank(c);
            if (r.codim < rep.codim_bound)
                throw CertificateFailure("sampled codimension " + std::to_string(r.codim) + " below the bound " +
                                         std::to_string(rep.codim_bound));
            if (r.codim == rep.codim_bound) {
                rep.sampled_codims.push_back(r.codim);
                const auto red = redundancy_check(c);
                if (!red.ok)
                    throw CertificateFailure("redundancy check failed for " + red.failures.front().describe());
                break;
            }
            if (++attempt > kResampleBudget)
                throw GenericityFailure("sampled codimension stayed above the generic value " +
                                        std::to_string(rep.codim_bound));
            ++rep.resamples;
        }
    }

    const auto patterns = enumerate_patterns(n, d);
    const auto orderings = all_orderings(static_cast<std::size_t>(n) + 1);
    rep.patterns = patterns.size();
    rep.orderings = orderings.size();
    rep.full_enumeration = n <= kFullStrataMaxN && d <= kFullStrataMaxD;

    auto run = [&](const BinomialPattern& g, const std::vector<std::size_t>& ord) {
        if (!strata_reduction_check(n, d, g, ord))
            throw CertificateFailure("strata reduction failed for " + format_poly(g.to_poly()));
        ++rep.strata_checked;
    };
    if (rep.full_enumeration) {
        for (const auto& g : patterns)
            for (const auto& ord : orderings) run(g, ord);
    } else if (!patterns.empty()) {
        std::uniform_int_distribution<std::size_t> pick_g(0, patterns.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_o(0, orderings.size() - 1);
        for (std::size_t t = 0; t < kStrataSampleSize; ++t) {
            const auto& g = patterns[pick_g(rng)];
            run(g, orderings[pick_o(rng)]);
        }
    }
    rep.strata_reduced = true;
    return rep;
}

std::vector<SweepRow> threshold_sweep(int n_max, int d_max, int samples, Rng& rng, long bound, RankMode mode) {
    if (n_max < 2) throw DomainError("threshold_sweep needs n_max >= 2");
    if (d_max < 2) throw DomainError("threshold_sweep needs d_max >= 2");
    std::vector<SweepRow> rows;
    for (int n = 2; n <= n_max; ++n)
        for (int d = 2; d <= d_max; ++d) {
            const RankReport r = dominance_certificate(n, d, samples, rng, bound, mode);
            SweepRow row;
            row.n = n;
            row.d = d;
            row.ambient = r.ambient;
            row.generic_rank = r.rank;
            row.codim = r.codim;
            row.degenerable = r.surjective;
            row.expected = d <= 2 * n - 1;
            row.method = r.method;
            rows.push_back(row);
        }
    return rows;
}

} // namespace toricdeg
