#pragma once

#include "toricdeg/binomial.hpp"
#include "toricdeg/family_w.hpp"
#include "toricdeg/weight_geometry.hpp"

#include <vector>

namespace toricdeg {

/// Largest number of fresh samples drawn when a genericity-dependent
/// equality fails on a sampled point.
inline constexpr int kResampleBudget = 5;

/// (d, d-1, 0, -1, ..., -(n-2)). Throws DomainError for n < 2 or d < 2.
WeightVector build_omega(int n, int d);

/// w_0 > w_1 > ... > w_n and (d-1) w_0 + w_2 = d w_1.
bool satisfies_existence_conditions(const WeightVector& w, int d);

struct WitnessBundle {
    int n = 0;
    int d = 0;
    WPoint c;
    WeightVector omega;
    HomogPoly initial;
    PrimeVerdict verdict;
    RankReport dominance;
    int resamples = 0;
};

// Samples c in W and checks that In_omega(f_c) = a x1^d + b x0^{d-1} x2 with
// a, b nonzero and prime. The attached rank report is that of the
// differential at (e, c); it is surjective only for d <= 2n-1. Throws
// GenericityFailure once the resample budget is spent.
WitnessBundle existence_witness(int n, int d, Rng& rng, long bound = 1000);

/// Largest differential rank over `samples` points of W.
RankReport dominance_certificate(int n, int d, int samples, Rng& rng, long bound = 1000,
                                 RankMode mode = RankMode::probabilistic);

// Normal form of a (binomial, ordering) pair. Coordinates are relabelled so
// the ordering reads 0, 1, ..., n; `relabel[i]` is the new position of the
// original variable i. When the term g' holding the smallest index p only
// uses indices below q (the smallest index of the other term g''), the cone
// forces w_p = ... = w_q, and positions inside that block are permuted until
// g' uses an index beyond q.
struct StrataNormalization {
    std::vector<std::size_t> relabel;
    BinomialPattern g;            ///< in normalized coordinates, g.u is g'
    std::size_t p = 0;
    std::size_t q = 0;
    bool block_permuted = false;
    std::size_t block_end = 0;    ///< last position of the forced-equal block (== p if unused)
};

/// Throws NormalizationFailure if no block permutation works.
StrataNormalization normalize_strata(const BinomialPattern& g, std::span<const std::size_t> ordering);

struct StrataCheck {
    bool reduced = false;
    StrataNormalization normalization;
    std::size_t implications = 0; ///< verified implication certificates
};

// Verifies over the normalized compatible cone that every K-monomial has
// weight >= that of x1^d, that x1^d has weight >= that of g'', and that no
// K-monomial is a monomial of g. Forms with initial form g under a compatible
// weight then have no K-monomials, so the stratum lies in a coordinate
// permutation of W.
StrataCheck check_strata(int n, int d, const BinomialPattern& g, std::span<const std::size_t> ordering);

/// check_strata(...).reduced. Throws DomainError unless g is prime of shape (n, d).
bool strata_reduction_check(int n, int d, const BinomialPattern& g, std::span<const std::size_t> ordering);

struct NonexistenceReport {
    int n = 0;
    int d = 0;
    std::size_t codim_bound = 0;
    std::vector<std::size_t> sampled_codims;
    int resamples = 0;
    bool redundancy_ok = false;
    std::size_t patterns = 0;
    std::size_t orderings = 0;
    std::size_t strata_checked = 0;
    bool full_enumeration = false;
    bool strata_reduced = false;
};

/// Full pattern x ordering enumeration is used up to this size; beyond it a
/// seeded sample of kStrataSampleSize pairs is checked.
inline constexpr int kFullStrataMaxN = 3;
inline constexpr int kFullStrataMaxD = 7;
inline constexpr std::size_t kStrataSampleSize = 200;

// For d > 2n-1: the codimension bound d-2n+1, sampled differential
// codimensions (each must equal the bound), the redundancy check on every
// sample, and the strata reduction over prime patterns and orderings. Throws
// DomainError for d <= 2n-1, CertificateFailure on the first failing item and
// GenericityFailure when resampling cannot reach the generic codimension.
NonexistenceReport nonexistence_certificate(int n, int d, int samples, Rng& rng, long bound = 1000);

struct SweepRow {
    int n = 0;
    int d = 0;
    std::size_t ambient = 0;
    std::size_t generic_rank = 0;
    std::size_t codim = 0;
    bool degenerable = false;
    bool expected = false; ///< d <= 2n-1
    RankMethod method = RankMethod::exact;

    bool matches() const { return degenerable == expected; }
};

/// dominance_certificate over 2 <= n <= n_max, 2 <= d <= d_max, ordered by (n, d).
std::vector<SweepRow> threshold_sweep(int n_max, int d_max, int samples, Rng& rng, long bound = 1000,
                                      RankMode mode = RankMode::probabilistic);

/// All permutations of 0..m-1 in lexicographic order.
std::vector<std::vector<std::size_t>> all_orderings(std::size_t m);

} // namespace toricdeg
