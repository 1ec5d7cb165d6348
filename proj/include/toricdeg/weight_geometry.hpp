#pragma once

#include "toricdeg/binomial.hpp"
#include "toricdeg/poly.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace toricdeg {

/// <functional, omega> compared against `constant`.
struct Constraint {
    RatVector functional;
    Rat constant{0};
};

// Equalities <a, w> = b, weak inequalities <a, w> >= b and strict
// inequalities <a, w> > b in the weight space Q^dim.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }

    void add_equality(RatVector functional, Rat constant = Rat(0));
    void add_weak(RatVector functional, Rat constant = Rat(0));
    void add_strict(RatVector functional, Rat constant = Rat(0));

    const std::vector<Constraint>& equalities() const { return equalities_; }
    const std::vector<Constraint>& weak_ineqs() const { return weak_; }
    const std::vector<Constraint>& strict_ineqs() const { return strict_; }

    bool empty() const { return equalities_.empty() && weak_.empty() && strict_.empty(); }
    bool homogeneous() const;

    /// Exact substitution check; strict constraints must hold strictly.
    bool satisfied_by(const WeightVector& w) const;

private:
    void check(const RatVector& functional) const;

    std::size_t dim_;
    std::vector<Constraint> equalities_;
    std::vector<Constraint> weak_;
    std::vector<Constraint> strict_;
};

// Multipliers (one per constraint, in the system's own order) whose
// combination cancels every variable and leaves an impossible comparison of
// constants: sum_i l_i <a_i, w> = 0 identically while sum_i l_i b_i > 0, or
// >= 0 when some strict constraint has a positive multiplier. Equality
// multipliers may have either sign; the others are non-negative.
struct InfeasibilityCertificate {
    RatVector equality_multipliers;
    RatVector weak_multipliers;
    RatVector strict_multipliers;
};

/// Re-expands the combination and checks that it is a contradiction.
bool verify_certificate(const LinearSystem& sys, const InfeasibilityCertificate& cert);

class FeasibilityResult {
public:
    explicit FeasibilityResult(WeightVector witness) : value_(std::move(witness)) {}
    explicit FeasibilityResult(InfeasibilityCertificate cert) : value_(std::move(cert)) {}

    bool feasible() const { return std::holds_alternative<WeightVector>(value_); }
    const WeightVector& witness() const { return std::get<WeightVector>(value_); }
    const InfeasibilityCertificate& certificate() const { return std::get<InfeasibilityCertificate>(value_); }

private:
    std::variant<WeightVector, InfeasibilityCertificate> value_;
};

// Decides feasibility exactly. Equalities are eliminated by substitution
// (pivoting on the lowest-index variable), then Fourier-Motzkin eliminates
// the remaining variables in increasing index order; a combined inequality is
// strict iff one of its parents is. Witnesses are read off by
// back-substitution: the midpoint of a bounded interval, bound +/- 1 for a
// half-line, 0 when unconstrained. Homogeneous systems get their witness
// scaled to clear denominators.
FeasibilityResult solve(const LinearSystem& sys);

/// Weak chain w_{ord[k]} >= w_{ord[k+1]} plus <u - v, w> = 0. `ordering`
/// lists the variable indices from first to last.
LinearSystem compatible_cone(const BinomialPattern& g, std::span<const std::size_t> ordering);

/// <u - v, w> = 0 and <u - m, w> > 0 for every other monomial m of f. Throws
/// SupportMismatch unless a*x^u and b*x^v both occur in f.
LinearSystem stratum_system(const HomogPoly& f, const BinomialPattern& g);

/// Certificate that <functional, w> >= 0 on the whole cone, i.e. that the
/// cone plus <functional, w> < 0 is infeasible; nullopt when not implied.
/// Throws DomainError if the cone has strict inequalities.
std::optional<InfeasibilityCertificate> implication_certificate(const LinearSystem& cone,
                                                                std::span<const Rat> functional);

bool implies(const LinearSystem& cone, std::span<const Rat> functional);

/// The system with <functional, w> < 0 appended.
LinearSystem with_negated(const LinearSystem& cone, std::span<const Rat> functional);

/// True iff `ordering` is a permutation of 0..size-1.
bool is_permutation_of_indices(std::span<const std::size_t> ordering);

} // namespace toricdeg
