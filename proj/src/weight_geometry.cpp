#include "toricdeg/weight_geometry.hpp"

#include "toricdeg/error.hpp"

#include <algorithm>

namespace toricdeg {

void LinearSystem::check(const RatVector& functional) const {
    if (functional.size() != dim_)
        throw DimensionMismatch("constraint of length " + std::to_string(functional.size()) +
                                " in a system of dimension " + std::to_string(dim_));
}

void LinearSystem::add_equality(RatVector functional, Rat constant) {
    check(functional);
    equalities_.push_back({std::move(functional), std::move(constant)});
}

void LinearSystem::add_weak(RatVector functional, Rat constant) {
    check(functional);
    weak_.push_back({std::move(functional), std::move(constant)});
}

void LinearSystem::add_strict(RatVector functional, Rat constant) {
    check(functional);
    strict_.push_back({std::move(functional), std::move(constant)});
}

bool LinearSystem::homogeneous() const {
    auto zero = [](const Constraint& c) { return c.constant == 0; };
    return std::all_of(equalities_.begin(), equalities_.end(), zero) &&
           std::all_of(weak_.begin(), weak_.end(), zero) && std::all_of(strict_.begin(), strict_.end(), zero);
}

namespace {

Rat dot(const RatVector& a, const RatVector& w) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * w[i];
    return s;
}

} // namespace

bool LinearSystem::satisfied_by(const WeightVector& w) const {
    if (w.size() != dim_) throw DimensionMismatch("witness length differs from system dimension");
    const auto& e = w.entries();
    for (const auto& c : equalities_)
        if (dot(c.functional, e) != c.constant) return false;
    for (const auto& c : weak_)
        if (dot(c.functional, e) < c.constant) return false;
    for (const auto& c : strict_)
        if (dot(c.functional, e) <= c.constant) return false;
    return true;
}

bool verify_certificate(const LinearSystem& sys, const InfeasibilityCertificate& cert) {
    if (cert.equality_multipliers.size() != sys.equalities().size() ||
        cert.weak_multipliers.size() != sys.weak_ineqs().size() ||
        cert.strict_multipliers.size() != sys.strict_ineqs().size())
        return false;
    RatVector combined(sys.dim());
    Rat constant = 0;
    bool strict_used = false;
    auto accumulate = [&](const std::vector<Constraint>& cs, const RatVector& lambda, bool nonneg, bool strict) {
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (nonneg && lambda[i] < 0) return false;
            if (lambda[i] == 0) continue;
            if (strict) strict_used = true;
            for (std::size_t k = 0; k < sys.dim(); ++k) combined[k] += lambda[i] * cs[i].functional[k];
            constant += lambda[i] * cs[i].constant;
        }
        return true;
    };
    if (!accumulate(sys.equalities(), cert.equality_multipliers, false, false)) return false;
    if (!accumulate(sys.weak_ineqs(), cert.weak_multipliers, true, false)) return false;
    if (!accumulate(sys.strict_ineqs(), cert.strict_multipliers, true, true)) return false;
    if (std::any_of(combined.begin(), combined.end(), [](const Rat& x) { return x != 0; })) return false;
    return constant > 0 || (strict_used && constant >= 0);
}

namespace {

// a.w + c >= 0 (> 0 when strict; = 0 for equality rows), together with the
// multipliers expressing it as a combination of the original constraints.
struct Row {
    RatVector a;
    Rat c;
    bool strict = false;
    RatVector mult;
};

bool all_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

void axpy(Row& r, const Rat& s, const Row& e) {
    for (std::size_t k = 0; k < r.a.size(); ++k)
        if (e.a[k] != 0) r.a[k] += s * e.a[k];
    r.c += s * e.c;
    for (std::size_t k = 0; k < r.mult.size(); ++k)
        if (e.mult[k] != 0) r.mult[k] += s * e.mult[k];
}

void scale(Row& r, const Rat& s) {
    for (auto& x : r.a) x *= s;
    r.c *= s;
    for (auto& x : r.mult) x *= s;
}

// Divides by the magnitude of the leading coefficient so duplicates compare
// equal.
void normalize(Row& r) {
    for (const auto& x : r.a)
        if (x != 0) {
            scale(r, Rat(1) / abs(x));
            return;
        }
}

class Solver {
public:
    explicit Solver(const LinearSystem& sys) : sys_(sys), dim_(sys.dim()) {
        total_ = sys.equalities().size() + sys.weak_ineqs().size() + sys.strict_ineqs().size();
        std::size_t idx = 0;
        auto load = [&](const std::vector<Constraint>& cs, std::vector<Row>& out, bool strict) {
            for (const auto& c : cs) {
                Row r{c.functional, -c.constant, strict, RatVector(total_)};
                r.mult[idx++] = 1;
                out.push_back(std::move(r));
            }
        };
        load(sys.equalities(), eqs_, false);
        load(sys.weak_ineqs(), ineqs_, false);
        load(sys.strict_ineqs(), ineqs_, true);
    }

    FeasibilityResult run() {
        if (auto cert = eliminate_equalities()) return FeasibilityResult(std::move(*cert));
        if (auto cert = fourier_motzkin()) return FeasibilityResult(std::move(*cert));
        return FeasibilityResult(extract_witness());
    }

private:
    InfeasibilityCertificate certificate_from(const Row& r) const {
        InfeasibilityCertificate cert;
        const std::size_t ne = sys_.equalities().size(), nw = sys_.weak_ineqs().size();
        cert.equality_multipliers.assign(r.mult.begin(), r.mult.begin() + ne);
        cert.weak_multipliers.assign(r.mult.begin() + ne, r.mult.begin() + ne + nw);
        cert.strict_multipliers.assign(r.mult.begin() + ne + nw, r.mult.end());
        return cert;
    }

    std::optional<InfeasibilityCertificate> eliminate_equalities() {
        for (std::size_t e = 0; e < eqs_.size(); ++e) {
            Row& eq = eqs_[e];
            auto it = std::find_if(eq.a.begin(), eq.a.end(), [](const Rat& x) { return x != 0; });
            if (it == eq.a.end()) {
                if (eq.c == 0) continue;
                // Read the equality as "c >= 0" with the sign making it false.
                if (eq.c > 0) scale(eq, Rat(-1));
                return certificate_from(eq);
            }
            const std::size_t k = static_cast<std::size_t>(it - eq.a.begin());
            const Rat pivot = eq.a[k];
            for (std::size_t f = e + 1; f < eqs_.size(); ++f)
                if (eqs_[f].a[k] != 0) axpy(eqs_[f], -eqs_[f].a[k] / pivot, eq);
            for (auto& r : ineqs_)
                if (r.a[k] != 0) axpy(r, -r.a[k] / pivot, eq);
            substitutions_.push_back({k, eq});
            eliminated_[k] = true;
        }
        return std::nullopt;
    }

    // Drops trivially true constant rows and exact duplicates; returns the
    // certificate if a constant row is contradictory.
    std::optional<InfeasibilityCertificate> tidy(std::vector<Row>& rows) const {
        std::vector<Row> kept;
        for (auto& r : rows) {
            if (all_zero(r.a)) {
                if (r.c < 0 || (r.strict && r.c == 0)) return certificate_from(r);
                continue;
            }
            normalize(r);
            auto dup = std::find_if(kept.begin(), kept.end(), [&](const Row& k) {
                return k.strict == r.strict && k.c == r.c && k.a == r.a;
            });
            if (dup == kept.end()) kept.push_back(std::move(r));
        }
        rows = std::move(kept);
        return std::nullopt;
    }

    std::optional<InfeasibilityCertificate> fourier_motzkin() {
        if (auto cert = tidy(ineqs_)) return cert;
        for (std::size_t x = 0; x < dim_; ++x) {
            if (eliminated_[x]) continue;
            stages_.push_back({x, ineqs_});
            std::vector<Row> lower, upper, next;
            for (auto& r : ineqs_) {
                if (r.a[x] > 0)
                    lower.push_back(std::move(r));
                else if (r.a[x] < 0)
                    upper.push_back(std::move(r));
                else
                    next.push_back(std::move(r));
            }
            for (const auto& lo : lower)
                for (const auto& up : upper) {
                    Row comb = lo;
                    scale(comb, -up.a[x]);
                    axpy(comb, lo.a[x], up);
                    comb.a[x] = 0;
                    comb.strict = lo.strict || up.strict;
                    next.push_back(std::move(comb));
                }
            ineqs_ = std::move(next);
            if (auto cert = tidy(ineqs_)) return cert;
        }
        return std::nullopt;
    }

    WeightVector extract_witness() {
        RatVector w(dim_);
        for (auto st = stages_.rbegin(); st != stages_.rend(); ++st) {
            const std::size_t x = st->var;
            std::optional<Rat> lo, hi;
            for (const auto& r : st->rows) {
                if (r.a[x] == 0) continue;
                Rat rest = r.c;
                for (std::size_t k = 0; k < dim_; ++k)
                    if (k != x && r.a[k] != 0) rest += r.a[k] * w[k];
                Rat bound = -rest / r.a[x];
                if (r.a[x] > 0) {
                    if (!lo || bound > *lo) lo = bound;
                } else {
                    if (!hi || bound < *hi) hi = bound;
                }
            }
            // FM soundness guarantees lo < hi, or lo == hi with both weak.
            if (lo && hi)
                w[x] = (*lo == *hi) ? *lo : (*lo + *hi) / 2;
            else if (lo)
                w[x] = *lo + 1;
            else if (hi)
                w[x] = *hi - 1;
            else
                w[x] = 0;
        }
        for (auto s = substitutions_.rbegin(); s != substitutions_.rend(); ++s) {
            const Row& eq = s->row;
            Rat rest = eq.c;
            for (std::size_t k = 0; k < dim_; ++k)
                if (k != s->var && eq.a[k] != 0) rest += eq.a[k] * w[k];
            w[s->var] = -rest / eq.a[s->var];
        }
        if (sys_.homogeneous()) {
            Int l = lcm_of_denominators(w);
            for (auto& x : w) x *= l;
        }
        WeightVector witness(std::move(w));
        if (!sys_.satisfied_by(witness)) throw CertificateFailure("internal: extracted witness violates the system");
        return witness;
    }

    struct Substitution {
        std::size_t var;
        Row row;
    };
    struct Stage {
        std::size_t var;
        std::vector<Row> rows;
    };

    const LinearSystem& sys_;
    std::size_t dim_;
    std::size_t total_ = 0;
    std::vector<Row> eqs_;
    std::vector<Row> ineqs_;
    std::vector<Substitution> substitutions_;
    std::vector<Stage> stages_;
    std::vector<bool> eliminated_ = std::vector<bool>(dim_, false);
};

} // namespace

FeasibilityResult solve(const LinearSystem& sys) {
    auto result = Solver(sys).run();
    if (!result.feasible() && !verify_certificate(sys, result.certificate()))
        throw CertificateFailure("internal: infeasibility certificate does not re-expand");
    return result;
}

bool is_permutation_of_indices(std::span<const std::size_t> ordering) {
    std::vector<bool> seen(ordering.size(), false);
    for (auto i : ordering) {
        if (i >= ordering.size() || seen[i]) return false;
        seen[i] = true;
    }
    return true;
}

LinearSystem compatible_cone(const BinomialPattern& g, std::span<const std::size_t> ordering) {
    const std::size_t m = g.nvars();
    if (ordering.size() != m || !is_permutation_of_indices(ordering))
        throw DomainError("ordering must be a permutation of 0.." + std::to_string(m - 1));
    LinearSystem sys(m);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        RatVector a(m);
        a[ordering[k]] = 1;
        a[ordering[k + 1]] = -1;
        sys.add_weak(std::move(a));
    }
    RatVector e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = Rat(static_cast<long>(g.u[i])) - static_cast<long>(g.v[i]);
    sys.add_equality(std::move(e));
    return sys;
}

LinearSystem stratum_system(const HomogPoly& f, const BinomialPattern& g) {
    if (g.nvars() != f.nvars() || g.degree() != f.d())
        throw SupportMismatch("binomial and form have different shapes");
    if (f.coeff(g.u) != g.a || f.coeff(g.v) != g.b)
        throw SupportMismatch("the binomial's terms do not occur in the form with the same coefficients");
    const std::size_t m = f.nvars();
    auto diff = [&](const Exponent& p, const Exponent& q) {
        RatVector a(m);
        for (std::size_t i = 0; i < m; ++i) a[i] = Rat(static_cast<long>(p[i])) - static_cast<long>(q[i]);
        return a;
    };
    LinearSystem sys(m);
    sys.add_equality(diff(g.u, g.v));
    for (const auto& [w, c] : f.terms())
        if (w != g.u && w != g.v) sys.add_strict(diff(g.u, w));
    return sys;
}

LinearSystem with_negated(const LinearSystem& cone, std::span<const Rat> functional) {
    if (functional.size() != cone.dim()) throw DimensionMismatch("functional length differs from cone dimension");
    LinearSystem sys = cone;
    RatVector neg(functional.begin(), functional.end());
    for (auto& x : neg) x = -x;
    sys.add_strict(std::move(neg));
    return sys;
}

std::optional<InfeasibilityCertificate> implication_certificate(const LinearSystem& cone,
                                                                std::span<const Rat> functional) {
    if (!cone.strict_ineqs().empty()) throw DomainError("implies: cone must not contain strict inequalities");
    auto result = solve(with_negated(cone, functional));
    if (result.feasible()) return std::nullopt;
    return result.certificate();
}

bool implies(const LinearSystem& cone, std::span<const Rat> functional) {
    return implication_certificate(cone, functional).has_value();
}

} // namespace toricdeg
