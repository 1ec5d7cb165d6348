#include "toricdeg/json_io.hpp"

#include "toricdeg/poly_text.hpp"

namespace toricdeg {

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Exponent& u) {
    Json a = Json::array();
    for (auto e : u) a.push_back(e);
    return a;
}

namespace {

Json rat_array(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json constraints(const std::vector<Constraint>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(Json{{"functional", rat_array(c.functional)}, {"constant", to_json(c.constant)}});
    return a;
}

} // namespace

Json to_json(const WeightVector& w) { return rat_array(w.entries()); }

Json to_json(const PrimeVerdict& v) {
    Json j{{"verdict", std::string(to_string(v.tag))}};
    if (v.tag == PrimeTag::proper_power) j["power"] = v.power;
    return j;
}

Json to_json(const RankReport& r) {
    return Json{{"rank", r.rank},
                {"ambient", r.ambient},
                {"codim", r.codim},
                {"surjective", r.surjective},
                {"method", std::string(to_string(r.method))}};
}

Json to_json(const BinomialPattern& g) {
    return Json{{"u", to_json(g.u)},
                {"v", to_json(g.v)},
                {"a", to_json(g.a)},
                {"b", to_json(g.b)},
                {"binomial", format_poly(g.to_poly())}};
}

Json to_json(const LinearSystem& sys) {
    return Json{{"dim", sys.dim()},
                {"equalities", constraints(sys.equalities())},
                {"weak", constraints(sys.weak_ineqs())},
                {"strict", constraints(sys.strict_ineqs())}};
}

Json to_json(const FeasibilityResult& r) {
    if (r.feasible()) return Json{{"status", "feasible"}, {"witness", to_json(r.witness())}};
    const auto& c = r.certificate();
    return Json{{"status", "infeasible"},
                {"certificate",
                 Json{{"equality_multipliers", rat_array(c.equality_multipliers)},
                      {"weak_multipliers", rat_array(c.weak_multipliers)},
                      {"strict_multipliers", rat_array(c.strict_multipliers)}}}};
}

Json to_json(const WitnessBundle& b) {
    Json support = Json::array();
    for (const auto& [u, c] : b.initial.terms()) support.push_back(to_json(u));
    return Json{{"n", b.n},
                {"d", b.d},
                {"f", format_poly(b.c.poly())},
                {"omega", to_json(b.omega)},
                {"initial", format_poly(b.initial)},
                {"initial_support", support},
                {"verdict", to_json(b.verdict)},
                {"dominance", to_json(b.dominance)},
                {"resamples", b.resamples}};
}

Json to_json(const NonexistenceReport& r) {
    return Json{{"n", r.n},
                {"d", r.d},
                {"codim_bound", r.codim_bound},
                {"sampled_codims", r.sampled_codims},
                {"resamples", r.resamples},
                {"redundancy_ok", r.redundancy_ok},
                {"patterns", r.patterns},
                {"orderings", r.orderings},
                {"strata_checked", r.strata_checked},
                {"full_enumeration", r.full_enumeration},
                {"strata_reduced", r.strata_reduced}};
}

Json to_json(const SweepRow& row) {
    return Json{{"n", row.n},
                {"d", row.d},
                {"ambient", row.ambient},
                {"generic_rank", row.generic_rank},
                {"codim", row.codim},
                {"degenerable", row.degenerable},
                {"expected", row.expected},
                {"method", std::string(to_string(row.method))}};
}

} // namespace toricdeg
