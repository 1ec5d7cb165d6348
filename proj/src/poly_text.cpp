#include "toricdeg/poly_text.hpp"

#include "toricdeg/error.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace toricdeg {

namespace {

struct RawTerm {
    Rat coeff;
    std::vector<std::pair<std::size_t, std::uint32_t>> factors;
};

class Parser {
public:
    explicit Parser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }

    std::vector<RawTerm> parse() {
        if (s_.empty()) throw SyntaxError("empty polynomial");
        std::vector<RawTerm> terms;
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = get() == '-';
        terms.push_back(term(negative));
        while (!done()) {
            char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            terms.push_back(term(op == '-'));
        }
        return terms;
    }

private:
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    char get() { return done() ? '\0' : s_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    std::string digits() {
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(get());
        return d;
    }

    RawTerm term(bool negative) {
        RawTerm t{Rat(1), {}};
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num(digits(), 10);
            Int den = 1;
            if (peek() == '/') {
                get();
                auto ds = digits();
                if (ds.empty()) fail("expected denominator");
                den = Int(ds, 10);
                if (den == 0) fail("zero denominator");
            }
            t.coeff = make_rat(num, den);
            if (peek() == '*') get();
        }
        t.factors.push_back(factor());
        while (peek() == '*') {
            get();
            t.factors.push_back(factor());
        }
        if (negative) t.coeff = -t.coeff;
        return t;
    }

    std::pair<std::size_t, std::uint32_t> factor() {
        if (get() != 'x') fail("expected variable 'x<index>'");
        auto idx = digits();
        if (idx.empty()) fail("expected variable index");
        std::uint32_t e = 1;
        if (peek() == '^') {
            get();
            auto es = digits();
            if (es.empty()) fail("expected exponent");
            if (es.size() > 6) fail("exponent too large");
            e = static_cast<std::uint32_t>(std::stoul(es));
        }
        if (idx.size() > 6) fail("variable index too large");
        return {std::stoul(idx), e};
    }

    std::string s_;
    std::size_t pos_ = 0;
};

HomogPoly assemble(const std::vector<RawTerm>& raw, int n, int d) {
    if (n < 0 || d < 0) throw DomainError("parse_poly: n and d must be non-negative");
    HomogPoly f(n, d);
    for (const auto& t : raw) {
        Exponent u(static_cast<std::size_t>(n) + 1);
        for (const auto& [i, e] : t.factors) {
            if (i > static_cast<std::size_t>(n))
                throw IndexError("variable x" + std::to_string(i) + " exceeds x" + std::to_string(n));
            u[i] += e;
        }
        if (u.degree() != static_cast<unsigned>(d))
            throw DegreeError("term " + format_monomial(u) + " has degree " + std::to_string(u.degree()) +
                              ", expected " + std::to_string(d));
        f.add_term(u, t.coeff);
    }
    if (f.is_zero()) throw ZeroPolynomial("polynomial cancels to zero");
    return f;
}

} // namespace

HomogPoly parse_poly(std::string_view text, int n, int d) {
    return assemble(Parser(text).parse(), n, d);
}

HomogPoly parse_poly(std::string_view text) {
    auto raw = Parser(text).parse();
    std::size_t n = 0;
    for (const auto& t : raw)
        for (const auto& [i, e] : t.factors) n = std::max(n, i);
    unsigned d = 0;
    for (const auto& [i, e] : raw.front().factors) d += e;
    return assemble(raw, static_cast<int>(n), static_cast<int>(d));
}

std::string format_monomial(const Exponent& u) {
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i);
        if (u[i] != 1) s += '^' + std::to_string(u[i]);
    }
    return s.empty() ? "1" : s;
}

std::string format_poly(const HomogPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [u, c] : f.terms()) {
        const bool neg = c < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        Rat a = neg ? Rat(-c) : c;
        const bool constant = u.degree() == 0;
        if (a != 1 || constant) {
            s += to_string(a);
            if (!constant) s += '*';
        }
        if (!constant) s += format_monomial(u);
    }
    return s;
}

} // namespace toricdeg
