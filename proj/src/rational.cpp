#include "toricdeg/rational.hpp"

#include "toricdeg/error.hpp"

#include <cctype>

namespace toricdeg {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

Int parse_int(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw SyntaxError("malformed integer in '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw SyntaxError("malformed integer in '" + std::string(whole) + "'");
    }
    Int v(std::string(s.substr(i)), 10);
    return neg ? Int(-v) : v;
}

} // namespace

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text, text));
    Int num = parse_int(text.substr(0, slash), text);
    Int den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'");
    return make_rat(num, den);
}

Int lcm_of_denominators(std::span<const Rat> values) {
    Int l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

} // namespace toricdeg
