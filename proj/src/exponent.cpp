#include "toricdeg/exponent.hpp"

#include "toricdeg/error.hpp"

namespace toricdeg {

Exponent operator+(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw DimensionMismatch("exponent lengths differ");
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::vector<std::size_t> support(const Exponent& u) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) s.push_back(i);
    return s;
}

bool disjoint_support(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw DimensionMismatch("exponent lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

} // namespace toricdeg
