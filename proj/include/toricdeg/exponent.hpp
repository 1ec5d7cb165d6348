#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace toricdeg {

/// Exponent vector of a monomial x_0^{u_0} ... x_n^{u_n}.
class Exponent {
public:
    using value_type = std::uint32_t;

    Exponent() = default;
    explicit Exponent(std::size_t length) : entries_(length, 0) {}
    explicit Exponent(std::vector<value_type> entries) : entries_(std::move(entries)) {}
    Exponent(std::initializer_list<value_type> entries) : entries_(entries) {}

    std::size_t size() const { return entries_.size(); }
    value_type operator[](std::size_t i) const { return entries_[i]; }
    value_type& operator[](std::size_t i) { return entries_[i]; }

    unsigned degree() const {
        return std::accumulate(entries_.begin(), entries_.end(), 0u);
    }

    const std::vector<value_type>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;

private:
    std::vector<value_type> entries_;
};

/// Graded-lexicographic precedence: higher degree first, then
/// lexicographically larger first. For n=1, d=2 this lists x0^2, x0*x1, x1^2.
struct GrlexBefore {
    bool operator()(const Exponent& a, const Exponent& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a > b;
    }
};

Exponent operator+(const Exponent& a, const Exponent& b);

/// Variables with a nonzero exponent.
std::vector<std::size_t> support(const Exponent& u);

bool disjoint_support(const Exponent& a, const Exponent& b);

} // namespace toricdeg
