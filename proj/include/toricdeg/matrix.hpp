#pragma once

#include "toricdeg/random.hpp"
#include "toricdeg/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace toricdeg {

/// Dense row-major rational matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static QMatrix identity(std::size_t size);
    static QMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    QMatrix transpose() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

// Sparse row: strictly increasing column indices, nonzero values. Large
// generator sets (tens of thousands of monomial columns) are handed to the
// rank routines in this form; everything else goes through QMatrix.
using SparseRow = std::vector<std::pair<std::size_t, Rat>>;

SparseRow to_sparse(std::span<const Rat> dense);

enum class RankMode { exact, probabilistic };
enum class RankMethod { exact, modular_exact_confirmed };

std::string_view to_string(RankMethod m);

// Exact rank over Q. Rows that reduce to a single surviving column are used
// as pivots first (repeatedly); the remaining block is reduced by
// fraction-free (Bareiss) elimination over Z after clearing denominators
// row by row.
std::size_t rank_exact(std::span<const SparseRow> rows, std::size_t cols);

// Rank of the reduction modulo `prime`, by dense Gaussian elimination. This
// never exceeds the rank over Q. Returns nullopt if `prime` divides a
// denominator, in which case the reduction is undefined.
std::optional<std::size_t> rank_modular(std::span<const SparseRow> rows, std::size_t cols,
                                        std::uint32_t prime);

/// Uniform random prime in (2^30, 2^32).
std::uint32_t random_prime(Rng& rng);

std::size_t rank(const QMatrix& m);

/// `probabilistic` returns the rank modulo a random prime drawn from `rng`.
std::size_t rank(const QMatrix& m, RankMode mode, Rng& rng);

/// True iff v is a rational linear combination of `rows`.
bool span_contains(std::span<const Rat> v, std::span<const RatVector> rows);
bool span_contains(const SparseRow& v, std::span<const SparseRow> rows, std::size_t cols);

struct RankReport {
    std::size_t rank = 0;
    std::size_t ambient = 0;
    std::size_t codim = 0;
    bool surjective = false;
    RankMethod method = RankMethod::exact;

    static RankReport make(std::size_t rank, std::size_t ambient, RankMethod method);
};

} // namespace toricdeg
