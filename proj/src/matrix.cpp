#include "toricdeg/matrix.hpp"

#include "toricdeg/error.hpp"

#include <algorithm>

namespace toricdeg {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::identity(std::size_t size) {
    QMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    QMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

SparseRow to_sparse(std::span<const Rat> dense) {
    SparseRow row;
    for (std::size_t c = 0; c < dense.size(); ++c)
        if (dense[c] != 0) row.emplace_back(c, dense[c]);
    return row;
}

std::string_view to_string(RankMethod m) {
    switch (m) {
    case RankMethod::exact: return "exact";
    case RankMethod::modular_exact_confirmed: return "modular+exact-confirmed";
    }
    return "?";
}

namespace {

std::vector<SparseRow> as_sparse_rows(const QMatrix& m) {
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_sparse(m.row(r)));
    return rows;
}

// Fraction-free elimination on a dense integer matrix; returns the rank.
std::size_t bareiss_rank(std::vector<std::vector<Int>>& m, std::size_t cols) {
    const std::size_t nrows = m.size();
    Int prev = 1;
    Int t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && m[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(m[piv], m[r]);
        const Int& p = m[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // m[i][j] = (p * m[i][j] - m[i][c] * m[r][j]) / prev, exact
                mpz_mul(t.get_mpz_t(), m[i][c].get_mpz_t(), m[r][j].get_mpz_t());
                mpz_mul(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), p.get_mpz_t());
                mpz_sub(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), t.get_mpz_t());
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

std::uint32_t to_modular(const Rat& v, std::uint32_t p, bool& ok) {
    Int num = v.get_num() % p;
    if (num < 0) num += p;
    Int den = v.get_den() % p;
    if (den == 0) {
        ok = false;
        return 0;
    }
    Int inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Int(p).get_mpz_t());
    Int r = (num * inv) % p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

} // namespace

std::size_t rank_exact(std::span<const SparseRow> rows, std::size_t cols) {
    std::vector<char> covered(cols, 0);
    std::vector<const SparseRow*> active;
    active.reserve(rows.size());
    for (const auto& r : rows) {
        for (const auto& [c, v] : r)
            if (c >= cols) throw DimensionMismatch("sparse row column out of range");
        active.push_back(&r);
    }

    std::size_t rank = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<const SparseRow*> next;
        next.reserve(active.size());
        for (const SparseRow* r : active) {
            std::size_t live = 0, col = 0;
            for (const auto& [c, v] : *r) {
                if (!covered[c]) {
                    ++live;
                    col = c;
                    if (live > 1) break;
                }
            }
            if (live == 0) {
                changed = true;
            } else if (live == 1) {
                covered[col] = 1;
                ++rank;
                changed = true;
            } else {
                next.push_back(r);
            }
        }
        active.swap(next);
    }
    if (active.empty()) return rank;

    std::vector<std::size_t> compact(cols, 0);
    std::size_t free_cols = 0;
    for (std::size_t c = 0; c < cols; ++c)
        if (!covered[c]) compact[c] = free_cols++;

    std::vector<std::vector<Int>> m;
    m.reserve(active.size());
    for (const SparseRow* r : active) {
        Int l = 1;
        for (const auto& [c, v] : *r)
            if (!covered[c]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Int> dense(free_cols);
        for (const auto& [c, v] : *r)
            if (!covered[c]) dense[compact[c]] = v.get_num() * (l / v.get_den());
        m.push_back(std::move(dense));
    }
    return rank + bareiss_rank(m, free_cols);
}

std::optional<std::size_t> rank_modular(std::span<const SparseRow> rows, std::size_t cols,
                                        std::uint32_t prime) {
    const std::uint64_t p = prime;
    const std::size_t nrows = rows.size();
    std::vector<std::uint32_t> m(nrows * cols, 0);
    bool ok = true;
    for (std::size_t r = 0; r < nrows; ++r)
        for (const auto& [c, v] : rows[r]) {
            if (c >= cols) throw DimensionMismatch("sparse row column out of range");
            m[r * cols + c] = to_modular(v, prime, ok);
        }
    if (!ok) return std::nullopt;

    std::vector<std::size_t> nz;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < nrows; ++c) {
        std::size_t piv = rank;
        while (piv < nrows && m[piv * cols + c] == 0) ++piv;
        if (piv == nrows) continue;
        if (piv != rank)
            std::swap_ranges(m.begin() + piv * cols, m.begin() + (piv + 1) * cols,
                             m.begin() + rank * cols);
        std::uint32_t* prow = m.data() + rank * cols;
        const std::uint64_t inv = pow_mod(prow[c], p - 2, p);
        nz.clear();
        for (std::size_t j = c + 1; j < cols; ++j)
            if (prow[j] != 0) nz.push_back(j);
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            std::uint32_t* row = m.data() + i * cols;
            if (row[c] == 0) continue;
            const std::uint64_t f = p - (row[c] * inv % p);
            for (std::size_t j : nz) row[j] = static_cast<std::uint32_t>((row[j] + f * prow[j]) % p);
            row[c] = 0;
        }
        ++rank;
    }
    return rank;
}

std::uint32_t random_prime(Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> dist((1ull << 30) + 1, (1ull << 32) - (1ull << 16));
    Int start(static_cast<unsigned long>(dist(rng)));
    Int p;
    mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
    return static_cast<std::uint32_t>(p.get_ui());
}

std::size_t rank(const QMatrix& m) {
    auto rows = as_sparse_rows(m);
    return rank_exact(rows, m.cols());
}

std::size_t rank(const QMatrix& m, RankMode mode, Rng& rng) {
    auto rows = as_sparse_rows(m);
    if (mode == RankMode::exact) return rank_exact(rows, m.cols());
    for (;;) {
        if (auto r = rank_modular(rows, m.cols(), random_prime(rng))) return *r;
    }
}

bool span_contains(const SparseRow& v, std::span<const SparseRow> rows, std::size_t cols) {
    std::vector<SparseRow> with(rows.begin(), rows.end());
    const std::size_t base = rank_exact(with, cols);
    with.push_back(v);
    return rank_exact(with, cols) == base;
}

bool span_contains(std::span<const Rat> v, std::span<const RatVector> rows) {
    std::vector<SparseRow> sparse;
    sparse.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != v.size()) throw DimensionMismatch("span_contains: length mismatch");
        sparse.push_back(to_sparse(r));
    }
    return span_contains(to_sparse(v), sparse, v.size());
}

RankReport RankReport::make(std::size_t rank, std::size_t ambient, RankMethod method) {
    if (rank > ambient) throw DomainError("rank exceeds ambient dimension");
    RankReport r;
    r.rank = rank;
    r.ambient = ambient;
    r.codim = ambient - rank;
    r.surjective = r.codim == 0;
    r.method = method;
    return r;
}

} // namespace toricdeg
