#include "smallcover/gf2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace smallcover {

namespace {

void check_dimension(std::size_t n) {
    if (n > kMaxDimension) {
        throw std::invalid_argument("matrix dimension " + std::to_string(n) +
                                    " exceeds " + std::to_string(kMaxDimension));
    }
}

} // namespace

std::uint64_t row_mask(std::size_t n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

BitMatrix::BitMatrix(std::size_t n) : n_(n), rows_(n, 0) { check_dimension(n); }

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : BitMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw std::invalid_argument("BitMatrix rows must all have length " +
                                        std::to_string(n_));
        }
        std::size_t j = 0;
        for (int v : row) {
            if (v != 0 && v != 1) {
                throw std::invalid_argument("BitMatrix entries must be 0 or 1");
            }
            if (v) rows_[i] |= std::uint64_t{1} << j;
            ++j;
        }
        ++i;
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i] = std::uint64_t{1} << i;
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t n, std::span<const std::uint64_t> rows) {
    if (rows.size() != n) {
        throw std::invalid_argument("BitMatrix::from_rows: expected " + std::to_string(n) +
                                    " rows, got " + std::to_string(rows.size()));
    }
    BitMatrix m(n);
    const auto mask = row_mask(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i] & ~mask) {
            throw std::invalid_argument("BitMatrix::from_rows: row " + std::to_string(i) +
                                        " has bits outside the matrix");
        }
        m.rows_[i] = rows[i];
    }
    return m;
}

bool BitMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_) throw std::out_of_range("BitMatrix::at");
    return (rows_[row] >> col) & 1U;
}

BitMatrix BitMatrix::with(std::size_t row, std::size_t col, bool bit) const {
    if (row >= n_ || col >= n_) throw std::out_of_range("BitMatrix::with");
    BitMatrix copy = *this;
    const auto b = std::uint64_t{1} << col;
    copy.rows_[row] = bit ? (copy.rows_[row] | b) : (copy.rows_[row] & ~b);
    return copy;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if ((rows_[i] >> j) & 1U) t.rows_[j] |= std::uint64_t{1} << i;
        }
    }
    return t;
}

std::size_t BitMatrix::column_sum(std::size_t col) const {
    if (col >= n_) throw std::out_of_range("BitMatrix::column_sum");
    std::size_t sum = 0;
    for (auto r : rows_) sum += (r >> col) & 1U;
    return sum;
}

namespace detail {

bool det_rows(std::uint64_t* rows, std::size_t n) noexcept {
    for (std::size_t col = 0; col < n; ++col) {
        const auto bit = std::uint64_t{1} << col;
        std::size_t pivot = col;
        while (pivot < n && !(rows[pivot] & bit)) ++pivot;
        if (pivot == n) return false;
        std::swap(rows[col], rows[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (rows[r] & bit) rows[r] ^= rows[col];
        }
    }
    return true;
}

} // namespace detail

bool det_gf2(const BitMatrix& m) {
    std::array<std::uint64_t, kMaxDimension> work{};
    std::ranges::copy(m.rows(), work.begin());
    return detail::det_rows(work.data(), m.size());
}

bool principal_minor_mask(const BitMatrix& m, std::uint64_t subset) {
    const std::size_t n = m.size();
    if (subset == 0) throw std::invalid_argument("principal_minor: empty index set");
    if (subset & ~row_mask(n)) throw std::invalid_argument("principal_minor: index out of range");

    // Compress the selected rows and columns into a k x k matrix.
    std::array<std::uint64_t, kMaxDimension> work{};
    std::size_t k = 0;
    for (std::uint64_t rs = subset; rs; rs &= rs - 1) {
        const auto r = static_cast<std::size_t>(std::countr_zero(rs));
        const auto row = m.row_bits(r);
        std::uint64_t packed = 0;
        std::size_t c = 0;
        for (std::uint64_t cs = subset; cs; cs &= cs - 1, ++c) {
            packed |= ((row >> std::countr_zero(cs)) & 1U) << c;
        }
        work[k++] = packed;
    }
    return detail::det_rows(work.data(), k);
}

bool principal_minor(const BitMatrix& m, std::span<const std::size_t> indices) {
    if (indices.empty()) throw std::invalid_argument("principal_minor: empty index set");
    std::uint64_t subset = 0;
    for (auto i : indices) {
        if (i >= m.size()) {
            throw std::invalid_argument("principal_minor: index " + std::to_string(i) +
                                        " out of range for dimension " +
                                        std::to_string(m.size()));
        }
        subset |= std::uint64_t{1} << i;
    }
    return principal_minor_mask(m, subset);
}

bool principal_minor(const BitMatrix& m, std::initializer_list<std::size_t> indices) {
    return principal_minor(m, std::span<const std::size_t>(indices.begin(), indices.size()));
}

bool is_in_Mn(const BitMatrix& m) {
    const std::size_t n = m.size();
    // Cheap necessary condition first: all 1x1 minors.
    for (std::size_t i = 0; i < n; ++i) {
        if (!((m.row_bits(i) >> i) & 1U)) return false;
    }
    const std::uint64_t full = row_mask(n);
    for (std::uint64_t s = 1; s != 0 && s <= full; ++s) {
        if (!principal_minor_mask(m, s)) return false;
        if (s == full) break;
    }
    return true;
}

bool is_orientable_characteristic(const BitMatrix& m) {
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m.column_sum(j) % 2 == 0) return false;
    }
    return true;
}

} // namespace smallcover
