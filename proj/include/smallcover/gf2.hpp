#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace smallcover {

inline constexpr std::size_t kMaxDimension = 64;

// Square matrix over GF(2). Row i is a 64-bit word; bit j holds entry (i, j).
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n);
    BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::size_t n, std::span<const std::uint64_t> rows);

    std::size_t size() const noexcept { return n_; }
    bool at(std::size_t row, std::size_t col) const;
    std::uint64_t row_bits(std::size_t row) const { return rows_.at(row); }
    std::span<const std::uint64_t> rows() const noexcept { return rows_; }

    // Returns a copy with entry (row, col) set to `bit`.
    BitMatrix with(std::size_t row, std::size_t col, bool bit) const;
    BitMatrix transpose() const;

    // Integer sum of column `col` (not reduced mod 2).
    std::size_t column_sum(std::size_t col) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> rows_;
};

std::uint64_t row_mask(std::size_t n) noexcept;

bool det_gf2(const BitMatrix& m);

// Determinant of the principal submatrix on `indices`. Throws
// std::invalid_argument for an empty set or an index >= size().
bool principal_minor(const BitMatrix& m, std::span<const std::size_t> indices);
bool principal_minor(const BitMatrix& m, std::initializer_list<std::size_t> indices);

// Same, with the index set given as a bitmask (bit i selects index i).
bool principal_minor_mask(const BitMatrix& m, std::uint64_t subset);

// Membership in M(n): every principal minor equals 1. Checks all 2^n - 1
// subsets, so only usable for small n.
bool is_in_Mn(const BitMatrix& m);

// Orientability of the reduced characteristic matrix: every column has an
// odd number of ones.
bool is_orientable_characteristic(const BitMatrix& m);

namespace detail {

// Determinant of the n x n matrix held in `rows` (elimination happens in
// place on the caller's copy).
bool det_rows(std::uint64_t* rows, std::size_t n) noexcept;

} // namespace detail

} // namespace smallcover
