#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <ranges>
#include <span>
#include <utility>
#include <vector>

#include "smallcover/gf2.hpp"

namespace smallcover {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple labeled digraph on vertices 0..n-1. Row v of the adjacency field is a
// bitmask of the out-neighbours of v; the diagonal is always clear.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n);
    // Duplicate edges collapse; loops and out-of-range endpoints throw.
    Digraph(std::size_t n, std::span<const Edge> edges);
    Digraph(std::size_t n, std::initializer_list<Edge> edges);

    static Digraph from_rows(std::size_t n, std::span<const std::uint64_t> rows);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept;
    bool has_edge(std::size_t from, std::size_t to) const;
    std::uint64_t out_neighbours(std::size_t v) const { return rows_.at(v); }
    std::span<const std::uint64_t> rows() const noexcept { return rows_; }

    // Edges in lexicographic (from, to) order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> rows_;
};

BitMatrix adjacency_matrix(const Digraph& g);

// Repeatedly strips vertices with no remaining out-edges.
bool is_acyclic(const Digraph& g);
// Three-colour depth-first search; independent check of is_acyclic.
bool is_acyclic_dfs(const Digraph& g);

std::size_t out_degree(const Digraph& g, std::size_t v);
std::size_t in_degree(const Digraph& g, std::size_t v);
bool all_out_degrees_even(const Digraph& g);

// ---------------------------------------------------------------------------
// Canonical encoding and enumeration.
//
// A digraph on n vertices is encoded by its n(n-1) off-diagonal adjacency bits
// taken in row-major order; the t-th off-diagonal position is bit t of the
// code (least significant first). Enumeration walks codes 0 .. 2^{n(n-1)} - 1.

inline constexpr std::size_t kDefaultEnumerationCap = 6;
// n(n-1) must fit in a 64-bit code.
inline constexpr std::size_t kMaxEnumerableVertices = 8;

std::uint64_t digraph_count(std::size_t n);  // 2^{n(n-1)}
std::uint64_t encode(const Digraph& g);
Digraph decode(std::size_t n, std::uint64_t code);

// Throws std::out_of_range when n exceeds `cap` or the hard ceiling.
void check_enumeration_cap(std::size_t n, std::size_t cap);

namespace detail {

// Fills rows[0..n) from a code; rows must have room for n entries.
inline void decode_rows(std::size_t n, std::uint64_t code, std::uint64_t* rows) noexcept {
    if (n < 2) {
        for (std::size_t i = 0; i < n; ++i) rows[i] = 0;
        return;
    }
    const std::size_t width = n - 1;
    const std::uint64_t field = (std::uint64_t{1} << width) - 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bits = (code >> (i * width)) & field;
        const std::uint64_t low = bits & ((std::uint64_t{1} << i) - 1);
        rows[i] = low | ((bits >> i) << (i + 1));
    }
}

inline bool rows_acyclic(std::size_t n, const std::uint64_t* rows) noexcept {
    std::uint64_t alive = row_mask(n);
    bool removed = true;
    while (alive && removed) {
        removed = false;
        for (std::uint64_t scan = alive; scan; scan &= scan - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(scan));
            if ((rows[v] & alive) == 0) {
                alive &= ~(std::uint64_t{1} << v);
                removed = true;
            }
        }
    }
    return alive == 0;
}

inline bool rows_even_out_degrees(std::size_t n, const std::uint64_t* rows) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        if (std::popcount(rows[i]) & 1) return false;
    }
    return true;
}

} // namespace detail

inline auto enumerate_digraphs(std::size_t n, std::size_t cap = kDefaultEnumerationCap) {
    check_enumeration_cap(n, cap);
    return std::views::iota(std::uint64_t{0}, digraph_count(n)) |
           std::views::transform([n](std::uint64_t code) { return decode(n, code); });
}

inline auto enumerate_acyclic(std::size_t n, std::size_t cap = kDefaultEnumerationCap) {
    return enumerate_digraphs(n, cap) |
           std::views::filter([](const Digraph& g) { return is_acyclic(g); });
}

} // namespace smallcover
