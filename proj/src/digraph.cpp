#include "smallcover/digraph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace smallcover {

Digraph::Digraph(std::size_t n) : n_(n), rows_(n, 0) {
    if (n > kMaxDimension) {
        throw std::invalid_argument("digraph vertex count " + std::to_string(n) +
                                    " exceeds " + std::to_string(kMaxDimension));
    }
}

Digraph::Digraph(std::size_t n, std::span<const Edge> edges) : Digraph(n) {
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") out of range for " + std::to_string(n) + " vertices");
        }
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        rows_[u] |= std::uint64_t{1} << v;
    }
}

Digraph::Digraph(std::size_t n, std::initializer_list<Edge> edges)
    : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Digraph Digraph::from_rows(std::size_t n, std::span<const std::uint64_t> rows) {
    if (rows.size() != n) throw std::invalid_argument("Digraph::from_rows: row count mismatch");
    Digraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i] & ~row_mask(n)) {
            throw std::invalid_argument("Digraph::from_rows: bits outside the vertex range");
        }
        if ((rows[i] >> i) & 1U) throw std::invalid_argument("loop at vertex " + std::to_string(i));
        g.rows_[i] = rows[i];
    }
    return g;
}

std::size_t Digraph::edge_count() const noexcept {
    std::size_t m = 0;
    for (auto r : rows_) m += static_cast<std::size_t>(std::popcount(r));
    return m;
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
    if (from >= n_ || to >= n_) throw std::out_of_range("Digraph::has_edge");
    return (rows_[from] >> to) & 1U;
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::uint64_t r = rows_[u]; r; r &= r - 1) {
            out.emplace_back(u, static_cast<std::size_t>(std::countr_zero(r)));
        }
    }
    return out;
}

BitMatrix adjacency_matrix(const Digraph& g) {
    return BitMatrix::from_rows(g.vertex_count(), g.rows());
}

bool is_acyclic(const Digraph& g) {
    return detail::rows_acyclic(g.vertex_count(), g.rows().data());
}

bool is_acyclic_dfs(const Digraph& g) {
    enum class Colour : unsigned char { white, grey, black };
    const std::size_t n = g.vertex_count();
    std::vector<Colour> colour(n, Colour::white);
    // Explicit stack of (vertex, unvisited out-neighbours).
    std::vector<std::pair<std::size_t, std::uint64_t>> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (colour[root] != Colour::white) continue;
        colour[root] = Colour::grey;
        stack.emplace_back(root, g.out_neighbours(root));
        while (!stack.empty()) {
            auto& [v, pending] = stack.back();
            if (pending == 0) {
                colour[v] = Colour::black;
                stack.pop_back();
                continue;
            }
            const auto w = static_cast<std::size_t>(std::countr_zero(pending));
            pending &= pending - 1;
            if (colour[w] == Colour::grey) return false;
            if (colour[w] == Colour::white) {
                colour[w] = Colour::grey;
                stack.emplace_back(w, g.out_neighbours(w));
            }
        }
    }
    return true;
}

std::size_t out_degree(const Digraph& g, std::size_t v) {
    if (v >= g.vertex_count()) throw std::out_of_range("out_degree: vertex " + std::to_string(v));
    return static_cast<std::size_t>(std::popcount(g.out_neighbours(v)));
}

std::size_t in_degree(const Digraph& g, std::size_t v) {
    if (v >= g.vertex_count()) throw std::out_of_range("in_degree: vertex " + std::to_string(v));
    std::size_t d = 0;
    for (auto r : g.rows()) d += (r >> v) & 1U;
    return d;
}

bool all_out_degrees_even(const Digraph& g) {
    return detail::rows_even_out_degrees(g.vertex_count(), g.rows().data());
}

std::uint64_t digraph_count(std::size_t n) {
    if (n > kMaxEnumerableVertices) {
        throw std::out_of_range("digraph_count: n = " + std::to_string(n) + " does not fit a 64-bit code");
    }
    return std::uint64_t{1} << (n * (n > 0 ? n - 1 : 0));
}

std::uint64_t encode(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kMaxEnumerableVertices) throw std::out_of_range("encode: too many vertices");
    if (n < 2) return 0;
    std::uint64_t code = 0;
    const std::size_t width = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t row = g.out_neighbours(i);
        const std::uint64_t low = row & ((std::uint64_t{1} << i) - 1);
        const std::uint64_t packed = low | ((row >> (i + 1)) << i);
        code |= packed << (i * width);
    }
    return code;
}

Digraph decode(std::size_t n, std::uint64_t code) {
    if (n > kMaxEnumerableVertices) throw std::out_of_range("decode: too many vertices");
    if (code >= digraph_count(n)) throw std::out_of_range("decode: code out of range");
    std::uint64_t rows[kMaxEnumerableVertices];
    detail::decode_rows(n, code, rows);
    return Digraph::from_rows(n, std::span<const std::uint64_t>(rows, n));
}

void check_enumeration_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw std::out_of_range("enumeration of n = " + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(cap) +
                                " (2^" + std::to_string(n * (n - 1)) + " digraphs)");
    }
    if (n > kMaxEnumerableVertices) {
        throw std::out_of_range("enumeration of n = " + std::to_string(n) +
                                " exceeds the hard limit of " +
                                std::to_string(kMaxEnumerableVertices) + " vertices");
    }
}

} // namespace smallcover
