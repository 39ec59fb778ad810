#include "smallcover/correspondence.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

namespace smallcover {

BitMatrix phi(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    BitMatrix t = adjacency_matrix(g).transpose();
    std::vector<std::uint64_t> rows(t.rows().begin(), t.rows().end());
    // The diagonal of A(G) is zero, so adding E_n over GF(2) just sets it.
    for (std::size_t i = 0; i < n; ++i) rows[i] ^= std::uint64_t{1} << i;
    return BitMatrix::from_rows(n, rows);
}

Digraph phi_inverse(const BitMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.at(i, i)) {
            throw std::invalid_argument("phi_inverse: diagonal entry (" + std::to_string(i) + ", " +
                                        std::to_string(i) + ") is 0");
        }
    }
    BitMatrix t = m.transpose();
    std::vector<std::uint64_t> rows(t.rows().begin(), t.rows().end());
    for (std::size_t i = 0; i < n; ++i) rows[i] &= ~(std::uint64_t{1} << i);
    return Digraph::from_rows(n, rows);
}

RangeTally tally_code_range(std::size_t n, std::uint64_t first, std::uint64_t last) {
    if (n > kMaxEnumerableVertices) throw std::out_of_range("tally_code_range: n too large");
    last = std::min(last, digraph_count(n));
    RangeTally tally;
    std::array<std::uint64_t, kMaxEnumerableVertices> rows{};
    for (std::uint64_t code = first; code < last; ++code) {
        detail::decode_rows(n, code, rows.data());
        if (!detail::rows_acyclic(n, rows.data())) continue;
        ++tally.acyclic;
        if (detail::rows_even_out_degrees(n, rows.data())) ++tally.orientable;
    }
    return tally;
}

RangeTally tally_all(std::size_t n, const BruteForceOptions& options) {
    check_enumeration_cap(n, options.enumeration_cap);
    const std::uint64_t total = digraph_count(n);
    const std::uint64_t jobs = std::clamp<std::uint64_t>(options.jobs, 1, total);
    if (jobs == 1) return tally_code_range(n, 0, total);

    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    std::vector<std::future<RangeTally>> parts;
    for (std::uint64_t first = 0; first < total; first += chunk) {
        const std::uint64_t last = std::min(total, first + chunk);
        parts.push_back(std::async(std::launch::async, tally_code_range, n, first, last));
    }
    RangeTally sum;
    for (auto& p : parts) {
        const RangeTally t = p.get();
        sum.acyclic += t.acyclic;
        sum.orientable += t.orientable;
    }
    return sum;
}

BigCount count_acyclic_bruteforce(std::size_t n, const BruteForceOptions& options) {
    return BigCount(tally_all(n, options).acyclic);
}

BigCount count_orientable_bruteforce(std::size_t n, const BruteForceOptions& options) {
    return BigCount(tally_all(n, options).orientable);
}

namespace {

// Visits every unit-diagonal n x n matrix that lies in M(n), tested with the
// principal-minor definition.
template <class Visit>
void for_each_Mn(std::size_t n, Visit visit) {
    if (n > kMatrixOracleCap) {
        throw std::out_of_range("matrix oracle limited to n <= " + std::to_string(kMatrixOracleCap) +
                                ", got " + std::to_string(n));
    }
    // Off-diagonal entries reuse the digraph code layout; the diagonal is fixed
    // to 1 because every 1x1 minor must be 1.
    std::array<std::uint64_t, kMaxEnumerableVertices> rows{};
    const std::uint64_t total = digraph_count(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        detail::decode_rows(n, code, rows.data());
        for (std::size_t i = 0; i < n; ++i) rows[i] |= std::uint64_t{1} << i;
        const BitMatrix m = BitMatrix::from_rows(n, std::span<const std::uint64_t>(rows.data(), n));
        if (is_in_Mn(m)) visit(m);
    }
}

} // namespace

BigCount count_Mn_bruteforce(std::size_t n) {
    std::uint64_t count = 0;
    for_each_Mn(n, [&](const BitMatrix&) { ++count; });
    return BigCount(count);
}

BigCount count_orientable_Mn_bruteforce(std::size_t n) {
    std::uint64_t count = 0;
    for_each_Mn(n, [&](const BitMatrix& m) {
        if (is_orientable_characteristic(m)) ++count;
    });
    return BigCount(count);
}

} // namespace smallcover

namespace smallcover {

Digraph figure1_graph() {
    return Digraph(4, {{1, 0}, {1, 2}, {1, 3}, {0, 3}, {3, 2}});
}

BitMatrix figure1_matrix() {
    return BitMatrix{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 1}, {1, 1, 0, 1}};
}

std::uint64_t matrix_key(const BitMatrix& m) {
    const std::size_t n = m.size();
    if (n > kMaxEnumerableVertices) throw std::out_of_range("matrix_key: n too large");
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) key |= m.row_bits(i) << (i * n);
    return key;
}

BijectionCheck check_bijection(std::size_t n) {
    if (n > kMatrixOracleCap) {
        throw std::out_of_range("check_bijection limited to n <= " + std::to_string(kMatrixOracleCap));
    }
    BijectionCheck out;
    out.n = n;
    const std::uint64_t space = std::uint64_t{1} << (n * n);
    std::vector<bool> in_image(space, false);

    for (const Digraph& g : enumerate_acyclic(n, kMatrixOracleCap)) {
        ++out.acyclic;
        const BitMatrix m = phi(g);
        const std::uint64_t key = matrix_key(m);
        if (in_image[key]) {
            if (!out.counterexample) {
                out.counterexample = "phi not injective: digraph code " + std::to_string(encode(g)) +
                                     " collides at matrix key " + std::to_string(key);
            }
            continue;
        }
        in_image[key] = true;
        ++out.image_size;
        if (!is_in_Mn(m)) {
            out.image_in_Mn = false;
            if (!out.counterexample) {
                out.counterexample = "phi(G) not in M(n) for digraph code " + std::to_string(encode(g));
            }
        }
    }

    std::vector<std::uint64_t> rows(n);
    const std::uint64_t per_row = row_mask(n);
    for (std::uint64_t key = 0; key < space; ++key) {
        for (std::size_t i = 0; i < n; ++i) rows[i] = (key >> (i * n)) & per_row;
        if (!is_in_Mn(BitMatrix::from_rows(n, rows))) continue;
        ++out.members;
        if (!in_image[key] && !out.counterexample) {
            out.counterexample = "matrix key " + std::to_string(key) + " is in M(n) but not in the image";
        }
    }
    out.image_equals_Mn = out.image_in_Mn && out.members == out.image_size && !out.counterexample;
    return out;
}

std::optional<std::uint64_t> orientability_counterexample(std::size_t n) {
    for (const Digraph& g : enumerate_digraphs(n, kMatrixOracleCap)) {
        if (all_out_degrees_even(g) != is_orientable_characteristic(phi(g))) return encode(g);
    }
    return std::nullopt;
}

} // namespace smallcover
