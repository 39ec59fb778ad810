#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "smallcover/counting.hpp"
#include "smallcover/digraph.hpp"
#include "smallcover/gf2.hpp"

namespace smallcover {

// G -> A(G)^t + E_n. Total on digraphs; the image lies in M(n) exactly when G
// is acyclic.
BitMatrix phi(const Digraph& g);

// Inverse of phi: edge (i, j) iff M[j][i] = 1, i != j. Throws
// std::invalid_argument if a diagonal entry is 0.
Digraph phi_inverse(const BitMatrix& m);

// Largest n for the matrix-side oracles (2^{n(n-1)} unit-diagonal candidates,
// each tested against all 2^n - 1 principal minors).
inline constexpr std::size_t kMatrixOracleCap = 4;

struct BruteForceOptions {
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    unsigned jobs = 1;
};

// Tallies over a half-open range of digraph codes.
struct RangeTally {
    std::uint64_t acyclic = 0;
    std::uint64_t orientable = 0;  // acyclic with all out-degrees even

    friend bool operator==(const RangeTally&, const RangeTally&) = default;
};

RangeTally tally_code_range(std::size_t n, std::uint64_t first, std::uint64_t last);

// Splits [0, 2^{n(n-1)}) into `jobs` contiguous chunks counted on separate
// threads. The result does not depend on `jobs`.
RangeTally tally_all(std::size_t n, const BruteForceOptions& options = {});

BigCount count_acyclic_bruteforce(std::size_t n, const BruteForceOptions& options = {});
BigCount count_orientable_bruteforce(std::size_t n, const BruteForceOptions& options = {});

BigCount count_Mn_bruteforce(std::size_t n);
BigCount count_orientable_Mn_bruteforce(std::size_t n);

// The worked example: figure vertices 1,2,3,4 become 0,1,2,3, with edges
// 2->1, 2->3, 2->4, 1->4, 4->3.
Digraph figure1_graph();
BitMatrix figure1_matrix();

// Row-major n^2-bit key of a matrix (n <= 8).
std::uint64_t matrix_key(const BitMatrix& m);

struct BijectionCheck {
    std::size_t n = 0;
    std::uint64_t acyclic = 0;       // acyclic digraphs visited
    std::uint64_t image_size = 0;    // distinct phi images
    std::uint64_t members = 0;       // matrices in M(n), over all 2^{n^2}
    bool image_in_Mn = true;
    bool image_equals_Mn = false;
    // First witness of a failure, described in words.
    std::optional<std::string> counterexample;

    bool pass() const { return !counterexample && image_equals_Mn; }
};

// Exhaustive double enumeration: phi over all acyclic digraphs versus the
// principal-minor test over all n x n matrices. n <= kMatrixOracleCap.
BijectionCheck check_bijection(std::size_t n);

// Code of the first digraph (acyclic or not) where "all out-degrees even"
// and "phi(G) has odd column sums" disagree, if any. n <= kMatrixOracleCap.
std::optional<std::uint64_t> orientability_counterexample(std::size_t n);

} // namespace smallcover
