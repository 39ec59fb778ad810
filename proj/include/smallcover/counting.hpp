#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace smallcover {

// Exact nonnegative count (R_n, O_n, binomials).
using BigCount = boost::multiprecision::cpp_int;
// Exact signed integer for alternating partial sums.
using SignedBig = boost::multiprecision::cpp_int;

// Throws std::invalid_argument when k > n.
BigCount binomial(std::size_t n, std::size_t k);

// Number of labeled acyclic digraphs on n vertices:
//   R_n = sum_{k=1}^{n} (-1)^{k+1} C(n,k) 2^{k(n-k)} R_{n-k},  R_0 = 1.
BigCount robinson_R(std::size_t n);

// Number of labeled acyclic digraphs on n vertices whose out-degrees are all
// even (orientable small covers over the n-cube):
//   O_n = sum_{k=1}^{n} (-1)^{k+1} C(n,k) 2^{(k-1)(n-k)} R_{n-k},  O_0 = 1.
BigCount orientable_O(std::size_t n);

// Direct evaluation without the shared memo; used to cross-check the cache.
std::vector<BigCount> robinson_R_values(std::size_t max_n);
std::vector<BigCount> orientable_O_values(std::size_t max_n);

struct SequenceRow {
    std::size_t n;
    BigCount r;
    BigCount o;
};

std::vector<SequenceRow> sequence_table(std::size_t max_n);

// Grow-only table of R_0..R_m shared by robinson_R/orientable_O. Fills are
// serialized; every stored value is final.
class RobinsonMemo {
public:
    BigCount get(std::size_t n);
    std::size_t filled() const;

private:
    mutable std::mutex mutex_;
    std::vector<BigCount> values_{BigCount(1)};
};

RobinsonMemo& shared_robinson_memo();

} // namespace smallcover
