#include "smallcover/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smallcover {

namespace {

// One step of the Robinson recurrence given R_0..R_{n-1}. `shift_fn(k)` is the
// exponent of 2 in term k; the two formulas differ only there.
template <class ShiftFn>
BigCount alternating_sum(std::size_t n, const std::vector<BigCount>& r, ShiftFn shift_fn) {
    SignedBig sum = 0;
    BigCount choose = 1;  // C(n, k), updated multiplicatively
    for (std::size_t k = 1; k <= n; ++k) {
        choose = choose * (n - k + 1) / k;
        SignedBig term = choose * r[n - k];
        term <<= shift_fn(k);
        if (k % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if (sum < 0) throw std::logic_error("alternating sum went negative at n = " + std::to_string(n));
    return sum;
}

BigCount robinson_step(std::size_t n, const std::vector<BigCount>& r) {
    return alternating_sum(n, r, [n](std::size_t k) { return k * (n - k); });
}

BigCount orientable_step(std::size_t n, const std::vector<BigCount>& r) {
    return alternating_sum(n, r, [n](std::size_t k) { return (k - 1) * (n - k); });
}

} // namespace

BigCount binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        throw std::invalid_argument("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                    "): k > n");
    }
    k = std::min(k, n - k);
    BigCount c = 1;
    for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

BigCount RobinsonMemo::get(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) values_.push_back(robinson_step(values_.size(), values_));
    return values_[n];
}

std::size_t RobinsonMemo::filled() const {
    std::lock_guard lock(mutex_);
    return values_.size();
}

RobinsonMemo& shared_robinson_memo() {
    static RobinsonMemo memo;
    return memo;
}

BigCount robinson_R(std::size_t n) { return shared_robinson_memo().get(n); }

BigCount orientable_O(std::size_t n) {
    if (n == 0) return 1;
    std::vector<BigCount> r;
    r.reserve(n);
    auto& memo = shared_robinson_memo();
    memo.get(n - 1);
    for (std::size_t k = 0; k < n; ++k) r.push_back(memo.get(k));
    return orientable_step(n, r);
}

std::vector<BigCount> robinson_R_values(std::size_t max_n) {
    std::vector<BigCount> r{BigCount(1)};
    for (std::size_t n = 1; n <= max_n; ++n) r.push_back(robinson_step(n, r));
    return r;
}

std::vector<BigCount> orientable_O_values(std::size_t max_n) {
    const auto r = robinson_R_values(max_n);
    std::vector<BigCount> o{BigCount(1)};
    for (std::size_t n = 1; n <= max_n; ++n) o.push_back(orientable_step(n, r));
    return o;
}

std::vector<SequenceRow> sequence_table(std::size_t max_n) {
    const auto r = robinson_R_values(max_n);
    std::vector<SequenceRow> rows;
    rows.reserve(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        rows.push_back({n, r[n], n == 0 ? BigCount(1) : orientable_step(n, r)});
    }
    return rows;
}

} // namespace smallcover
