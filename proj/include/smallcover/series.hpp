#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "smallcover/counting.hpp"

namespace smallcover {

using Rational = boost::multiprecision::cpp_rational;

// Truncated series sum_{n=0}^{N} a_n x^n / (n! 2^{C(n,2)}) ("chromatic" basis).
// Products in this basis follow
//   c_n = sum_k C(n,k) 2^{k(n-k)} a_k b_{n-k}.
class ChromSeries {
public:
    explicit ChromSeries(std::vector<Rational> coeffs);

    static ChromSeries zero(std::size_t order);
    static ChromSeries unit(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    // Ordinary power-series coefficient of x^n: a_n / (n! 2^{C(n,2)}).
    Rational plain_coefficient(std::size_t n) const;

    friend ChromSeries operator+(const ChromSeries& a, const ChromSeries& b);
    friend ChromSeries operator-(const ChromSeries& a, const ChromSeries& b);
    friend bool operator==(const ChromSeries&, const ChromSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

// Result order is min(A.order(), B.order()).
ChromSeries chrom_mul(const ChromSeries& a, const ChromSeries& b);

// Solves chrom_mul(Q, divisor) = numerator for Q by forward substitution.
// The divisor's constant term must be 1.
ChromSeries chrom_div(const ChromSeries& numerator, const ChromSeries& divisor);

// x -> s x, i.e. a_n -> a_n s^n.
ChromSeries substitute_scaled(const ChromSeries& a, const Rational& s);

ChromSeries F_series(std::size_t order);
ChromSeries R_series(std::size_t order);
// Coefficients O_1..O_N with constant term 0: the generating function of the
// closed-form sum, whose n = 0 term is empty. orientable_O(0) = 1 counts the
// empty digraph and is deliberately not used here.
ChromSeries O_series(std::size_t order);

// O(x) = (1 - F(-x)) / F(-x/2), solved coefficientwise. Constant term 0.
ChromSeries O_series_from_identity(std::size_t order);

// Plain coefficients of F' match those of F(x/2) at index n - 1 (n >= 1).
bool derivative_identity_holds(std::size_t n);

// Provider of R_n / O_n for identity checks. Defaults to the counting module;
// tests swap in corrupted values to exercise the failure path.
struct SequenceSource {
    std::function<BigCount(std::size_t)> r = robinson_R;
    std::function<BigCount(std::size_t)> o = orientable_O;
};

struct IdentityCheck {
    std::string identity;
    std::size_t order = 0;
    bool pass = true;
    // Smallest coefficient index where the two sides differ.
    std::optional<std::size_t> first_failure;
};

// Checks up to `order`:
//   F(-x) R(x) = 1
//   R(x/2) F(-x) + O(x) = R(x/2)
//   O(x) = (1 - F(-x)) / F(-x/2) with integral coefficients equal to O_n (n >= 1)
std::vector<IdentityCheck> verify_identities(std::size_t order, const SequenceSource& source = {});

} // namespace smallcover
