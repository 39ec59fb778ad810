#pragma once

#include <cstddef>

#include "smallcover/counting.hpp"

namespace smallcover {

inline constexpr std::size_t kDefaultTruncation = 30;
inline constexpr double kDefaultNewtonTolerance = 1e-13;
inline constexpr double kAlphaInitialGuess = -1.5;
inline constexpr int kMaxNewtonIterations = 100;

// Partial sum of F(x) = sum x^n / (n! 2^{C(n,2)}) for n = 0..truncation, with
// compensated summation. Throws std::domain_error for non-finite x or result.
double eval_F(double x, std::size_t truncation = kDefaultTruncation);

struct AlphaSearch {
    double alpha = 0.0;
    int iterations = 0;
};

// Newton's method for the negative zero of F near -1.488, using F'(x) = F(x/2).
// Requires truncation >= 25 and tolerance >= 1e-14; throws std::runtime_error
// when the iteration fails to converge or leaves (-1.6, -1.4).
AlphaSearch locate_alpha(std::size_t truncation = kDefaultTruncation,
                         double tolerance = kDefaultNewtonTolerance);
double find_alpha(std::size_t truncation = kDefaultTruncation,
                  double tolerance = kDefaultNewtonTolerance);

struct AsymptoticConstants {
    double alpha = 0.0;
    double C = 0.0;             // R_n ~ C 2^{C(n,2)} n! (-1/alpha)^n
    double K = 0.0;             // O_n ~ K 2^{C(n,2)} n! (-1/(2 alpha))^n
    double ratio_factor = 0.0;  // K / C
    double ratio_closed_form = 0.0;  // 1 - F(2 alpha); must match ratio_factor
    std::size_t truncation = 0;
    double tolerance = 0.0;
    int iterations = 0;
};

AsymptoticConstants compute_constants(std::size_t truncation = kDefaultTruncation,
                                      double tolerance = kDefaultNewtonTolerance);

// ln n!, by direct summation of ln k.
double log_factorial(std::size_t n);

// Natural logs of the asymptotic estimates for R_n and O_n.
double asymptotic_log_R(std::size_t n, const AsymptoticConstants& c);
double asymptotic_log_O(std::size_t n, const AsymptoticConstants& c);

// Estimate of O_n / R_n: (K/C) / 2^n.
double ratio_estimate(std::size_t n, const AsymptoticConstants& c);

// Natural log of a positive big integer. Throws std::domain_error for 0.
double log_big(const BigCount& value);

} // namespace smallcover
