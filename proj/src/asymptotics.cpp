#include "smallcover/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace smallcover {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v)) {
            carry_ += (sum_ - t) + v;
        } else {
            carry_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

double finite_or_throw(double v, const char* what) {
    if (!std::isfinite(v)) throw std::domain_error(std::string(what) + ": non-finite result");
    return v;
}

} // namespace

double eval_F(double x, std::size_t truncation) {
    if (!std::isfinite(x)) throw std::domain_error("eval_F: non-finite argument");
    CompensatedSum sum;
    double term = 1.0;
    sum.add(term);
    for (std::size_t n = 1; n <= truncation; ++n) {
        // term_n = term_{n-1} * x / (n 2^{n-1})
        term = std::ldexp(term * x / static_cast<double>(n), -static_cast<int>(n - 1));
        if (term == 0.0) break;
        sum.add(term);
    }
    return finite_or_throw(sum.value(), "eval_F");
}

AlphaSearch locate_alpha(std::size_t truncation, double tolerance) {
    if (truncation < 25) {
        throw std::invalid_argument("find_alpha: truncation must be >= 25, got " +
                                    std::to_string(truncation));
    }
    if (!(tolerance >= 1e-14)) throw std::invalid_argument("find_alpha: tolerance must be >= 1e-14");

    double x = kAlphaInitialGuess;
    for (int it = 1; it <= kMaxNewtonIterations; ++it) {
        const double derivative = eval_F(x / 2.0, truncation);
        if (std::fabs(derivative) < 1e-12) {
            throw std::runtime_error("find_alpha: derivative vanished at x = " + std::to_string(x));
        }
        const double step = eval_F(x, truncation) / derivative;
        x -= step;
        if (std::fabs(step) < tolerance) {
            if (!(x > -1.6 && x < -1.4)) {
                throw std::runtime_error("find_alpha: converged outside (-1.6, -1.4) at " +
                                         std::to_string(x));
            }
            if (std::fabs(eval_F(x, truncation)) >= 10.0 * tolerance) {
                throw std::runtime_error("find_alpha: residual too large at converged point");
            }
            return {x, it};
        }
    }
    throw std::runtime_error("find_alpha: no convergence within " +
                             std::to_string(kMaxNewtonIterations) + " iterations");
}

double find_alpha(std::size_t truncation, double tolerance) {
    return locate_alpha(truncation, tolerance).alpha;
}

AsymptoticConstants compute_constants(std::size_t truncation, double tolerance) {
    const AlphaSearch root = locate_alpha(truncation, tolerance);
    const double alpha = root.alpha;
    const double f_half = eval_F(alpha / 2.0, truncation);
    if (std::fabs(f_half) < 1e-12) throw std::runtime_error("compute_constants: F(alpha/2) vanishes");
    const double one_minus_f2 = 1.0 - eval_F(2.0 * alpha, truncation);

    AsymptoticConstants c;
    c.alpha = alpha;
    c.C = -1.0 / (alpha * f_half);
    c.K = -one_minus_f2 / (alpha * f_half);
    c.ratio_factor = c.K / c.C;
    c.ratio_closed_form = one_minus_f2;
    c.truncation = truncation;
    c.tolerance = tolerance;
    c.iterations = root.iterations;
    return c;
}

double log_factorial(std::size_t n) {
    CompensatedSum sum;
    for (std::size_t k = 2; k <= n; ++k) sum.add(std::log(static_cast<double>(k)));
    return sum.value();
}

namespace {

double log_estimate(std::size_t n, double prefactor, double base_inverse) {
    const double nd = static_cast<double>(n);
    return std::log(prefactor) + nd * (nd - 1.0) / 2.0 * std::numbers::ln2 + log_factorial(n) +
           nd * std::log(base_inverse);
}

} // namespace

double asymptotic_log_R(std::size_t n, const AsymptoticConstants& c) {
    return log_estimate(n, c.C, -1.0 / c.alpha);
}

double asymptotic_log_O(std::size_t n, const AsymptoticConstants& c) {
    return log_estimate(n, c.K, -1.0 / (2.0 * c.alpha));
}

double ratio_estimate(std::size_t n, const AsymptoticConstants& c) {
    return std::ldexp(c.ratio_factor, -static_cast<int>(n));
}

double log_big(const BigCount& value) {
    if (value <= 0) throw std::domain_error("log_big: argument must be positive");
    const std::size_t bits = boost::multiprecision::msb(value) + 1;
    if (bits <= 60) return std::log(value.convert_to<double>());
    // Keep the top 60 bits; the rest only affects digits beyond double precision.
    const std::size_t shift = bits - 60;
    const BigCount top = value >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

} // namespace smallcover
