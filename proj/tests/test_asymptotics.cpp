#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "smallcover/asymptotics.hpp"
#include "smallcover/counting.hpp"

using namespace smallcover;

namespace {

// Plain bisection on a sign change; shares nothing with the Newton path
// except eval_F.
double bisect_F(double lo, double hi) {
    double flo = eval_F(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = eval_F(mid);
        if ((fmid < 0) == (flo < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Straightforward term-by-term sum with pow/tgamma.
double naive_F(double x, int terms) {
    double s = 0;
    for (int n = 0; n <= terms; ++n) {
        s += std::pow(x, n) / (std::tgamma(n + 1.0) * std::pow(2.0, n * (n - 1) / 2.0));
    }
    return s;
}

} // namespace

TEST_CASE("eval_F examples") {
    CHECK(eval_F(0.0) == 1.0);
    CHECK(eval_F(1.0, 1) == 2.0);
    CHECK(eval_F(1.0, 0) == 1.0);
    CHECK(std::fabs(eval_F(-1.488)) < 1e-3);
    for (double x : {-4.0, -2.5, -1.0, 0.3, 1.7, 4.0}) {
        CAPTURE(x);
        CHECK(eval_F(x) == doctest::Approx(naive_F(x, 40)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(eval_F(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(eval_F(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("eval_F partial sums") {
    for (double x : {0.5, 1.0, 2.0, 3.5}) {
        for (std::size_t n = 0; n < 20; ++n) {
            const double a = eval_F(x, n);
            const double b = eval_F(x, n + 1);
            REQUIRE(b >= a);
            const double nn = static_cast<double>(n + 1);
            const double term = std::pow(x, nn) / (std::tgamma(nn + 1) * std::pow(2.0, nn * (nn - 1) / 2));
            REQUIRE(std::fabs((b - a) - term) <= 1e-15 * std::max(1.0, b));
        }
    }
    // beyond N = 25 the tail is negligible for |x| <= 4
    CHECK(eval_F(-4.0, 25) == eval_F(-4.0, 60));
    CHECK(eval_F(4.0, 25) == eval_F(4.0, 60));
}

TEST_CASE("find_alpha") {
    const AlphaSearch s = locate_alpha();
    CHECK(s.iterations > 0);
    CHECK(s.iterations <= kMaxNewtonIterations);
    const double alpha = s.alpha;
    CHECK(std::fabs(alpha - (-1.488)) < 5e-4);
    CHECK(std::fabs(eval_F(alpha)) < 1e-12);
    CHECK(std::fabs(bisect_F(-1.6, -1.4) - alpha) < 1e-10);
    CHECK(find_alpha() == alpha);
}

TEST_CASE("find_alpha does not depend on the truncation") {
    const double base = find_alpha(25);
    for (std::size_t n : {26u, 30u, 40u, 80u}) CHECK(std::fabs(find_alpha(n) - base) < 1e-13);
}

TEST_CASE("find_alpha preconditions") {
    CHECK_THROWS_AS(find_alpha(24), std::invalid_argument);
    CHECK_THROWS_AS(find_alpha(30, 1e-15), std::invalid_argument);
}

TEST_CASE("compute_constants") {
    const AsymptoticConstants c = compute_constants();
    CHECK(c.alpha < 0);
    CHECK(c.C > 0);
    CHECK(c.K > 0);
    CHECK(std::fabs(c.C - 1.739) < 5e-3);
    CHECK(std::fabs(c.K - 2.197) < 5e-3);
    CHECK(std::fabs(c.ratio_factor - 1.262) < 5e-3);
    CHECK(std::fabs(c.ratio_factor - c.ratio_closed_form) < 1e-12);
    CHECK(c.ratio_factor == doctest::Approx(c.K / c.C).epsilon(1e-15));
    CHECK(c.truncation == kDefaultTruncation);
    CHECK(c.tolerance == kDefaultNewtonTolerance);
    // Reference values from a 50-digit evaluation.
    CHECK(c.alpha == doctest::Approx(-1.4880785455997103).epsilon(1e-12));
    CHECK(c.C == doctest::Approx(1.7410611252932298).epsilon(1e-12));
    CHECK(c.K == doctest::Approx(2.1968137166201740).epsilon(1e-12));
}

TEST_CASE("log-space estimates") {
    const AsymptoticConstants c = compute_constants();
    // n = 1: C / |alpha|
    CHECK(std::exp(asymptotic_log_R(1, c)) == doctest::Approx(c.C / -c.alpha).epsilon(1e-14));
    CHECK(std::exp(asymptotic_log_R(1, c)) == doctest::Approx(1.1700).epsilon(1e-4));
    for (std::size_t n : {0u, 1u, 7u, 20u, 100u}) {
        const double diff = asymptotic_log_O(n, c) - asymptotic_log_R(n, c);
        CHECK(diff == doctest::Approx(std::log(c.ratio_factor) - n * std::log(2.0)).epsilon(1e-12));
    }
    const double r7 = std::exp(asymptotic_log_R(7, c));
    CHECK(std::fabs(r7 / 1138779265.0 - 1.0) < 0.15);
}

TEST_CASE("ratio_estimate") {
    const AsymptoticConstants c = compute_constants();
    CHECK(std::fabs(ratio_estimate(0, c) - 1.262) < 5e-3);
    CHECK(ratio_estimate(1, c) == doctest::Approx(0.6309).epsilon(1e-3));
    const double exact7 = 11226874.0 / 1138779265.0;
    CHECK(std::fabs(ratio_estimate(7, c) / exact7 - 1.0) < 0.01);
}

TEST_CASE("log_factorial and log_big") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)).epsilon(1e-15));
    CHECK(log_factorial(170) == doctest::Approx(std::lgamma(171.0)).epsilon(1e-14));
    CHECK(log_big(1) == 0.0);
    CHECK(log_big(robinson_R(7)) == doctest::Approx(std::log(1138779265.0)).epsilon(1e-15));
    const BigCount big = BigCount(3) << 5000;
    CHECK(log_big(big) == doctest::Approx(std::log(3.0) + 5000 * std::log(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(log_big(0), std::domain_error);
}

TEST_CASE("estimates converge towards the exact counts") {
    const AsymptoticConstants c = compute_constants();
    auto gap_R = [&](std::size_t n) { return std::fabs(std::exp(log_big(robinson_R(n)) - asymptotic_log_R(n, c)) - 1); };
    auto gap_O = [&](std::size_t n) { return std::fabs(std::exp(log_big(orientable_O(n)) - asymptotic_log_O(n, c)) - 1); };
    CHECK(gap_R(30) < gap_R(15));
    CHECK(gap_O(30) < gap_O(15));
    // Measured relative errors: about 9e-9 (R) and 7e-10 (O) at n = 15.
    CHECK(gap_R(15) < 1e-7);
    CHECK(gap_O(15) < 1e-8);
    CHECK(gap_R(30) < 1e-11);
}
