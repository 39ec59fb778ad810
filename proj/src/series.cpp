#include "smallcover/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace smallcover {

namespace {

BigCount factorial(std::size_t n) {
    BigCount f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

// C(n,k) 2^{k(n-k)}, the convolution weight.
BigCount convolution_weight(std::size_t n, std::size_t k) {
    return binomial(n, k) << (k * (n - k));
}

// First index where a and b differ, over the common order.
std::optional<std::size_t> first_difference(const ChromSeries& a, const ChromSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] != b[i]) return i;
    }
    return std::nullopt;
}

IdentityCheck make_check(std::string name, std::size_t order, std::optional<std::size_t> failure) {
    return IdentityCheck{std::move(name), order, !failure.has_value(), failure};
}

ChromSeries from_counts(std::size_t order, const std::function<BigCount(std::size_t)>& values) {
    std::vector<Rational> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c.emplace_back(values(n));
    return ChromSeries(std::move(c));
}

// The closed-form sum for O_n is empty at n = 0, and the generating-function
// identities need that constant term 0 (not the counting convention O_0 = 1).
ChromSeries orientable_series(std::size_t order, const std::function<BigCount(std::size_t)>& values) {
    std::vector<Rational> c{Rational(0)};
    c.reserve(order + 1);
    for (std::size_t n = 1; n <= order; ++n) c.emplace_back(values(n));
    return ChromSeries(std::move(c));
}

} // namespace

ChromSeries::ChromSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("ChromSeries needs at least a constant term");
}

ChromSeries ChromSeries::zero(std::size_t order) {
    return ChromSeries(std::vector<Rational>(order + 1, Rational(0)));
}

ChromSeries ChromSeries::unit(std::size_t order) {
    auto c = std::vector<Rational>(order + 1, Rational(0));
    c[0] = 1;
    return ChromSeries(std::move(c));
}

Rational ChromSeries::plain_coefficient(std::size_t n) const {
    const BigCount denom = factorial(n) << (n == 0 ? 0 : n * (n - 1) / 2);
    return coeffs_.at(n) / Rational(denom);
}

ChromSeries operator+(const ChromSeries& a, const ChromSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = a[n] + b[n];
    return ChromSeries(std::move(c));
}

ChromSeries operator-(const ChromSeries& a, const ChromSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = a[n] - b[n];
    return ChromSeries(std::move(c));
}

ChromSeries chrom_mul(const ChromSeries& a, const ChromSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational sum = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            if (a[k] == 0 || b[n - k] == 0) continue;
            sum += Rational(convolution_weight(n, k)) * a[k] * b[n - k];
        }
        c[n] = std::move(sum);
    }
    return ChromSeries(std::move(c));
}

ChromSeries chrom_div(const ChromSeries& numerator, const ChromSeries& divisor) {
    if (divisor[0] != 1) throw std::invalid_argument("chrom_div: divisor constant term must be 1");
    const std::size_t order = std::min(numerator.order(), divisor.order());
    std::vector<Rational> q(order + 1);
    // numerator_n = sum_{k<=n} w(n,k) q_k d_{n-k} and w(n,n) d_0 = 1.
    for (std::size_t n = 0; n <= order; ++n) {
        Rational rest = numerator[n];
        for (std::size_t k = 0; k < n; ++k) {
            rest -= Rational(convolution_weight(n, k)) * q[k] * divisor[n - k];
        }
        q[n] = std::move(rest);
    }
    return ChromSeries(std::move(q));
}

ChromSeries substitute_scaled(const ChromSeries& a, const Rational& s) {
    std::vector<Rational> c(a.order() + 1);
    Rational power = 1;
    for (std::size_t n = 0; n <= a.order(); ++n) {
        c[n] = a[n] * power;
        power *= s;
    }
    return ChromSeries(std::move(c));
}

ChromSeries F_series(std::size_t order) {
    return ChromSeries(std::vector<Rational>(order + 1, Rational(1)));
}

ChromSeries R_series(std::size_t order) { return from_counts(order, robinson_R); }

ChromSeries O_series(std::size_t order) { return orientable_series(order, orientable_O); }

ChromSeries O_series_from_identity(std::size_t order) {
    const ChromSeries f = F_series(order);
    const ChromSeries numerator = ChromSeries::unit(order) - substitute_scaled(f, Rational(-1));
    const ChromSeries divisor = substitute_scaled(f, Rational(-1, 2));
    return chrom_div(numerator, divisor);
}

bool derivative_identity_holds(std::size_t n) {
    if (n == 0) throw std::invalid_argument("derivative_identity_holds: n must be >= 1");
    const ChromSeries f = F_series(n);
    const ChromSeries half = substitute_scaled(f, Rational(1, 2));
    return Rational(n) * f.plain_coefficient(n) == half.plain_coefficient(n - 1);
}

std::vector<IdentityCheck> verify_identities(std::size_t order, const SequenceSource& source) {
    const ChromSeries f = F_series(order);
    const ChromSeries f_neg = substitute_scaled(f, Rational(-1));
    const ChromSeries r = from_counts(order, source.r);
    const ChromSeries o = orientable_series(order, source.o);
    const ChromSeries r_half = substitute_scaled(r, Rational(1, 2));

    std::vector<IdentityCheck> checks;
    checks.push_back(make_check("F(-x)R(x) = 1", order,
                                first_difference(chrom_mul(f_neg, r), ChromSeries::unit(order))));
    checks.push_back(make_check("R(x/2)F(-x) + O(x) = R(x/2)", order,
                                first_difference(chrom_mul(r_half, f_neg) + o, r_half)));

    const ChromSeries o_identity = O_series_from_identity(order);
    std::optional<std::size_t> failure;
    for (std::size_t n = 0; n <= order && !failure; ++n) {
        const Rational& c = o_identity[n];
        if (denominator(c) != 1 || c != o[n]) failure = n;
    }
    checks.push_back(make_check("O(x) = (1 - F(-x))/F(-x/2)", order, failure));
    return checks;
}

} // namespace smallcover
