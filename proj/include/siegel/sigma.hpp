#pragma once

#include <cmath>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "siegel/detail/parallel.hpp"
#include "siegel/rational.hpp"
#include "siegel/sinc_integral.hpp"

namespace siegel {

// sigma_n = (2/pi) int_0^inf sinc^n t dt, an exact rational for every n >= 1:
//   sigma_n = n/2^{n-1} * sum_{0 <= r < n/2} (-1)^r (n-2r)^{n-1} / (r! (n-r)!).
// Summed over the common denominator n! in exact integers; the terms alternate
// with huge cancellation, so floating intermediates are never used.
inline Rational sigma_exact(int n) {
    if (n < 1) throw std::invalid_argument("sigma_exact: n must be >= 1");
    const auto un = static_cast<unsigned long>(n);
    BigInt sum = 0;
    BigInt term;
    for (unsigned long r = 0; 2 * r < un; ++r) {
        term = binomial(un, r) * int_pow(un - 2 * r, un - 1);
        if (r % 2 == 0) sum += term;
        else sum -= term;
    }
    return Rational(n * sum, pow2(un - 1) * factorial(un));
}

// Shared table of sigma_1..sigma_n, grown on demand. Entries are independent,
// so missing ranges fill in parallel.
inline const std::vector<Rational>& sigma_table(int n_max) {
    if (n_max < 1) throw std::invalid_argument("sigma_table: n_max must be >= 1");
    static std::vector<Rational> table; // table[i] = sigma_{i+1}
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (static_cast<int>(table.size()) < n_max) {
        std::size_t old_size = table.size();
        table.resize(static_cast<std::size_t>(n_max));
        detail::parallel_for(table.size() - old_size, [&](std::size_t i) {
            table[old_size + i] = sigma_exact(static_cast<int>(old_size + i + 1));
        });
    }
    return table;
}

inline Rational sigma_cached(int n) {
    return sigma_table(n).at(static_cast<std::size_t>(n - 1));
}

// (2/pi) int_0^inf sinc^n t dt by quadrature, absolute error <= tol.
// n = 1 is excluded: the integral only converges conditionally there.
inline double sigma_quadrature(int n, double tol) {
    if (n < 2) throw std::invalid_argument("sigma_quadrature: n must be >= 2");
    if (tol <= 0.0) throw std::invalid_argument("sigma_quadrature: tol must be positive");
    const double scale = 2.0 / 3.14159265358979323846264338327950288;
    try {
        SincIntegral integral = sinc_product_integral(std::vector<double>(n, 1.0), tol / scale);
        return scale * integral.value;
    } catch (const convergence_error& e) {
        throw convergence_error("sigma_quadrature: tolerance not met", tol, scale * e.achieved());
    }
}

// sqrt(6/(pi n)): the asymptotic size of sigma_n.
inline double sigma_asymptotic(int n) {
    if (n < 1) throw std::invalid_argument("sigma_asymptotic: n must be >= 1");
    return std::sqrt(6.0 / (3.14159265358979323846264338327950288 * n));
}

struct SigmaValue {
    int n = 0;
    Rational exact;
    double float64 = 0.0;
};

inline SigmaValue sigma_value(int n) {
    SigmaValue v;
    v.n = n;
    v.exact = sigma_exact(n);
    v.float64 = v.exact.to_double();
    return v;
}

struct MonotonicityReport {
    bool holds = true;
    std::optional<int> first_failure; // smallest n with a violated inequality
};

// Exact check of 0 < sigma_{n+1} < sigma_n <= 1 for 2 <= n < n_max.
inline MonotonicityReport verify_sigma_monotonicity(int n_max) {
    if (n_max < 2) throw std::invalid_argument("verify_sigma_monotonicity: n_max must be >= 2");
    MonotonicityReport report;
    if (n_max == 2) return report; // empty range
    const auto& table = sigma_table(n_max);
    const Rational one(1);
    for (int n = 2; n < n_max; ++n) {
        const Rational& cur = table[static_cast<std::size_t>(n - 1)];
        const Rational& next = table[static_cast<std::size_t>(n)];
        if (!(next.sign() > 0 && next < cur && cur <= one)) {
            report.holds = false;
            report.first_failure = n;
            return report;
        }
    }
    return report;
}

enum class SqrtComparison { sigma_bound_better, sqrt_bound_better, equal };

// The two upper bounds on the Siegel constant c_n: the classical sqrt(n) and
// 1/sigma_n. Which wins is decided by comparing n*sigma_n^2 against 1 in
// exact integers (1/sigma_n < sqrt(n) iff n*sigma_n^2 > 1).
struct CnBound {
    int n = 0;
    std::optional<Rational> known_exact; // c_2 = 1, c_3 = 4/3, c_4 = 27/19
    Rational sigma_inverse;
    SqrtComparison sqrt_n_comparison = SqrtComparison::equal;
};

inline CnBound cn_bound(int n) {
    if (n < 2) throw std::invalid_argument("cn_bound: n must be >= 2");
    CnBound b;
    b.n = n;
    if (n == 2) b.known_exact = Rational(1);
    else if (n == 3) b.known_exact = Rational(4, 3);
    else if (n == 4) b.known_exact = Rational(27, 19);
    Rational sigma = sigma_exact(n);
    b.sigma_inverse = sigma.inverse();
    Rational n_sigma_sq = Rational(n) * sigma * sigma;
    int cmp = n_sigma_sq.compare(BigInt(1));
    b.sqrt_n_comparison = cmp > 0   ? SqrtComparison::sigma_bound_better
                          : cmp < 0 ? SqrtComparison::sqrt_bound_better
                                    : SqrtComparison::equal;
    return b;
}

} // namespace siegel
