#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel/errors.hpp"

namespace siegel {

struct SincIntegral {
    double value = 0.0;
    double error_bound = 0.0; // rigorous bound: tail remainders + head estimate
    double truncation = 0.0;  // the T splitting numeric head from analytic tail
};

namespace detail {

inline double sinc(double x) {
    double ax = std::fabs(x);
    if (ax < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

inline double sinc_product(const std::vector<double>& c, double t) {
    double v = 1.0;
    for (double ci : c) v *= sinc(ci * t);
    return v;
}

// prod_i sin(c_i t) expanded as a finite exponential sum
//   P(t) = dc + sum_{w>0} 2 Re(a_w e^{iwt}),
// built by convolving one factor at a time: sin(ct) contributes
// e^{ict}/(2i) - e^{-ict}/(2i). Coincident frequencies merge, which keeps the
// equal-coefficient case linear in n instead of 2^n.
struct SincModes {
    double dc = 0.0;
    std::vector<std::pair<double, std::complex<double>>> positive; // (w, a_w), w > 0
    double merge_slack = 0.0; // max |w - w'| folded together during merging
};

inline SincModes decompose_sin_product(const std::vector<double>& c) {
    double scale = 0.0;
    for (double ci : c) scale += std::fabs(ci);
    const double eps = 1e-12 * scale;

    std::vector<std::pair<double, std::complex<double>>> modes{{0.0, {1.0, 0.0}}};
    std::vector<std::pair<double, std::complex<double>>> next;
    double slack = 0.0;
    for (double ci : c) {
        next.clear();
        next.reserve(modes.size() * 2);
        const std::complex<double> half_over_i(0.0, -0.5); // 1/(2i)
        for (const auto& [w, a] : modes) {
            next.emplace_back(w + ci, a * half_over_i);
            next.emplace_back(w - ci, -a * half_over_i);
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        modes.clear();
        for (const auto& [w, a] : next) {
            if (!modes.empty() && std::fabs(w - modes.back().first) <= eps) {
                slack = std::max(slack, std::fabs(w - modes.back().first));
                modes.back().second += a;
            } else {
                modes.emplace_back(w, a);
            }
        }
    }

    SincModes out;
    out.merge_slack = slack;
    for (const auto& [w, a] : modes) {
        if (std::abs(a) < 1e-300) continue;
        if (std::fabs(w) <= eps) out.dc += a.real();
        else if (w > 0) out.positive.emplace_back(w, a);
    }
    return out;
}

// int_T^inf e^{iwt} t^-m dt by repeated integration by parts:
//   I(m) = -e^{iwT} T^-m/(iw) + (m/(iw)) I(m+1),
// truncated where the rigorous remainder bound
//   prod_{l<J}(m+l)/|w|^J * T^{1-m-J}/(m+J-1)
// is smallest. J = 0 (no terms, plain envelope bound) is always admissible.
struct TailMode {
    std::complex<double> value{0.0, 0.0};
    double bound = 0.0;
};

inline TailMode tail_mode(double w, int m, double T) {
    TailMode best;
    best.bound = std::pow(T, 1.0 - m) / (m - 1);

    const std::complex<double> iw(0.0, w);
    std::complex<double> term = -std::exp(std::complex<double>(0.0, w * T)) *
                                std::pow(T, -static_cast<double>(m)) / iw;
    std::complex<double> acc(0.0, 0.0);
    double prod_over_w = 1.0;
    for (int j = 0; j < 14; ++j) {
        acc += term;
        prod_over_w *= (m + j) / std::fabs(w);
        double rem = prod_over_w * std::pow(T, -static_cast<double>(m + j)) / (m + j);
        if (rem < best.bound) {
            best.value = acc;
            best.bound = rem;
        }
        term *= static_cast<double>(m + j) / (iw * T);
    }
    return best;
}

// Analytic tail of int_T^inf prod sinc(c_i t) dt given the mode expansion.
// The DC component integrates exactly; each oscillating mode gets the IBP
// treatment above. Near-zero merged frequencies contribute a slack bound.
struct TailResult {
    double value = 0.0;
    double bound = 0.0;
};

inline TailResult sinc_tail(const SincModes& modes, int m, double prod_c, double T,
                            double freq_floor) {
    TailResult r;
    // shifting a frequency by delta costs at most
    //   int_T^inf min(2, delta*t) t^-m dt
    // per unit of coefficient mass (total mass across modes is <= 1)
    auto shift_cost = [&](double delta) {
        if (delta <= 0.0) return 0.0;
        if (m >= 3) return delta * std::pow(T, 2.0 - m) / (m - 2);
        return delta * (std::log(std::max(2.0, 2.0 / (delta * T))) + 2.0);
    };

    r.value = modes.dc * std::pow(T, 1.0 - m) / (m - 1);
    r.bound += shift_cost(modes.merge_slack);
    for (const auto& [w, a] : modes.positive) {
        double mag = 2.0 * std::abs(a);
        if (w < freq_floor) {
            // too slow to oscillate usefully: treat as DC with explicit error
            r.value += 2.0 * a.real() * std::pow(T, 1.0 - m) / (m - 1);
            r.bound += mag * shift_cost(w);
            continue;
        }
        TailMode tm = tail_mode(w, m, T);
        r.value += 2.0 * (a * tm.value).real();
        r.bound += mag * tm.bound;
    }
    r.value /= prod_c;
    r.bound /= prod_c;
    return r;
}

// Adaptive panel integration: 15-point Gauss-Legendre, refined by bisection
// until the whole-vs-halves discrepancy meets the per-length budget.
inline constexpr double kGlNodes[15] = {
    -0.98799251802048543, -0.93727339240070590, -0.84820658341042722,
    -0.72441773136017005, -0.57097217260853885, -0.39415134707756337,
    -0.20119409399743451,  0.0,                  0.20119409399743451,
     0.39415134707756337,  0.57097217260853885,  0.72441773136017005,
     0.84820658341042722,  0.93727339240070590,  0.98799251802048543};
inline constexpr double kGlWeights[15] = {
    0.03075324199611727, 0.07036604748810812, 0.10715922046717194,
    0.13957067792615432, 0.16626920581699392, 0.18616100001556221,
    0.19843148532711158, 0.20257824192556127, 0.19843148532711158,
    0.18616100001556221, 0.16626920581699392, 0.13957067792615432,
    0.10715922046717194, 0.07036604748810812, 0.03075324199611727};

inline double gl15(const std::vector<double>& c, double a, double b) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 15; ++i)
        s += kGlWeights[i] * sinc_product(c, mid + half * kGlNodes[i]);
    return s * half;
}

struct HeadResult {
    double value = 0.0;
    double estimate = 0.0;
};

inline void adapt_panel(const std::vector<double>& c, double a, double b, double whole,
                        double tol, int depth, HeadResult& r) {
    double mid = 0.5 * (a + b);
    double left = gl15(c, a, mid);
    double right = gl15(c, mid, b);
    double err = std::fabs(whole - (left + right));
    if (err <= tol || depth >= 28) {
        r.value += left + right;
        r.estimate += err;
        return;
    }
    adapt_panel(c, a, mid, left, tol * 0.5, depth + 1, r);
    adapt_panel(c, mid, b, right, tol * 0.5, depth + 1, r);
}

inline HeadResult sinc_head(const std::vector<double>& c, double T, double tol) {
    double wmax = 0.0;
    for (double ci : c) wmax += std::fabs(ci);
    double h = std::min(1.0, 4.0 / wmax);
    std::size_t panels = static_cast<std::size_t>(std::ceil(T / h));
    HeadResult r;
    for (std::size_t i = 0; i < panels; ++i) {
        double a = T * static_cast<double>(i) / static_cast<double>(panels);
        double b = T * static_cast<double>(i + 1) / static_cast<double>(panels);
        double whole = gl15(c, a, b);
        adapt_panel(c, a, b, whole, tol * (b - a) / T, 0, r);
    }
    return r;
}

} // namespace detail

// int_0^inf prod_i sinc(c_i t) dt with absolute error <= tol.
// Requires >= 2 strictly positive coefficients (one factor only converges
// conditionally and has the closed form pi/(2c)).
inline SincIntegral sinc_product_integral(const std::vector<double>& coefficients, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("sinc_product_integral: tol must be positive");
    if (coefficients.size() < 2)
        throw std::invalid_argument("sinc_product_integral: need at least two factors");
    for (double c : coefficients)
        if (!(c > 0.0) || !std::isfinite(c))
            throw std::invalid_argument("sinc_product_integral: coefficients must be positive finite");

    const int m = static_cast<int>(coefficients.size());
    double prod_c = 1.0;
    double freq_sum = 0.0;
    for (double c : coefficients) {
        prod_c *= c;
        freq_sum += c;
    }
    const double freq_floor = 1e-9 * freq_sum;

    detail::SincModes modes = detail::decompose_sin_product(coefficients);

    const double tail_budget = 0.5 * tol;
    const double t_max = 4.0e6;
    double T = 8.0;
    detail::TailResult tail = detail::sinc_tail(modes, m, prod_c, T, freq_floor);
    while (tail.bound > tail_budget && T < t_max) {
        T *= 2.0;
        tail = detail::sinc_tail(modes, m, prod_c, T, freq_floor);
    }
    if (tail.bound > tail_budget)
        throw convergence_error("sinc_product_integral: tail bound stuck at " +
                                    std::to_string(tail.bound) + " (requested " +
                                    std::to_string(tol) + ")",
                                tol, tail.bound);

    detail::HeadResult head = detail::sinc_head(coefficients, T, 0.5 * tol);

    SincIntegral out;
    out.value = head.value + tail.value;
    out.error_bound = head.estimate + tail.bound;
    out.truncation = T;
    return out;
}

} // namespace siegel
