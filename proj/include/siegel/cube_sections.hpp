#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "siegel/detail/random.hpp"
#include "siegel/rational.hpp"
#include "siegel/sigma.hpp"
#include "siegel/sinc_integral.hpp"

namespace siegel {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// A nonzero direction in R^n. Only the direction matters to the section
// machinery; norms are kept for normalization and homogeneity bookkeeping.
struct Direction {
    std::vector<double> coords;
    int n = 0;
    double euclidean_norm = 0.0;
    double max_norm = 0.0;
    std::vector<int> zero_mask; // indices of exactly-zero components
};

inline Direction make_direction(std::vector<double> coords) {
    if (coords.size() < 2) throw std::invalid_argument("Direction: need n >= 2");
    Direction d;
    d.n = static_cast<int>(coords.size());
    double sq = 0.0, mx = 0.0;
    for (int i = 0; i < d.n; ++i) {
        double x = coords[static_cast<std::size_t>(i)];
        if (!std::isfinite(x)) throw std::invalid_argument("Direction: non-finite component");
        sq += x * x;
        mx = std::max(mx, std::fabs(x));
        if (x == 0.0) d.zero_mask.push_back(i);
    }
    if (mx == 0.0) throw std::invalid_argument("Direction: zero vector");
    d.coords = std::move(coords);
    d.euclidean_norm = std::sqrt(sq);
    d.max_norm = mx;
    return d;
}

enum class VolumeMethod { quadrature, monte_carlo, vertex_identity };

struct SectionVolume {
    Direction direction;
    double value = 0.0;
    VolumeMethod method = VolumeMethod::quadrature;
    double error_estimate = 0.0;
};

namespace detail {

// Components below this fraction of the largest are dropped before
// integrating: the integrand is flat out to t ~ 1/s_i and quadrature cost
// explodes. The induced error is accounted for in the estimate.
inline constexpr double kTinyComponentRatio = 1e-9;

struct ReducedDirection {
    std::vector<double> unit;   // |.|_2 = 1, all components > 0, sorted
    int dropped = 0;            // zero or tiny components removed
    double dropped_mass = 0.0;  // sum of dropped |s_i| relative to the unit vector
};

// Zero/tiny components reduce the section to a lower-dimensional cube (a
// prism contributes a factor 2 per dropped coordinate). Sorting the
// magnitudes makes permutation/sign symmetry exact in the output.
inline ReducedDirection reduce_direction(const Direction& d) {
    ReducedDirection r;
    std::vector<double> kept;
    double cutoff = kTinyComponentRatio * d.max_norm;
    double dropped_sum = 0.0;
    for (double x : d.coords) {
        double ax = std::fabs(x);
        if (ax <= cutoff) {
            ++r.dropped;
            dropped_sum += ax;
        } else {
            kept.push_back(ax);
        }
    }
    std::sort(kept.begin(), kept.end());
    double sq = 0.0;
    for (double x : kept) sq += x * x;
    double inv = 1.0 / std::sqrt(sq);
    for (double& x : kept) x *= inv;
    r.unit = std::move(kept);
    r.dropped_mass = dropped_sum * inv;
    return r;
}

} // namespace detail

// vol_{n-1}(s-perp intersect [-1,1]^n) = (2^n/pi) int_0^inf prod sinc(s_i t) dt
// for a unit vector s. Absolute error <= tol (plus the reported allowance for
// dropped tiny components).
inline SectionVolume section_volume(const Direction& s, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("section_volume: tol must be positive");
    detail::ReducedDirection red = detail::reduce_direction(s);
    const int m = static_cast<int>(red.unit.size());
    const double prism = std::ldexp(1.0, red.dropped); // 2 per dropped coordinate

    SectionVolume out;
    out.direction = s;
    out.method = VolumeMethod::quadrature;

    if (m == 0) throw std::invalid_argument("section_volume: zero direction");
    if (m == 1) {
        // the section through a coordinate axis: a single point in 1-D,
        // int sinc = pi/2 exactly
        out.value = prism;
        out.error_estimate = 0.0;
        return out;
    }

    const double scale = prism * std::ldexp(1.0, m) / kPi;
    SincIntegral integral;
    try {
        integral = sinc_product_integral(red.unit, tol / scale);
    } catch (const convergence_error& e) {
        throw convergence_error("section_volume: tolerance not met", tol, scale * e.achieved());
    }
    out.value = scale * integral.value;
    out.error_estimate = scale * integral.error_bound;
    if (red.dropped_mass > 0.0) {
        // each dropped component s_i flattens sinc(s_i t) to 1 on [0, T];
        // the defect is below (s_i T)^2/6 of the retained mass
        double t = integral.truncation;
        out.error_estimate += out.value * (red.dropped_mass * t) * (red.dropped_mass * t) / 6.0;
    }
    return out;
}

// The section orthogonal to the main diagonal: vol = 2^{n-1} sqrt(n) sigma_n,
// returned exactly as (coefficient, radicand).
struct VertexSectionVolume {
    Rational coefficient; // 2^{n-1} sigma_n
    int radicand = 1;     // the n under the square root

    double to_double() const { return coefficient.to_double() * std::sqrt(static_cast<double>(radicand)); }
};

inline VertexSectionVolume vertex_section_volume(int n) {
    if (n < 2) throw std::invalid_argument("vertex_section_volume: n must be >= 2");
    VertexSectionVolume v;
    v.coefficient = Rational(pow2(static_cast<unsigned long>(n - 1))) * sigma_exact(n);
    v.radicand = n;
    return v;
}

// Independent slab estimator: fraction of uniform cube samples within
// euclidean distance eps of the hyperplane, scaled by the slab volume.
// error_estimate is three binomial standard deviations; the O(eps^2)
// curvature bias is not included (central symmetry cancels the O(eps) term).
inline SectionVolume section_volume_mc(const Direction& s, long samples,
                                       double slab_half_width, std::uint64_t seed) {
    if (samples < 10000)
        throw std::invalid_argument("section_volume_mc: need at least 1e4 samples");
    if (!(slab_half_width > 0.0) || slab_half_width >= 1.0)
        throw std::invalid_argument("section_volume_mc: degenerate slab half-width");

    const int n = s.n;
    std::vector<double> unit(s.coords);
    for (double& x : unit) x /= s.euclidean_norm;

    std::mt19937_64 gen(seed);
    long hits = 0;
    for (long i = 0; i < samples; ++i) {
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += unit[static_cast<std::size_t>(j)] * detail::uniform_pm1(gen);
        if (std::fabs(dot) <= slab_half_width) ++hits;
    }

    double p = static_cast<double>(hits) / static_cast<double>(samples);
    double cube_volume = std::ldexp(1.0, n);
    double slab_factor = 1.0 / (2.0 * slab_half_width);
    SectionVolume out;
    out.direction = s;
    out.method = VolumeMethod::monte_carlo;
    out.value = cube_volume * p * slab_factor;
    double sd = std::sqrt(std::max(p * (1.0 - p), 1.0 / static_cast<double>(samples)) /
                          static_cast<double>(samples));
    out.error_estimate = 3.0 * cube_volume * sd * slab_factor;
    return out;
}

// Distance function of the intersection body of the cube:
//   f(x) = |x|_2 / vol_{n-1}(x-perp intersect C),
// positively homogeneous of degree 1.
inline double intersection_body_distance(const Direction& x, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("intersection_body_distance: tol must be positive");
    // minimal central section of [-1,1]^n has volume 2^{n-1}, which turns a
    // result tolerance into a generous volume tolerance
    double vol_lower = std::ldexp(1.0, x.n - 1);
    double vol_tol = tol * vol_lower * vol_lower / x.euclidean_norm;
    SectionVolume vol = section_volume(x, vol_tol);
    return x.euclidean_norm / vol.value;
}

struct Lemma3Report {
    double lhs = 0.0;         // f(x / |x|_inf)
    Rational rhs;             // 1/(sigma_n 2^{n-1}), exact
    bool holds_within_tol = false;
};

// f(x/|x|_inf) <= f(1,...,1) = 1/(sigma_n 2^{n-1}), equality only at n = 2
// or at a vertex direction.
inline Lemma3Report verify_lemma3(const Direction& x, double tol) {
    Lemma3Report report;
    std::vector<double> scaled(x.coords);
    for (double& c : scaled) c /= x.max_norm;
    report.lhs = intersection_body_distance(make_direction(std::move(scaled)), tol * 0.5);
    report.rhs = Rational(1) / (sigma_exact(x.n) * Rational(pow2(static_cast<unsigned long>(x.n - 1))));
    report.holds_within_tol = report.lhs <= report.rhs.to_double() + tol;
    return report;
}

struct SincInequalityReport {
    double lhs = 0.0; // |s|_inf int prod sinc(s_i t) dt
    double rhs = 0.0; // int sinc^n t dt
    bool holds_within_tol = false;
};

// For unit s: |s|_inf int prod sinc(s_i t) >= int sinc^n t, both sides by
// quadrature. Zero components contribute unit factors to the product.
inline SincInequalityReport verify_sinc_inequality(const Direction& s, double tol) {
    if (std::fabs(s.euclidean_norm - 1.0) > 1e-12)
        throw std::invalid_argument("verify_sinc_inequality: direction must be a unit vector");
    if (tol <= 0.0) throw std::invalid_argument("verify_sinc_inequality: tol must be positive");

    std::vector<double> nonzero;
    for (double c : s.coords)
        if (std::fabs(c) > detail::kTinyComponentRatio * s.max_norm) nonzero.push_back(std::fabs(c));

    SincInequalityReport report;
    if (nonzero.size() <= 1) {
        // a coordinate direction: the product integral is pi/(2 s_max)
        report.lhs = s.max_norm * kPi / (2.0 * (nonzero.empty() ? s.max_norm : nonzero.front()));
    } else {
        report.lhs = s.max_norm * sinc_product_integral(nonzero, tol / (3.0 * s.max_norm)).value;
    }
    report.rhs = sinc_product_integral(std::vector<double>(s.coords.size(), 1.0), tol / 3.0).value;
    report.holds_within_tol = report.lhs >= report.rhs - tol;
    return report;
}

} // namespace siegel
