#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "hypergrowth/errors.hpp"
#include "hypergrowth/exact_ratio.hpp"
#include "hypergrowth/fibonacci.hpp"
#include "hypergrowth/recurrence.hpp"

namespace hypergrowth {

// Working precision for real-valued reporting. Everything exact stays in
// bigint/exact_ratio; reals only appear in limits and continuum geometry.
using real = boost::multiprecision::cpp_dec_float_50;

inline constexpr int working_digits = std::numeric_limits<real>::digits10;

struct golden_constants {
    real phi;    // (1 + sqrt 5) / 2
    real psi;    // (1 - sqrt 5) / 2
    real sqrt5;  // phi - psi
};

inline const golden_constants& golden() {
    static const golden_constants g = [] {
        const real s = sqrt(real(5));
        return golden_constants{(1 + s) / 2, (1 - s) / 2, s};
    }();
    return g;
}

inline real pi_value() {
    static const real pi = 2 * acos(real(0));
    return pi;
}

/// A(r)/P(r) as a reduced exact rational; the common factor 7 cancels, so
/// this equals (4 F(2r-2) + 3 F(2r-3) - 2) / F(2r).
inline exact_ratio iso_ratio(std::int64_t r) {
    if (r < 1) throw invalid_radius("iso_ratio requires r >= 1, got " + std::to_string(r));
    return {area_closed(r), perimeter_closed(r)};
}

struct iso_bound_entry {
    std::int64_t r = 0;
    exact_ratio ratio;
    bool within_bound = true;  // A(r) <= 7 P(r), exactly
};

struct iso_bound_report {
    std::vector<iso_bound_entry> entries;
    exact_ratio max_ratio;
    bool all_within = true;
    bool monotone_nondecreasing = true;  // observed, not asserted
};

/// Exact verification that A(r) <= 7 P(r) for r = 1..r_max, by integer
/// cross multiplication only. Also reports the largest ratio attained and
/// whether the sequence was observed to be monotone.
inline iso_bound_report iso_bound_check(std::int64_t r_max) {
    if (r_max < 1) throw invalid_radius("iso_bound_check requires r_max >= 1");
    iso_bound_report report;
    const exact_ratio seven{7, 1};
    for (std::int64_t r = 1; r <= r_max; ++r) {
        iso_bound_entry entry;
        entry.r = r;
        entry.ratio = iso_ratio(r);
        entry.within_bound = entry.ratio <= seven;
        report.all_within = report.all_within && entry.within_bound;
        if (r == 1) {
            report.max_ratio = entry.ratio;
        } else {
            if (entry.ratio < report.max_ratio) report.monotone_nondecreasing = false;
            if (report.max_ratio < entry.ratio) report.max_ratio = entry.ratio;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace detail {

// Round a positive real to `digits` significant decimal digits.
inline real round_to_digits(const real& value, int digits) {
    std::ostringstream oss;
    oss.precision(digits);
    oss << std::scientific << value;
    return real(oss.str());
}

} // namespace detail

/// iso_ratio(r) evaluated as a real to the requested number of significant
/// digits. Converges to sqrt 5 as r grows.
inline real iso_limit_estimate(std::int64_t r, int digits = working_digits) {
    if (digits < 1 || digits > working_digits)
        throw precision_exhausted("requested " + std::to_string(digits) + " digits, working precision is " +
                                  std::to_string(working_digits));
    const real value = iso_ratio(r).to_real<real>();
    return digits == working_digits ? value : detail::round_to_digits(value, digits);
}

/// Dominant eigenvalue of the transfer matrix: the per-layer growth factor
/// of the boundary. The characteristic polynomial is x^2 - (n-4) x + 1, so
/// the value is ((n-4) + sqrt((n-4)^2 - 4)) / 2; n = 6 gives 1 (polynomial,
/// not exponential, growth).
inline real growth_rate(std::int64_t n) {
    if (n < 6) throw invalid_n("growth_rate requires n >= 6, got " + std::to_string(n));
    const real t = real(n - 4);
    return (t + sqrt(t * t - 4)) / 2;
}

struct binet_entry {
    std::int64_t r = 0;
    bigint exact;
    bigint rounded_closed_form;
    bool match = true;
};

struct binet_report {
    std::vector<binet_entry> entries;
    bool all_match = true;
};

/// Checks round((phi^r - psi^r) / sqrt 5) against the exact recurrence for
/// r = 1..r_max. The denominator is phi - psi = sqrt 5 (F(1) = 1 forces it).
inline binet_report binet_check(std::int64_t r_max) {
    if (r_max < 1) throw invalid_radius("binet_check requires r_max >= 1");
    // phi^r needs about 0.209 r digits; keep a wide margin for the rounding.
    if (real(r_max) * log10(golden().phi) > real(working_digits - 10))
        throw precision_exhausted("binet_check at r_max = " + std::to_string(r_max) +
                                  " cannot separate adjacent integers at " +
                                  std::to_string(working_digits) + " digits");
    binet_report report;
    const auto& g = golden();
    for (std::int64_t r = 1; r <= r_max; ++r) {
        binet_entry entry;
        entry.r = r;
        entry.exact = fibonacci(r);
        const real value = (pow(g.phi, static_cast<int>(r)) - pow(g.psi, static_cast<int>(r))) / g.sqrt5;
        entry.rounded_closed_form = static_cast<bigint>(floor(value + real(0.5)));
        entry.match = entry.exact == entry.rounded_closed_form;
        report.all_match = report.all_match && entry.match;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

/// Metric data of the equilateral triangle tiling the hyperbolic plane with
/// n triangles per vertex (n >= 7).
struct tiling_continuum {
    std::int64_t n = 0;
    real triangle_angle;              // 2 pi / n
    real triangle_area;               // pi - 3 * angle = pi (n-6) / n, curvature -1
    real side_length;                 // cosh s = cos(angle) / (1 - cos(angle))
    real hyperbolic_area_scale;       // per-triangle area, pi (n-6) / n
    real euclidean_area_scale;        // sqrt(3) / 4 for the unit-side model
};

/// Computes angle, area and side length, and round-trips the side through
/// the hyperbolic law of cosines as a self check: the angle recovered from
/// the side must come back as 2 pi / n.
inline tiling_continuum continuum_metrics(std::int64_t n) {
    if (n < 7) throw invalid_n("continuum_metrics requires n >= 7, got " + std::to_string(n));
    tiling_continuum c;
    c.n = n;
    c.triangle_angle = 2 * pi_value() / n;
    c.triangle_area = pi_value() - 3 * c.triangle_angle;
    const real cos_angle = cos(c.triangle_angle);
    const real cosh_side = cos_angle / (1 - cos_angle);
    c.side_length = acosh(cosh_side);
    c.hyperbolic_area_scale = c.triangle_area;
    c.euclidean_area_scale = sqrt(real(3)) / 4;

    // Law of cosines for an equilateral triangle with angle a and side s:
    // cos a = -cos^2 a + sin^2 a cosh s. Recover a from s and compare.
    const real q = 1 + cosh_side;
    const real recovered = acos((-1 + sqrt(1 + 4 * q * cosh_side)) / (2 * q));
    if (abs(recovered - c.triangle_angle) > real("1e-40"))
        throw internal_error("law-of-cosines round trip failed for n = " + std::to_string(n));
    return c;
}

enum class geometry_kind { hyperbolic, euclidean };

/// |D(r)| for the n=7 disk in the chosen metric model: the triangle count
/// scaled by pi/7 (hyperbolic tiles) or sqrt(3)/4 (Euclidean unit tiles).
inline real scaled_area(std::int64_t r, geometry_kind kind) {
    if (r < 1) throw invalid_radius("scaled_area requires r >= 1, got " + std::to_string(r));
    const real a(area_closed(r));
    if (kind == geometry_kind::hyperbolic) return a * pi_value() / 7;
    return a * sqrt(real(3)) / 4;
}

} // namespace hypergrowth
