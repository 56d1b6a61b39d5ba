#pragma once

#include <cmath>
#include <complex>
#include <variant>

#include "hypergrowth/errors.hpp"

namespace hypergrowth {

using cplx = std::complex<double>;

inline constexpr double collinear_tolerance = 1e-12;

/// A point strictly inside the unit disk.
struct disk_point {
    double x = 0;
    double y = 0;

    cplx to_complex() const { return {x, y}; }
    static disk_point from_complex(cplx z) { return {z.real(), z.imag()}; }
};

/// z -> (az + b) / (cz + d), applied to conj(z) first when `conjugate` is
/// set (reflections are anti-holomorphic).
struct mobius_map {
    cplx a{1}, b{0}, c{0}, d{1};
    bool conjugate = false;

    cplx apply(cplx z) const {
        const cplx w = conjugate ? std::conj(z) : z;
        return (a * w + b) / (c * w + d);
    }
    disk_point apply(disk_point p) const { return disk_point::from_complex(apply(p.to_complex())); }

    static mobius_map rotation(double theta) { return {std::polar(1.0, theta), 0, 0, 1, false}; }

    // Disk automorphism sending the origin to w.
    static mobius_map disk_translation(cplx w) { return {1, w, std::conj(w), 1, false}; }
};

struct diameter_segment {
    disk_point p, q;
};

/// Arc of a circle orthogonal to the unit circle: |center|^2 = radius^2 + 1.
/// Endpoints sit at center + radius * exp(i * angle); the arc runs from
/// start_angle to end_angle counterclockwise iff ccw.
struct circular_arc {
    cplx center;
    double radius = 0;
    double start_angle = 0;
    double end_angle = 0;
    bool ccw = true;

    disk_point start() const {
        return disk_point::from_complex(center + std::polar(radius, start_angle));
    }
    disk_point end() const {
        return disk_point::from_complex(center + std::polar(radius, end_angle));
    }
};

using geodesic_arc = std::variant<diameter_segment, circular_arc>;

/// The geodesic segment between two interior points: a diameter when they
/// are collinear with the origin, otherwise the unique arc of a circle
/// meeting the unit circle at right angles.
inline geodesic_arc geodesic_between(disk_point p, disk_point q) {
    const double cross = p.x * q.y - p.y * q.x;
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    if (dx * dx + dy * dy < 1e-30) throw degenerate_points("geodesic endpoints coincide");
    if (std::abs(cross) <= collinear_tolerance) return diameter_segment{p, q};

    // Orthogonality forces 2 <p, C> = |p|^2 + 1 and likewise for q.
    const double rp = p.x * p.x + p.y * p.y + 1;
    const double rq = q.x * q.x + q.y * q.y + 1;
    const double det = 2 * cross;
    circular_arc arc;
    const double cx = (rp * q.y - rq * p.y) / det;
    const double cy = (p.x * rq - q.x * rp) / det;
    arc.center = {cx, cy};
    arc.radius = std::sqrt(cx * cx + cy * cy - 1);
    arc.start_angle = std::arg(p.to_complex() - arc.center);
    arc.end_angle = std::arg(q.to_complex() - arc.center);
    const cplx u = p.to_complex() - arc.center;
    const cplx v = q.to_complex() - arc.center;
    arc.ccw = (u.real() * v.imag() - u.imag() * v.real()) > 0;
    return arc;
}

/// The anti-holomorphic involution fixing the arc pointwise: inversion in
/// the arc's circle, or mirroring across the diameter's line.
inline mobius_map reflect_across(const geodesic_arc& arc) {
    if (const auto* diam = std::get_if<diameter_segment>(&arc)) {
        const double theta = std::arg(diam->q.to_complex() - diam->p.to_complex());
        return {std::polar(1.0, 2 * theta), 0, 0, 1, true};
    }
    const auto& circ = std::get<circular_arc>(arc);
    const double norm_c = std::norm(circ.center);
    return {circ.center, circ.radius * circ.radius - norm_c, 1, -std::conj(circ.center), true};
}

inline double hyperbolic_distance(disk_point p, disk_point q) {
    const double d2 = std::norm(p.to_complex() - q.to_complex());
    const double denom = (1 - std::norm(p.to_complex())) * (1 - std::norm(q.to_complex()));
    return std::acosh(1 + 2 * d2 / denom);
}

/// Interior angle at `at` of the hyperbolic triangle (at, p, q), from the
/// law of cosines on the three pairwise distances.
inline double hyperbolic_angle(disk_point at, disk_point p, disk_point q) {
    const double b = hyperbolic_distance(at, p);
    const double c = hyperbolic_distance(at, q);
    const double a = hyperbolic_distance(p, q);
    const double cos_angle =
        (std::cosh(b) * std::cosh(c) - std::cosh(a)) / (std::sinh(b) * std::sinh(c));
    return std::acos(std::clamp(cos_angle, -1.0, 1.0));
}

} // namespace hypergrowth
