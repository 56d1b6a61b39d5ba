#pragma once

#include <cstdint>
#include <string>

#include "hypergrowth/errors.hpp"
#include "hypergrowth/fibonacci.hpp"
#include "hypergrowth/matrix2.hpp"

namespace hypergrowth {

/// Exact boundary-vertex census of one disk layer: blue vertices touch 2
/// disk triangles, yellow vertices touch 3.
struct count_pair {
    bigint blue;
    bigint yellow;

    bigint perimeter() const { return blue + yellow; }
    bool operator==(const count_pair&) const = default;
};

// One growth step maps (B, Y) linearly. A blue boundary vertex spawns n-5
// blue vertices owned by it alone; a yellow one spawns n-6; every boundary
// edge contributes exactly one shared (yellow) vertex. Hence:
//
//   B' = (n-5) B + (n-6) Y
//   Y' =       B +       Y
//
// For n = 7 this is [[2,1],[1,1]], the square of the Fibonacci matrix.
// The determinant is (n-5) - (n-6) = 1 for every n.
inline mat2 transfer_matrix(std::int64_t n) {
    if (n < 6) throw invalid_n("transfer_matrix requires n >= 6, got " + std::to_string(n));
    return {bigint(n - 5), bigint(n - 6), bigint(1), bigint(1)};
}

/// (B_r, Y_r) by iterating the transfer matrix from the layer-1 seed
/// (B_1, Y_1) = (n, 0): the first layer is one full fan of n triangles.
inline count_pair counts_by_recurrence(std::int64_t n, std::int64_t r) {
    if (n < 6) throw invalid_n("counts_by_recurrence requires n >= 6, got " + std::to_string(n));
    if (r < 1) throw invalid_radius("counts_by_recurrence requires r >= 1, got " + std::to_string(r));
    const mat2 m = matrix_power(transfer_matrix(n), static_cast<std::uint64_t>(r - 1));
    // M^(r-1) * (n, 0)^T
    return {m.a * n, m.c * n};
}

/// Boundary edge count of the n=7 disk: P(r) = 7 F(2r).
inline bigint perimeter_closed(std::int64_t r) {
    if (r < 1) throw invalid_radius("perimeter_closed requires r >= 1, got " + std::to_string(r));
    return 7 * fibonacci(2 * r);
}

/// Triangle count of the n=7 disk: A(r) = 7 (4 F(2r-2) + 3 F(2r-3) - 2).
/// At r = 1 this uses F(-1) = 1 and correctly gives 7, one full fan.
inline bigint area_closed(std::int64_t r) {
    if (r < 1) throw invalid_radius("area_closed requires r >= 1, got " + std::to_string(r));
    return 7 * (4 * fibonacci(2 * r - 2) + 3 * fibonacci(2 * r - 3) - 2);
}

/// A(r+1) - A(r) = 7 (4 F(2r-1) + 3 F(2r-2)). Equivalently 4 B_r + 3 Y_r:
/// each blue vertex gains 5 outside triangles and each yellow 4, and the
/// P_r triangles sitting on boundary edges are counted twice.
inline bigint area_delta_closed(std::int64_t r) {
    if (r < 1) throw invalid_radius("area_delta_closed requires r >= 1, got " + std::to_string(r));
    return 7 * (4 * fibonacci(2 * r - 1) + 3 * fibonacci(2 * r - 2));
}

} // namespace hypergrowth
