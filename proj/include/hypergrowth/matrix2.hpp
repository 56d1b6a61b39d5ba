#pragma once

#include <cstdint>

#include "hypergrowth/bigint.hpp"

namespace hypergrowth {

/// 2x2 matrix over exact integers, row-major [[a,b],[c,d]].
struct mat2 {
    bigint a, b, c, d;

    bool operator==(const mat2&) const = default;

    mat2 operator*(const mat2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d,
                c * m.a + d * m.c, c * m.b + d * m.d};
    }

    bigint det() const { return a * d - b * c; }

    static mat2 identity() { return {1, 0, 0, 1}; }
};

// The Fibonacci stepping matrix: powers carry the sequence,
// M^k = [[F(k+1), F(k)], [F(k), F(k-1)]].
inline mat2 fibonacci_matrix() { return {1, 1, 1, 0}; }

/// Exact k-th power by repeated squaring; matrix_power(M, 0) is the identity.
inline mat2 matrix_power(mat2 m, std::uint64_t k) {
    mat2 result = mat2::identity();
    while (k != 0) {
        if (k & 1) result = result * m;
        m = m * m;
        k >>= 1;
    }
    return result;
}

} // namespace hypergrowth
