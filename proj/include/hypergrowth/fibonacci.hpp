#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "hypergrowth/errors.hpp"
#include "hypergrowth/matrix2.hpp"

namespace hypergrowth {

inline constexpr std::int64_t default_fibonacci_bound = 10'000;

/// F(k) with F(0)=0, F(1)=1, extended to negative indices so that
/// F(k+1) = F(k) + F(k-1) holds for every k: F(-k) = (-1)^(k+1) F(k).
inline bigint fibonacci(std::int64_t k, std::int64_t bound = default_fibonacci_bound) {
    const std::int64_t abs_k = k < 0 ? -k : k;
    if (abs_k > bound)
        throw index_out_of_bounds("fibonacci index " + std::to_string(k) + " exceeds bound " +
                                  std::to_string(bound));
    const bigint f = matrix_power(fibonacci_matrix(), static_cast<std::uint64_t>(abs_k)).b;
    if (k >= 0) return f;
    return (abs_k % 2 == 0) ? -f : f;
}

/// (sum of F(2i) for i=1..r, F(2r+1) - 1): the two sides of the even-index
/// summation identity. The left side is summed term by term on purpose.
inline std::pair<bigint, bigint> identity_even_sum(std::int64_t r) {
    if (r < 1) throw invalid_radius("identity_even_sum requires r >= 1");
    bigint lhs = 0;
    for (std::int64_t i = 1; i <= r; ++i) lhs += fibonacci(2 * i);
    return {lhs, fibonacci(2 * r + 1) - 1};
}

/// (sum of F(2i-1) for i=1..r, F(2r)): odd-index companion of the above.
inline std::pair<bigint, bigint> identity_odd_sum(std::int64_t r) {
    if (r < 1) throw invalid_radius("identity_odd_sum requires r >= 1");
    bigint lhs = 0;
    for (std::int64_t i = 1; i <= r; ++i) lhs += fibonacci(2 * i - 1);
    return {lhs, fibonacci(2 * r)};
}

} // namespace hypergrowth
