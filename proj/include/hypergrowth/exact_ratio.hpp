#pragma once

#include <string>

#include "hypergrowth/bigint.hpp"
#include "hypergrowth/errors.hpp"

namespace hypergrowth {

/// Reduced rational over exact integers; denominator always positive.
struct exact_ratio {
    bigint num = 0;
    bigint den = 1;

    exact_ratio() = default;
    exact_ratio(bigint n, bigint d) : num(std::move(n)), den(std::move(d)) {
        if (den == 0) throw degenerate_points("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const bigint g = boost::multiprecision::gcd(num < 0 ? bigint(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const exact_ratio&) const = default;

    // Exact order comparison by cross multiplication (denominators > 0).
    bool operator<(const exact_ratio& other) const { return num * other.den < other.num * den; }
    bool operator<=(const exact_ratio& other) const { return num * other.den <= other.num * den; }

    std::string str() const { return num.str() + "/" + den.str(); }

    template <class Real>
    Real to_real() const {
        return Real(num) / Real(den);
    }
};

} // namespace hypergrowth
