#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hypergrowth {

// Arbitrary-precision signed integer. Everything that counts is counted exactly.
using bigint = boost::multiprecision::cpp_int;

} // namespace hypergrowth
