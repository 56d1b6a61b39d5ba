#pragma once

#include <stdexcept>
#include <string>

namespace hypergrowth {

// Argument/usage errors.

struct invalid_n : std::invalid_argument {
    explicit invalid_n(const std::string& what) : std::invalid_argument("invalid n: " + what) {}
};

struct invalid_radius : std::invalid_argument {
    explicit invalid_radius(const std::string& what) : std::invalid_argument("invalid radius: " + what) {}
};

struct index_out_of_bounds : std::invalid_argument {
    explicit index_out_of_bounds(const std::string& what) : std::invalid_argument("index out of bounds: " + what) {}
};

struct degenerate_points : std::invalid_argument {
    explicit degenerate_points(const std::string& what) : std::invalid_argument("degenerate points: " + what) {}
};

struct unsupported_n : std::invalid_argument {
    explicit unsupported_n(const std::string& what) : std::invalid_argument("unsupported n: " + what) {}
};

// Runtime failures.

struct resource_limit : std::runtime_error {
    explicit resource_limit(const std::string& what) : std::runtime_error("resource limit: " + what) {}
};

struct already_closed : std::runtime_error {
    explicit already_closed(const std::string& what) : std::runtime_error("already closed: " + what) {}
};

// Signals a bug in the disk builder, not a user error.
struct classification_violation : std::runtime_error {
    explicit classification_violation(const std::string& what)
        : std::runtime_error("classification violation: " + what) {}
};

struct not_a_disk : std::runtime_error {
    explicit not_a_disk(const std::string& what) : std::runtime_error("not a disk: " + what) {}
};

struct numerical_degeneracy : std::runtime_error {
    explicit numerical_degeneracy(const std::string& what) : std::runtime_error("numerical degeneracy: " + what) {}
};

struct output_unwritable : std::runtime_error {
    explicit output_unwritable(const std::string& what) : std::runtime_error("output unwritable: " + what) {}
};

struct precision_exhausted : std::runtime_error {
    explicit precision_exhausted(const std::string& what) : std::runtime_error("precision exhausted: " + what) {}
};

// Internal consistency failure inside the builder; never expected on valid inputs.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error("internal error: " + what) {}
};

} // namespace hypergrowth
