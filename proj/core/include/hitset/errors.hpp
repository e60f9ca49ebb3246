#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hitset {

// Preconditions violated by the caller (bad coordinates, wrong side of a
// line, malformed polygon, ...). The CLI maps this to exit code 4.
struct invalid_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact-solver instance exceeds the column/object budget. Exit code 3.
struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mapped object failed the lowest-point property on one side of its
// splitting point. Carries the offending side so callers can fall back.
struct property_violation_error : std::runtime_error {
    enum class side { left, right };
    side which;
    explicit property_violation_error(side s, const std::string& msg)
        : std::runtime_error(msg), which(s) {}
};

// An arriving object contains no point of P at all.
struct unhittable_object_error : std::runtime_error {
    std::size_t object_index;
    explicit unhittable_object_error(std::size_t idx, const std::string& msg)
        : std::runtime_error(msg), object_index(idx) {}
};

}  // namespace hitset
