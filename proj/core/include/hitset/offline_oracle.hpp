#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hitset/errors.hpp"

namespace hitset {

// covers(obj, pt) -> does object obj contain point pt. Geometry never enters
// the solver; callers reduce objects to this incidence predicate.
using CoversFn = std::function<bool(std::size_t, std::size_t)>;

struct IncidenceMatrix {
    std::size_t num_objects = 0;
    std::size_t num_columns = 0;                  // distinct point classes
    std::vector<std::uint64_t> rows;              // per object: column bitmask
    std::vector<std::size_t> column_rep;          // representative point per column
    std::vector<std::size_t> unhittable;          // objects with empty rows
};

inline constexpr std::size_t kMaxColumns = 64;
inline constexpr std::size_t kMaxObjects = 512;

// Dedupes points into columns by identical object trace. Throws
// budget_exceeded_error beyond 64 distinct columns or 512 objects.
IncidenceMatrix build_incidence(std::size_t num_points, std::size_t num_objects,
                                const CoversFn& covers);

// Minimum hitting set by branch and bound with dominance reductions,
// unit-row forcing and a greedy upper bound. Returns representative point
// indices. Throws on unhittable rows or blown budgets.
std::vector<std::size_t> exact_opt(std::size_t num_points, std::size_t num_objects,
                                   const CoversFn& covers);

// Greedy max-coverage hitting set; ties broken by smallest point index.
std::vector<std::size_t> greedy_hitting(std::size_t num_points, std::size_t num_objects,
                                        const CoversFn& covers);

// Index of the first object hit by no point of `hits`, or nullopt.
std::optional<std::size_t> first_unhit(std::size_t num_objects, const CoversFn& covers,
                                       const std::vector<std::size_t>& hits);

}  // namespace hitset
