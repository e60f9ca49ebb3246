#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hitset/errors.hpp"

namespace hitset {

// Half-open dyadic interval [q*2^j, (q+1)*2^j).
struct CanonicalInterval {
    std::int64_t q = 0;
    std::int64_t j = 0;

    std::int64_t lo() const { return q << j; }
    std::int64_t hi() const { return (q + 1) << j; }
    std::int64_t size() const { return std::int64_t{1} << j; }
    CanonicalInterval left_neighbor() const { return {q - 1, j}; }
    CanonicalInterval right_neighbor() const { return {q + 1, j}; }

    friend bool operator==(const CanonicalInterval& a, const CanonicalInterval& b) {
        return a.q == b.q && a.j == b.j;
    }
};

// Half-open integer interval [a, b), 0 <= a < b.
struct IntInterval {
    std::int64_t a = 0;
    std::int64_t b = 0;

    std::int64_t length() const { return b - a; }
    bool contains(std::int64_t x) const { return a <= x && x < b; }

    friend bool operator==(const IntInterval& u, const IntInterval& v) {
        return u.a == v.a && u.b == v.b;
    }
};

void validate_interval(const IntInterval& iv);

bool is_canonical(const IntInterval& iv);

// The unique coarsest dyadic point strictly inside (a,b); nullopt for
// canonical intervals.
std::optional<std::int64_t> splitting_point(const IntInterval& iv);

// Left-to-right partition of [a,b) into canonical intervals, splitting at
// the splitting point and recursing on both halves.
std::vector<CanonicalInterval> canonical_partition(const IntInterval& iv);

// Smallest half-open integer interval covering all values.
IntInterval span(const std::vector<std::int64_t>& xs);

// Smallest power of two >= n (n >= 1).
std::int64_t next_pow2(std::int64_t n);

}  // namespace hitset
