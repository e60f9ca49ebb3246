#include "hitset/canonical.hpp"

#include <algorithm>

namespace hitset {

void validate_interval(const IntInterval& iv) {
    if (iv.a < 0 || iv.a >= iv.b) throw invalid_input_error("interval: need 0 <= a < b");
}

bool is_canonical(const IntInterval& iv) {
    validate_interval(iv);
    std::int64_t len = iv.b - iv.a;
    if ((len & (len - 1)) != 0) return false;
    return iv.a % len == 0;
}

std::optional<std::int64_t> splitting_point(const IntInterval& iv) {
    if (is_canonical(iv)) return std::nullopt;
    // largest j such that some multiple of 2^j lies strictly inside (a,b)
    for (int j = 62; j >= 0; --j) {
        std::int64_t step = std::int64_t{1} << j;
        std::int64_t q = iv.a / step + 1;  // first multiple > a (a >= 0)
        std::int64_t s = q * step;
        if (s < iv.b) return s;
    }
    return std::nullopt;  // unreachable for valid non-canonical input
}

namespace {

void partition_rec(const IntInterval& iv, std::vector<CanonicalInterval>& out) {
    std::int64_t len = iv.b - iv.a;
    if ((len & (len - 1)) == 0 && iv.a % len == 0) {
        std::int64_t j = 0;
        while ((std::int64_t{1} << j) < len) ++j;
        out.push_back({iv.a >> j, j});
        return;
    }
    std::int64_t s = *splitting_point(iv);
    partition_rec({iv.a, s}, out);
    partition_rec({s, iv.b}, out);
}

}  // namespace

std::vector<CanonicalInterval> canonical_partition(const IntInterval& iv) {
    validate_interval(iv);
    std::vector<CanonicalInterval> out;
    partition_rec(iv, out);
    return out;
}

IntInterval span(const std::vector<std::int64_t>& xs) {
    if (xs.empty()) throw invalid_input_error("span: empty set");
    auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    return {*mn, *mx + 1};
}

std::int64_t next_pow2(std::int64_t n) {
    if (n < 1) throw invalid_input_error("next_pow2: need n >= 1");
    std::int64_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace hitset
