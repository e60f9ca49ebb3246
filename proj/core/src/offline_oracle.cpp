#include "hitset/offline_oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace hitset {

IncidenceMatrix build_incidence(std::size_t num_points, std::size_t num_objects,
                                const CoversFn& covers) {
    if (num_objects > kMaxObjects)
        throw budget_exceeded_error("incidence: more than 512 objects");

    // trace of each point over all objects; points with identical traces
    // collapse into one column
    std::map<std::vector<bool>, std::size_t> trace_to_col;
    std::vector<std::size_t> col_of_point(num_points, SIZE_MAX);
    IncidenceMatrix m;
    m.num_objects = num_objects;
    for (std::size_t p = 0; p < num_points; ++p) {
        std::vector<bool> trace(num_objects);
        bool any = false;
        for (std::size_t o = 0; o < num_objects; ++o) {
            trace[o] = covers(o, p);
            any = any || trace[o];
        }
        if (!any) continue;  // never useful as a hitter
        auto it = trace_to_col.find(trace);
        if (it == trace_to_col.end()) {
            if (m.num_columns >= kMaxColumns)
                throw budget_exceeded_error("incidence: more than 64 distinct columns");
            it = trace_to_col.emplace(trace, m.num_columns).first;
            m.column_rep.push_back(p);
            ++m.num_columns;
        }
        col_of_point[p] = it->second;
    }

    m.rows.assign(num_objects, 0);
    for (std::size_t o = 0; o < num_objects; ++o) {
        std::uint64_t row = 0;
        for (std::size_t c = 0; c < m.num_columns; ++c)
            if (covers(o, m.column_rep[c])) row |= (std::uint64_t{1} << c);
        m.rows[o] = row;
        if (row == 0) m.unhittable.push_back(o);
    }
    return m;
}

namespace {

struct Searcher {
    std::vector<std::uint64_t> rows;  // reduced, deduped
    std::size_t num_columns = 0;
    std::uint64_t usable = 0;  // columns still available
    std::size_t best = SIZE_MAX;
    std::uint64_t best_mask = 0;
    long long nodes = 0;
    static constexpr long long kNodeCap = 20'000'000;

    std::vector<std::uint64_t> uncovered(std::uint64_t chosen) const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t r : rows)
            if ((r & chosen) == 0) out.push_back(r);
        return out;
    }

    // lower bound: greedily pack pairwise column-disjoint uncovered rows
    static std::size_t disjoint_bound(const std::vector<std::uint64_t>& unc) {
        std::uint64_t used = 0;
        std::size_t cnt = 0;
        for (std::uint64_t r : unc) {
            if ((r & used) == 0) {
                used |= r;
                ++cnt;
            }
        }
        return cnt;
    }

    void dfs(std::uint64_t chosen, std::size_t size) {
        if (++nodes > kNodeCap) throw budget_exceeded_error("exact_opt: node budget exceeded");
        auto unc = uncovered(chosen);
        if (unc.empty()) {
            if (size < best) {
                best = size;
                best_mask = chosen;
            }
            return;
        }
        if (size + disjoint_bound(unc) >= best) return;

        // branch on an uncovered row with the fewest usable candidates
        std::uint64_t pivot = 0;
        int fewest = 1000;
        for (std::uint64_t r : unc) {
            int k = std::popcount(r & usable);
            if (k < fewest) {
                fewest = k;
                pivot = r & usable;
            }
        }
        if (pivot == 0) return;  // dead branch

        // candidates ordered by how many uncovered rows they cover
        std::vector<std::pair<int, int>> cands;  // (-coverage, column)
        std::uint64_t rest = pivot;
        while (rest) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            int cov = 0;
            for (std::uint64_t r : unc)
                if (r & (std::uint64_t{1} << c)) ++cov;
            cands.push_back({-cov, c});
        }
        std::sort(cands.begin(), cands.end());
        for (auto [negcov, c] : cands) dfs(chosen | (std::uint64_t{1} << c), size + 1);
    }
};

std::uint64_t greedy_mask(const std::vector<std::uint64_t>& rows, std::size_t num_columns,
                          std::uint64_t* order_hint = nullptr) {
    std::uint64_t chosen = 0;
    (void)order_hint;
    while (true) {
        std::vector<std::uint64_t> unc;
        for (std::uint64_t r : rows)
            if ((r & chosen) == 0) unc.push_back(r);
        if (unc.empty()) break;
        int best_c = -1;
        std::size_t best_cov = 0;
        for (std::size_t c = 0; c < num_columns; ++c) {
            std::uint64_t bit = std::uint64_t{1} << c;
            std::size_t cov = 0;
            for (std::uint64_t r : unc)
                if (r & bit) ++cov;
            if (cov > best_cov) {  // ties: smallest column index wins
                best_cov = cov;
                best_c = static_cast<int>(c);
            }
        }
        if (best_c < 0) break;  // unhittable remainder; caller reports it
        chosen |= std::uint64_t{1} << best_c;
    }
    return chosen;
}

}  // namespace

std::vector<std::size_t> exact_opt(std::size_t num_points, std::size_t num_objects,
                                   const CoversFn& covers) {
    IncidenceMatrix m = build_incidence(num_points, num_objects, covers);
    if (!m.unhittable.empty())
        throw invalid_input_error("exact_opt: instance has an unhittable object");
    if (m.num_objects == 0) return {};

    // dedupe rows and drop dominated (superset) rows
    std::vector<std::uint64_t> rows = m.rows;
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t r : rows) {
        bool dominated = false;
        for (std::uint64_t r2 : rows) {
            if (r2 != r && (r2 & r) == r2) {  // r2 subset of r: r is redundant
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(r);
    }

    // drop dominated columns: c is dominated by c' if rows(c) subset rows(c')
    std::uint64_t usable = 0;
    std::vector<std::uint64_t> col_rows(m.num_columns, 0);
    for (std::size_t c = 0; c < m.num_columns; ++c) {
        for (std::size_t i = 0; i < minimal.size(); ++i)
            if (minimal[i] & (std::uint64_t{1} << c)) col_rows[c] |= (std::uint64_t{1} << i);
    }
    for (std::size_t c = 0; c < m.num_columns; ++c) {
        bool dominated = false;
        for (std::size_t c2 = 0; c2 < m.num_columns; ++c2) {
            if (c2 == c) continue;
            if ((col_rows[c] | col_rows[c2]) == col_rows[c2] &&
                (col_rows[c] != col_rows[c2] || c2 < c)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) usable |= std::uint64_t{1} << c;
    }

    // unit-row forcing
    std::uint64_t forced = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t r : minimal) {
            if (r & forced) continue;
            std::uint64_t avail = r & usable;
            if (std::popcount(avail) == 1 && (forced & avail) == 0) {
                forced |= avail;
                changed = true;
            }
        }
    }

    Searcher s;
    s.rows = minimal;
    s.num_columns = m.num_columns;
    s.usable = usable;
    std::uint64_t g = greedy_mask(minimal, m.num_columns);
    s.best = static_cast<std::size_t>(std::popcount(g | forced));
    s.best_mask = g | forced;
    s.dfs(forced, static_cast<std::size_t>(std::popcount(forced)));

    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < m.num_columns; ++c)
        if (s.best_mask & (std::uint64_t{1} << c)) out.push_back(m.column_rep[c]);
    return out;
}

std::vector<std::size_t> greedy_hitting(std::size_t num_points, std::size_t num_objects,
                                        const CoversFn& covers) {
    std::vector<char> covered(num_objects, 0);
    std::size_t remaining = num_objects;
    std::vector<std::size_t> out;
    while (remaining > 0) {
        std::size_t best_p = SIZE_MAX;
        std::size_t best_cov = 0;
        for (std::size_t p = 0; p < num_points; ++p) {
            std::size_t cov = 0;
            for (std::size_t o = 0; o < num_objects; ++o)
                if (!covered[o] && covers(o, p)) ++cov;
            if (cov > best_cov) {
                best_cov = cov;
                best_p = p;
            }
        }
        if (best_p == SIZE_MAX)
            throw invalid_input_error("greedy: instance has an unhittable object");
        out.push_back(best_p);
        for (std::size_t o = 0; o < num_objects; ++o)
            if (!covered[o] && covers(o, best_p)) {
                covered[o] = 1;
                --remaining;
            }
    }
    return out;
}

std::optional<std::size_t> first_unhit(std::size_t num_objects, const CoversFn& covers,
                                       const std::vector<std::size_t>& hits) {
    for (std::size_t o = 0; o < num_objects; ++o) {
        bool hit = false;
        for (std::size_t p : hits)
            if (covers(o, p)) {
                hit = true;
                break;
            }
        if (!hit) return o;
    }
    return std::nullopt;
}

}  // namespace hitset
