#pragma once

// Reference implementations for the tests. Everything here works directly
// on (row label, column label) pairs computed from the border word and
// shares no code with the library beyond the value types.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Cell = std::pair<int, int>;

struct Grid {
    std::string border;
    bool type_b = false;
    std::vector<int> rows;  // increasing label = top to bottom
    std::vector<int> cols;  // decreasing label = left to right
    std::map<Cell, int> value;

    [[nodiscard]] bool has(int r, int c) const { return value.count({r, c}) != 0; }
    [[nodiscard]] int at(int r, int c) const { return value.at({r, c}); }
    [[nodiscard]] static bool diagonal(int r, int c) { return r < 0 && c == -r; }

    // Cells of Row r, left to right.
    [[nodiscard]] std::vector<int> row_cols(int r) const
    {
        std::vector<int> out;
        for (int c : cols)
            if (has(r, c)) out.push_back(c);
        return out;
    }
    // Cells of Column c, top to bottom.
    [[nodiscard]] std::vector<int> col_rows(int c) const
    {
        std::vector<int> out;
        for (int r : rows)
            if (has(r, c)) out.push_back(r);
        return out;
    }
};

/// Empty grid for a border word: cells (r, c) with r < c, plus for type B
/// rows -c holding cells (-c, c') for c' >= c.
inline Grid grid(const std::string& border, bool type_b)
{
    Grid g;
    g.border = border;
    g.type_b = type_b;
    std::vector<int> base_rows;
    for (std::size_t i = 0; i < border.size(); ++i) {
        const int label = static_cast<int>(i) + 1;
        (border[i] == 'S' ? base_rows : g.cols).push_back(label);
    }
    std::sort(g.cols.rbegin(), g.cols.rend());
    if (type_b)
        for (int c : g.cols) g.rows.push_back(-c);
    std::sort(g.rows.begin(), g.rows.end());
    g.rows.insert(g.rows.end(), base_rows.begin(), base_rows.end());
    for (int r : g.rows)
        for (int c : g.cols)
            if (r > 0 ? r < c : c >= -r) g.value[{r, c}] = 0;
    return g;
}

inline bool one_above(const Grid& g, int r, int c)
{
    for (int r2 : g.col_rows(c))
        if (r2 < r && g.at(r2, c) == 1) return true;
    return false;
}

inline bool one_left(const Grid& g, int r, int c)
{
    for (int c2 : g.row_cols(r))
        if (c2 > c && g.at(r, c2) == 1) return true;
    return false;
}

inline bool valid(const Grid& g)
{
    for (int c : g.cols) {
        bool any = false;
        for (int r : g.col_rows(c)) any = any || g.at(r, c) == 1;
        if (!any) return false;
    }
    for (const auto& [cell, v] : g.value) {
        if (v != 0) continue;
        const auto [r, c] = cell;
        if (one_above(g, r, c) && one_left(g, r, c)) return false;
        if (g.type_b && Grid::diagonal(r, c) && one_left(g, r, c)) return false;
    }
    return true;
}

/// All valid fillings of all border words of length n.
inline std::vector<Grid> all_tableaux(int n, bool type_b)
{
    std::vector<Grid> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::string border;
        for (int i = 0; i < n; ++i) border += (mask >> i & 1) ? 'W' : 'S';
        if (!type_b && border.find('S') > border.find('W')) continue;
        Grid g = grid(border, type_b);
        std::vector<Cell> cells;
        for (const auto& kv : g.value) cells.push_back(kv.first);
        for (long f = 0; f < (1L << cells.size()); ++f) {
            for (std::size_t k = 0; k < cells.size(); ++k) g.value[cells[k]] = static_cast<int>(f >> k & 1);
            if (valid(g)) out.push_back(g);
        }
    }
    return out;
}

inline bool restricted_zero(const Grid& g, int r, int c)
{
    return g.at(r, c) == 0 && (one_above(g, r, c) || (g.type_b && Grid::diagonal(r, c)));
}

inline std::vector<int> unrestricted_rows(const Grid& g)
{
    std::vector<int> out;
    for (int r : g.rows) {
        bool restricted = false;
        for (int c : g.row_cols(r)) restricted = restricted || restricted_zero(g, r, c);
        if (!restricted) out.push_back(r);
    }
    return out;
}

inline int urc(const Grid& g)
{
    int count = 0;
    for (int c : g.cols) {
        bool bad = false;
        for (int r : g.col_rows(c)) bad = bad || (g.at(r, c) == 0 && one_left(g, r, c));
        count += bad ? 0 : 1;
    }
    return count;
}

inline int topone(const Grid& g)
{
    int count = 0;
    for (int c : g.cols)
        if (g.has(1, c)) count += g.at(1, c);
    return count;
}

enum class Mark { None, Up, Left };

/// Topmost 1 of each column -> Up, rightmost restricted 0 of each row ->
/// Left; for type B the diagonal cells are then dropped.
inline std::map<Cell, Mark> arrows(const Grid& g)
{
    std::map<Cell, Mark> out;
    for (const auto& kv : g.value) out[kv.first] = Mark::None;
    for (int c : g.cols)
        for (int r : g.col_rows(c))
            if (g.at(r, c) == 1) {
                out[{r, c}] = Mark::Up;
                break;
            }
    for (int r : g.rows) {
        const auto cs = g.row_cols(r);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it)
            if (restricted_zero(g, r, *it)) {
                out[{r, *it}] = Mark::Left;
                break;
            }
    }
    if (g.type_b)
        for (int c : g.cols) out.erase({-c, c});
    return out;
}

inline int diag(const Grid& g)
{
    int count = 0;
    for (int c : g.cols) count += g.at(-c, c);
    return count;
}

/// Arrows in Row m plus arrows in Column |m|.
inline int toponez(const Grid& g)
{
    const auto unr = unrestricted_rows(g);
    if (unr.empty()) return 0;
    const int m = *std::min_element(unr.begin(), unr.end());
    const auto a = arrows(g);
    int count = 0;
    for (const auto& [cell, mark] : a) {
        if (mark == Mark::None) continue;
        if (cell.first == m) ++count;
        if (cell.second == std::abs(m) && cell.first != m) ++count;
    }
    return count;
}

/// Zigzag path by labels. `turn(r, c)` says whether the path changes
/// direction at a cell. Type B paths reflect south at a diagonal cell.
template <class Turn>
int zigzag_exit(const Grid& g, int start, bool start_in_row, Turn turn)
{
    int r = 0;
    int c = 0;
    bool east = start_in_row;
    if (start_in_row) {
        r = start;
        const auto cs = g.row_cols(r);
        if (cs.empty()) return r;
        c = cs.front();
    } else {
        c = start;
        const auto rs = g.col_rows(c);
        if (rs.empty()) return c;
        r = rs.front();
    }
    while (true) {
        const bool diagonal_hit = g.type_b && Grid::diagonal(r, c);
        if (diagonal_hit || turn(r, c)) east = !east;
        if (east) {
            const auto cs = g.row_cols(r);
            const auto it = std::find(cs.begin(), cs.end(), c);
            if (it + 1 == cs.end()) return r;
            c = *(it + 1);
        } else {
            const auto rs = g.col_rows(c);
            const auto it = std::find(rs.begin(), rs.end(), r);
            if (it + 1 == rs.end()) return c;
            r = *(it + 1);
        }
    }
}

/// i -> image under the standard zigzag on a type A grid.
inline std::vector<int> zp(const Grid& g, int n)
{
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        const bool is_row = std::find(g.rows.begin(), g.rows.end(), i) != g.rows.end();
        out.push_back(zigzag_exit(g, i, is_row, [&](int r, int c) { return g.at(r, c) == 1; }));
    }
    return out;
}

/// Map given by cutting a word after each RL-minimum into cycles: each
/// non-minimum goes to its right neighbour, each RL-minimum back to the
/// first entry of its segment.
inline std::map<int, int> cycle_closure(const std::vector<int>& w)
{
    std::map<int, int> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool rl_min = true;
        for (std::size_t j = i + 1; j < w.size(); ++j) rl_min = rl_min && w[i] < w[j];
        if (rl_min) {
            out[w[i]] = w[start];
            start = i + 1;
        } else {
            out[w[i]] = w[i + 1];
        }
    }
    return out;
}

/// Prefix pi_1..pi_k is a permutation of [k] for some k < n.
inline bool has_permutation_prefix(const std::vector<int>& w)
{
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::vector<int> prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(prefix.begin(), prefix.end());
        std::vector<int> expect(k);
        std::iota(expect.begin(), expect.end(), 1);
        if (prefix == expect) return true;
    }
    return false;
}

/// Some window ending at the entry 1, of length >= 2, is a permutation of
/// [length].
inline bool has_window_at_one(const std::vector<int>& w)
{
    const auto j = static_cast<std::size_t>(std::find(w.begin(), w.end(), 1) - w.begin());
    if (j >= w.size()) return false;
    for (std::size_t i = 0; i < j; ++i) {
        std::vector<int> window(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        std::sort(window.begin(), window.end());
        std::vector<int> expect(window.size());
        std::iota(expect.begin(), expect.end(), 1);
        if (window == expect) return true;
    }
    return false;
}

inline std::vector<std::vector<int>> all_permutations(int n)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline int cycle_count(const std::vector<int>& w)
{
    std::vector<bool> seen(w.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(w[x] - 1)) seen[x] = true;
    }
    return cycles;
}

}  // namespace oracle
