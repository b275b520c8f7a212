#include "ptab/maps.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace ptab {

std::vector<int> rl_minima(std::span<const int> word)
{
    std::vector<int> out;
    for (std::size_t i = word.size(); i-- > 0;)
        if (out.empty() || word[i] < out.back()) out.push_back(word[i]);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> rl_maxima(std::span<const int> word)
{
    std::vector<int> out;
    for (std::size_t i = word.size(); i-- > 0;)
        if (out.empty() || word[i] > out.back()) out.push_back(word[i]);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<SignedDescent> signed_descents(const SignedPermutation& pi)
{
    const int n = pi.size();
    std::vector<SignedDescent> out;
    for (int i = 0; i < n; ++i) {
        const int next = i + 1 < n ? std::abs(pi[i + 1]) : n + 1;
        if (pi[i] < 0 || pi[i] > next) out.push_back({i, pi[i]});
    }
    std::sort(out.begin(), out.end(),
              [](const SignedDescent& a, const SignedDescent& b) { return std::abs(a.value) < std::abs(b.value); });
    return out;
}

bool is_connected(const Permutation& pi)
{
    int max_seen = 0;
    for (int k = 1; k < pi.size(); ++k) {
        max_seen = std::max(max_seen, pi[k - 1]);
        if (max_seen == k) return false;
    }
    return true;
}

bool is_shift_connected(const Permutation& pi)
{
    const auto w = pi.word();
    const auto one = std::find(w.begin(), w.end(), 1);
    if (one == w.end()) return true;
    const auto j = static_cast<int>(one - w.begin());
    int max_seen = 1;
    for (int i = j - 1; i >= 0; --i) {
        max_seen = std::max(max_seen, w[i]);
        if (max_seen == j - i + 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> canonical_cycle(std::vector<int> cycle)
{
    const auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it + 1, cycle.end());
    return cycle;
}

}  // namespace

CyclePermutation::CyclePermutation(std::vector<std::vector<int>> cycles)
{
    std::vector<int> seen;
    for (auto& c : cycles) {
        if (c.empty()) continue;
        seen.insert(seen.end(), c.begin(), c.end());
        cycles_.push_back(canonical_cycle(std::move(c)));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("cycles are not disjoint");
    std::sort(cycles_.begin(), cycles_.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });
}

CyclePermutation CyclePermutation::from_mapping(const std::map<int, int>& mapping)
{
    std::vector<int> images;
    for (const auto& [k, v] : mapping) images.push_back(v);
    std::sort(images.begin(), images.end());
    std::vector<int> keys;
    for (const auto& [k, v] : mapping) keys.push_back(k);
    if (images != keys) throw std::invalid_argument("mapping is not a bijection on its support");

    std::map<int, bool> done;
    std::vector<std::vector<int>> cycles;
    for (const auto& [start, unused] : mapping) {
        if (done[start]) continue;
        std::vector<int> cycle;
        for (int x = start; !done[x]; x = mapping.at(x)) {
            done[x] = true;
            cycle.push_back(x);
        }
        cycles.push_back(std::move(cycle));
    }
    return CyclePermutation(std::move(cycles));
}

CyclePermutation CyclePermutation::from_one_line(std::span<const int> word)
{
    std::map<int, int> mapping;
    for (std::size_t i = 0; i < word.size(); ++i) mapping[static_cast<int>(i) + 1] = word[i];
    return from_mapping(mapping);
}

std::map<int, int> CyclePermutation::mapping() const
{
    std::map<int, int> out;
    for (const auto& c : cycles_)
        for (std::size_t i = 0; i < c.size(); ++i) out[c[i]] = c[(i + 1) % c.size()];
    return out;
}

int CyclePermutation::apply(int x) const
{
    for (const auto& c : cycles_) {
        const auto it = std::find(c.begin(), c.end(), x);
        if (it != c.end()) return (it + 1 == c.end()) ? c.front() : *(it + 1);
    }
    throw std::out_of_range("value outside the support: " + std::to_string(x));
}

std::string CyclePermutation::str() const
{
    if (cycles_.empty()) return "()";
    std::string out;
    for (const auto& c : cycles_) out += "(" + join_word(c) + ")";
    return out;
}

CyclePermutation phi(std::span<const int> word)
{
    const auto minima = rl_minima(word);
    std::vector<std::vector<int>> cycles;
    std::vector<int> current;
    std::size_t next_min = 0;
    for (int v : word) {
        current.push_back(v);
        if (next_min < minima.size() && v == minima[next_min]) {
            cycles.push_back(std::move(current));
            current.clear();
            ++next_min;
        }
    }
    return CyclePermutation(std::move(cycles));
}

// ---------------------------------------------------------------------------

namespace {

void insert_before(std::vector<int>& word, int anchor, const std::vector<int>& values)
{
    const auto it = std::find(word.begin(), word.end(), anchor);
    if (it == word.end()) throw std::logic_error("insertion anchor " + std::to_string(anchor) + " missing");
    word.insert(it, values.begin(), values.end());
}

// Up row and Left rows (top to bottom, i.e. increasing) of column j.
struct ColumnArrows {
    int up = 0;  // 0 when the column has no Up
    std::vector<int> lefts;
};

ColumnArrows column_arrows(const Arrows& a, int j)
{
    const Diagram& d = a.diagram();
    ColumnArrows out;
    for (int i = d.col_top(j); i < d.col_bottom(j); ++i) {
        if (a.get(i, j) == Arrow::Up) out.up = d.rows()[i];
        if (a.get(i, j) == Arrow::Left) out.lefts.push_back(d.rows()[i]);
    }
    return out;
}

}  // namespace

Permutation cn(const AltTableauA& t)
{
    const Diagram& d = t.diagram();
    std::vector<int> word = alt::unrestricted_rows(t);
    for (int j = 0; j < d.num_cols(); ++j) {
        auto col = column_arrows(t.arrows(), j);
        col.lefts.push_back(d.cols()[j]);
        insert_before(word, col.up, col.lefts);
    }
    return Permutation(std::move(word));
}

SignedPermutation cnb(const AltTableauB& t)
{
    const Diagram& d = t.diagram();
    std::vector<int> word = alt::unrestricted_rows(t);
    // Columns left to right are c_k, ..., c_1.
    for (int j = 0; j < d.num_cols(); ++j) {
        const int c = d.cols()[j];
        const auto col = column_arrows(t.arrows(), j);
        int anchor = -c;
        if (col.up != 0) {
            insert_before(word, col.up, {c});
            anchor = c;
        }
        if (!col.lefts.empty()) insert_before(word, anchor, col.lefts);
    }
    return SignedPermutation(std::move(word));
}

CnbInverseTrace cnb_inverse_traced(const SignedPermutation& pi)
{
    Arrows arrows(Diagram::type_b(shape_from_descents(pi)));
    std::vector<int> w(pi.word().begin(), pi.word().end());

    for (const auto& descent : signed_descents(pi)) {
        const int v = descent.value;
        const int col = std::abs(v);
        const auto d = static_cast<int>(std::find(w.begin(), w.end(), v) - w.begin());
        // Lower bound of the increasing run that ends just before position d.
        const int floor = v < 0 ? v : w[static_cast<std::size_t>(d) + 1];
        int r = d;
        int ceiling = col;
        while (r > 0 && w[r - 1] > floor && w[r - 1] < ceiling) {
            ceiling = w[r - 1];
            --r;
        }
        for (int j = r; j < d; ++j) arrows.put(w[j], col, Arrow::Left);
        int erase_end = d;
        if (v > 0) {
            arrows.put(w[static_cast<std::size_t>(d) + 1], col, Arrow::Up);
            erase_end = d + 1;
        }
        w.erase(w.begin() + r, w.begin() + erase_end);
    }
    return {AltTableauB(std::move(arrows)), std::move(w)};
}

AltTableauB cnb_inverse(const SignedPermutation& pi) { return cnb_inverse_traced(pi).tableau; }

AltTableauA to_type_a(const AltTableauB& t)
{
    const Diagram& db = t.diagram();
    const Diagram da = Diagram::type_a(db.base());
    Arrows arrows(da);
    for (int i = 0; i < db.num_rows(); ++i) {
        const int r = db.rows()[i];
        for (int j = 0; j < db.row_size(i); ++j) {
            const Arrow a = t.arrows().get(i, j);
            if (r < 0) {
                if (a != Arrow::None) throw std::invalid_argument("added rows carry arrows; not a type A tableau");
                continue;
            }
            arrows.set(da.row_index(r), j, a);
        }
    }
    return AltTableauA(std::move(arrows));
}

AltTableauB to_type_b(const AltTableauA& t)
{
    const Diagram& da = t.diagram();
    const Diagram db = Diagram::type_b(ShiftedShape(da.base()));
    Arrows arrows(db);
    for (int i = 0; i < da.num_rows(); ++i)
        for (int j = 0; j < da.row_size(i); ++j) arrows.set(db.row_index(da.rows()[i]), j, t.arrows().get(i, j));
    return AltTableauB(std::move(arrows));
}

AltTableauA cn_inverse(const Permutation& pi) { return to_type_a(cnb_inverse(SignedPermutation(pi))); }

// ---------------------------------------------------------------------------

namespace {

enum class Heading { East, South };

// Follows a path from cell (i, j) until it leaves the diagram and returns
// the label of the exit row or column.
int trace(const Diagram& d, const std::function<bool(int, int)>& turn, int i, int j, Heading heading)
{
    while (true) {
        if (heading == Heading::East) {
            if (j >= d.row_size(i)) return d.rows()[i];
            if (d.is_diagonal(i, j)) {
                heading = Heading::South;
                ++i;
            } else if (turn(i, j)) {
                heading = Heading::South;
                ++i;
            } else {
                ++j;
            }
        } else {
            if (i >= d.col_bottom(j)) return d.cols()[j];
            if (turn(i, j)) {
                heading = Heading::East;
                ++j;
            } else {
                ++i;
            }
        }
    }
}

Permutation zigzag_a(const Diagram& d, const std::function<bool(int, int)>& turn)
{
    const int n = d.length();
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int label = 1; label <= n; ++label) {
        const int i = d.row_index(label);
        if (i >= 0) {
            word[label - 1] = trace(d, turn, i, 0, Heading::East);
        } else {
            const int j = d.col_index(label);
            word[label - 1] = trace(d, turn, d.col_top(j), j, Heading::South);
        }
    }
    return Permutation(std::move(word));
}

}  // namespace

Permutation zigzag_standard(const TableauA& t)
{
    return zigzag_a(t.diagram(), [&](int i, int j) { return t.bits().get(i, j) != 0; });
}

Permutation zigzag_alternative(const AltTableauA& t)
{
    return zigzag_a(t.diagram(), [&](int i, int j) { return t.arrows().get(i, j) != Arrow::None; });
}

namespace {

std::map<int, int> zigzag_b_by_label(const AltTableauB& t)
{
    const Diagram& d = t.diagram();
    const auto turn = [&](int i, int j) { return t.arrows().get(i, j) != Arrow::None; };
    const auto signed_label = [&](int x) { return (d.col_index(x) >= 0 && !t.has_up(x)) ? -x : x; };
    std::map<int, int> out;
    for (int label = 1; label <= d.length(); ++label) {
        int i = d.row_index(label);
        if (i < 0) i = d.row_index(-label);
        const int exit = trace(d, turn, i, 0, Heading::East);
        out[signed_label(label)] = signed_label(exit);
    }
    return out;
}

}  // namespace

CyclePermutation zigzag_alternative_b_map(const AltTableauB& t)
{
    return CyclePermutation::from_mapping(zigzag_b_by_label(t));
}

SignedPermutation zigzag_alternative_b(const AltTableauB& t)
{
    const auto mapping = zigzag_b_by_label(t);
    std::vector<int> lower(mapping.size());
    for (const auto& [from, to] : mapping) lower[static_cast<std::size_t>(std::abs(from)) - 1] = to;
    return SignedPermutation(std::move(lower));
}

// ---------------------------------------------------------------------------

Permutation cp_scp_map(const Permutation& pi)
{
    const int n = pi.size();
    int k = 0;
    int max_seen = 0;
    for (int i = 1; i < n; ++i) {
        max_seen = std::max(max_seen, pi[i - 1]);
        if (max_seen == i) {
            k = i;
            break;
        }
    }
    if (k == 0) throw ConnectedInput();
    const auto w = pi.word();
    const auto pivot = static_cast<std::size_t>(std::find(w.begin(), w.end(), k + 1) - w.begin());
    std::vector<int> out;
    out.insert(out.end(), w.begin() + k, w.begin() + static_cast<std::ptrdiff_t>(pivot));  // tau
    for (int i = k - 1; i >= 0; --i) out.push_back(w[i] + 1);                          // sigma^+
    out.push_back(1);
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pivot) + 1, w.end());  // rho
    return Permutation(std::move(out));
}

}  // namespace ptab
