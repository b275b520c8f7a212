#include "ptab/tableau.hpp"

#include <algorithm>

namespace ptab {

const char* to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::MissingCell: return "MissingCell";
    case ViolationKind::ExtraCell: return "ExtraCell";
    case ViolationKind::BadValue: return "BadValue";
    case ViolationKind::ColumnAllZero: return "ColumnAllZero";
    case ViolationKind::ForbiddenPattern: return "ForbiddenPattern";
    case ViolationKind::DiagonalViolation: return "DiagonalViolation";
    case ViolationKind::ColumnWithoutUp: return "ColumnWithoutUp";
    case ViolationKind::ColumnWithTwoUps: return "ColumnWithTwoUps";
    case ViolationKind::ArrowPointsAtArrow: return "ArrowPointsAtArrow";
    case ViolationKind::ArrowOnDiagonal: return "ArrowOnDiagonal";
    case ViolationKind::EmptyDotColumn: return "EmptyDotColumn";
    }
    return "Unknown";
}

std::string Violation::message() const
{
    std::string out = to_string(kind);
    if (row == 0)
        out += "(column " + std::to_string(col) + ")";
    else
        out += "(" + std::to_string(row) + "," + std::to_string(col) + ")";
    return out;
}

namespace {

Violation column_violation(ViolationKind kind, const Diagram& d, int j) { return {kind, 0, d.cols()[j]}; }

Violation cell_violation(ViolationKind kind, const Diagram& d, int i, int j)
{
    return {kind, d.rows()[i], d.cols()[j]};
}

// above[index] is true when the column holds a 1 strictly above the cell.
std::vector<bool> one_above(const Bits& bits)
{
    const Diagram& d = bits.diagram();
    std::vector<bool> out(static_cast<std::size_t>(d.cell_count()), false);
    for (int j = 0; j < d.num_cols(); ++j) {
        bool seen = false;
        for (int i = d.col_top(j); i < d.col_bottom(j); ++i) {
            out[static_cast<std::size_t>(d.index(i, j))] = seen;
            if (bits.get(i, j)) seen = true;
        }
    }
    return out;
}

bool is_restricted_zero(const Bits& bits, const std::vector<bool>& above, int i, int j)
{
    const Diagram& d = bits.diagram();
    return bits.get(i, j) == 0 && (above[static_cast<std::size_t>(d.index(i, j))] || d.is_diagonal(i, j));
}

// Column of the rightmost restricted 0 in each row, or -1.
std::vector<int> rightmost_restricted_zero(const Bits& bits)
{
    const Diagram& d = bits.diagram();
    const auto above = one_above(bits);
    std::vector<int> out(static_cast<std::size_t>(d.num_rows()), -1);
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = d.row_size(i) - 1; j >= 0; --j)
            if (is_restricted_zero(bits, above, i, j)) {
                out[i] = j;
                break;
            }
    return out;
}

template <class T>
T validated(Bits bits, Kind kind)
{
    if (bits.diagram().kind() != kind) throw std::invalid_argument("filling has the wrong tableau type");
    if (auto v = check_tableau(bits)) throw ValidationError(*v);
    return T(std::move(bits));
}

Bits bits_from_map(const Diagram& d, const CellMap& cells)
{
    Bits bits(d);
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j) {
            const auto it = cells.find({d.rows()[i], d.cols()[j]});
            if (it == cells.end()) throw ValidationError(cell_violation(ViolationKind::MissingCell, d, i, j));
            if (it->second != 0 && it->second != 1)
                throw ValidationError(cell_violation(ViolationKind::BadValue, d, i, j));
            bits.set(i, j, static_cast<std::uint8_t>(it->second));
        }
    for (const auto& [key, value] : cells) {
        if (!d.has_cell(key.first, key.second)) throw ValidationError({ViolationKind::ExtraCell, key.first, key.second});
    }
    return bits;
}

}  // namespace

std::optional<Violation> check_tableau(const Bits& bits)
{
    const Diagram& d = bits.diagram();
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j)
            if (bits.get(i, j) > 1) return cell_violation(ViolationKind::BadValue, d, i, j);

    for (int j = 0; j < d.num_cols(); ++j) {
        bool any = false;
        for (int i = d.col_top(j); i < d.col_bottom(j) && !any; ++i) any = bits.get(i, j) != 0;
        if (!any) return column_violation(ViolationKind::ColumnAllZero, d, j);
    }

    const auto above = one_above(bits);
    for (int i = 0; i < d.num_rows(); ++i) {
        bool left = false;
        for (int j = 0; j < d.row_size(i); ++j) {
            if (bits.get(i, j)) {
                left = true;
                continue;
            }
            if (left && above[static_cast<std::size_t>(d.index(i, j))])
                return cell_violation(ViolationKind::ForbiddenPattern, d, i, j);
            if (left && d.is_diagonal(i, j)) return cell_violation(ViolationKind::DiagonalViolation, d, i, j);
        }
    }
    return std::nullopt;
}

TableauA::TableauA(Bits bits) : bits_(std::move(bits))
{
    if (diagram().kind() != Kind::A) throw std::invalid_argument("type A tableau needs a type A diagram");
    if (auto v = check_tableau(bits_)) throw ValidationError(*v);
}

TableauB::TableauB(Bits bits) : bits_(std::move(bits))
{
    if (diagram().kind() != Kind::B) throw std::invalid_argument("type B tableau needs a shifted diagram");
    if (auto v = check_tableau(bits_)) throw ValidationError(*v);
}

TableauA validate_a(const Shape& shape, const CellMap& cells)
{
    return validated<TableauA>(bits_from_map(Diagram::type_a(shape), cells), Kind::A);
}

TableauB validate_b(const ShiftedShape& shape, const CellMap& cells)
{
    return validated<TableauB>(bits_from_map(Diagram::type_b(shape), cells), Kind::B);
}

Bits bits_from_rows(const Diagram& d, const std::vector<std::string>& rows)
{
    if (static_cast<int>(rows.size()) != d.num_rows())
        throw std::invalid_argument("expected " + std::to_string(d.num_rows()) + " rows, got " +
                                    std::to_string(rows.size()));
    Bits bits(d);
    for (int i = 0; i < d.num_rows(); ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != d.row_size(i))
            throw std::invalid_argument("row " + std::to_string(d.rows()[i]) + " needs " +
                                        std::to_string(d.row_size(i)) + " cells, got " + std::to_string(row.size()));
        for (int j = 0; j < d.row_size(i); ++j) {
            const char ch = row[static_cast<std::size_t>(j)];
            if (ch != '0' && ch != '1') throw std::invalid_argument(std::string("cell symbol must be 0 or 1, got '") + ch + "'");
            bits.set(i, j, static_cast<std::uint8_t>(ch - '0'));
        }
    }
    return bits;
}

// ---------------------------------------------------------------------------
// Alternative representation

std::vector<bool> pointed_cells(const Arrows& arrows)
{
    const Diagram& d = arrows.diagram();
    std::vector<bool> pointed(static_cast<std::size_t>(d.cell_count()), false);
    auto mark = [&](int i, int j) { pointed[static_cast<std::size_t>(d.index(i, j))] = true; };
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j) {
            const Arrow a = arrows.get(i, j);
            if (a == Arrow::Up) {
                for (int r = d.col_top(j); r < i; ++r) mark(r, j);
                if (d.kind() == Kind::B) {
                    const int mirror = d.row_index(-d.cols()[j]);
                    for (int c = 0; c < d.row_size(mirror); ++c) mark(mirror, c);
                }
            } else if (a == Arrow::Left) {
                for (int c = 0; c < j; ++c) mark(i, c);
            }
        }
    return pointed;
}

std::optional<Violation> check_alternative(const Arrows& arrows)
{
    const Diagram& d = arrows.diagram();
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j)
            if (d.is_diagonal(i, j) && arrows.get(i, j) != Arrow::None)
                return cell_violation(ViolationKind::ArrowOnDiagonal, d, i, j);
    for (int j = 0; j < d.num_cols(); ++j) {
        int ups = 0;
        for (int i = d.col_top(j); i < d.col_bottom(j); ++i) ups += arrows.get(i, j) == Arrow::Up;
        if (ups > 1) return column_violation(ViolationKind::ColumnWithTwoUps, d, j);
        if (ups == 0 && d.kind() == Kind::A) return column_violation(ViolationKind::ColumnWithoutUp, d, j);
    }
    const auto pointed = pointed_cells(arrows);
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j)
            if (arrows.get(i, j) != Arrow::None && pointed[static_cast<std::size_t>(d.index(i, j))])
                return cell_violation(ViolationKind::ArrowPointsAtArrow, d, i, j);
    return std::nullopt;
}

AltTableauA::AltTableauA(Arrows arrows) : arrows_(std::move(arrows))
{
    if (diagram().kind() != Kind::A) throw std::invalid_argument("type A alternative needs a type A diagram");
    if (auto v = check_alternative(arrows_)) throw ValidationError(*v);
}

AltTableauB::AltTableauB(Arrows arrows) : arrows_(std::move(arrows))
{
    if (diagram().kind() != Kind::B) throw std::invalid_argument("type B alternative needs a shifted diagram");
    if (auto v = check_alternative(arrows_)) throw ValidationError(*v);
}

bool AltTableauB::has_up(int col_label) const
{
    const Diagram& d = diagram();
    const int j = d.col_index(col_label);
    if (j < 0) return false;
    for (int i = d.col_top(j); i < d.col_bottom(j); ++i)
        if (arrows_.get(i, j) == Arrow::Up) return true;
    return false;
}

std::vector<int> AltTableauB::diagonal_ones() const
{
    std::vector<int> out;
    for (int c : diagram().cols())
        if (!has_up(c)) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Arrows arrows_of(const Bits& bits)
{
    const Diagram& d = bits.diagram();
    Arrows arrows(d);
    for (int j = 0; j < d.num_cols(); ++j)
        for (int i = d.col_top(j); i < d.col_bottom(j); ++i)
            if (bits.get(i, j)) {
                arrows.set(i, j, Arrow::Up);
                break;
            }
    const auto left = rightmost_restricted_zero(bits);
    for (int i = 0; i < d.num_rows(); ++i)
        if (left[i] >= 0) arrows.set(i, left[i], Arrow::Left);
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j)
            if (d.is_diagonal(i, j)) arrows.set(i, j, Arrow::None);
    return arrows;
}

Bits bits_of(const Arrows& arrows)
{
    const Diagram& d = arrows.diagram();
    const auto pointed = pointed_cells(arrows);
    Bits bits(d);
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j) {
            const Arrow a = arrows.get(i, j);
            std::uint8_t v = 0;
            if (a == Arrow::Up)
                v = 1;
            else if (a == Arrow::None)
                v = pointed[static_cast<std::size_t>(d.index(i, j))] ? 0 : 1;
            bits.set(i, j, v);
        }
    return bits;
}

}  // namespace

AltTableauA to_alternative(const TableauA& t) { return AltTableauA(arrows_of(t.bits())); }
AltTableauB to_alternative(const TableauB& t) { return AltTableauB(arrows_of(t.bits())); }
TableauA from_alternative(const AltTableauA& a) { return TableauA(bits_of(a.arrows())); }
TableauB from_alternative(const AltTableauB& a) { return TableauB(bits_of(a.arrows())); }

// ---------------------------------------------------------------------------
// Bare representation

BareTableau to_bare(const AltTableauA& a)
{
    const Diagram& d = a.diagram();
    Bits dots(d);
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j) dots.set(i, j, a.arrows().get(i, j) != Arrow::None ? 1 : 0);
    return BareTableau(std::move(dots));
}

AltTableauA bare_to_alternative(const BareTableau& bare)
{
    const Diagram& d = bare.diagram();
    if (d.kind() != Kind::A) throw std::invalid_argument("bare representation is defined for type A only");
    Arrows arrows(d);
    for (int j = 0; j < d.num_cols(); ++j) {
        bool top = true;
        for (int i = d.col_top(j); i < d.col_bottom(j); ++i) {
            if (!bare.dots().get(i, j)) continue;
            arrows.set(i, j, top ? Arrow::Up : Arrow::Left);
            top = false;
        }
        if (top) throw ValidationError(column_violation(ViolationKind::EmptyDotColumn, d, j));
    }
    return AltTableauA(std::move(arrows));
}

BareTableau bare_of(const TableauA& t)
{
    const Diagram& d = t.diagram();
    Bits dots(d);
    for (int j = 0; j < d.num_cols(); ++j)
        for (int i = d.col_top(j); i < d.col_bottom(j); ++i)
            if (t.bits().get(i, j)) {
                dots.set(i, j, 1);
                break;
            }
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j)
            if (t.bits().get(i, j)) {
                dots.set(i, j, 1);
                break;
            }
    return BareTableau(std::move(dots));
}

// ---------------------------------------------------------------------------
// Statistics

namespace {

std::vector<bool> unrestricted_row_flags(const Bits& bits)
{
    const Diagram& d = bits.diagram();
    const auto above = one_above(bits);
    std::vector<bool> out(static_cast<std::size_t>(d.num_rows()), true);
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j)
            if (is_restricted_zero(bits, above, i, j)) out[i] = false;
    return out;
}

std::vector<int> labels_where(std::span<const int> labels, const std::vector<bool>& flags)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) out.push_back(labels[i]);
    return out;
}

}  // namespace

std::vector<int> unrestricted_rows(const TableauA& t)
{
    return labels_where(t.diagram().rows(), unrestricted_row_flags(t.bits()));
}

std::vector<int> unrestricted_rows(const TableauB& t)
{
    return labels_where(t.diagram().rows(), unrestricted_row_flags(t.bits()));
}

std::vector<int> first_row_one_columns(const TableauA& t)
{
    std::vector<int> out;
    const Diagram& d = t.diagram();
    const int top = d.row_index(1);
    if (top < 0) return out;
    for (int j = 0; j < d.row_size(top); ++j)
        if (t.bits().get(top, j)) out.push_back(d.cols()[j]);
    return out;
}

bool has_single_first_row_one_column(const TableauA& t)
{
    const Diagram& d = t.diagram();
    for (int j = 0; j < d.num_cols(); ++j) {
        bool only_top = t.bits().get(d.col_top(j), j) == 1 && d.rows()[d.col_top(j)] == 1;
        for (int i = d.col_top(j) + 1; i < d.col_bottom(j) && only_top; ++i) only_top = t.bits().get(i, j) == 0;
        if (only_top) return true;
    }
    return false;
}

StatsA stats_a(const TableauA& t)
{
    const Bits& bits = t.bits();
    const Diagram& d = t.diagram();
    StatsA s;
    s.urr = static_cast<int>(unrestricted_rows(t).size());

    std::vector<bool> restricted_col(static_cast<std::size_t>(d.num_cols()), false);
    for (int i = 0; i < d.num_rows(); ++i) {
        bool left = false;
        for (int j = 0; j < d.row_size(i); ++j) {
            if (bits.get(i, j))
                left = true;
            else if (left)
                restricted_col[j] = true;
        }
    }
    s.urc = static_cast<int>(std::count(restricted_col.begin(), restricted_col.end(), false));
    s.topone = static_cast<int>(first_row_one_columns(t).size());
    s.sign = (s.urc % 2) ? -1 : 1;
    return s;
}

StatsB stats_b(const TableauB& t)
{
    const Bits& bits = t.bits();
    const Diagram& d = t.diagram();
    StatsB s;
    const auto flags = unrestricted_row_flags(bits);
    s.urr = static_cast<int>(std::count(flags.begin(), flags.end(), true));
    for (int i = 0; i < d.num_rows(); ++i)
        if (d.rows()[i] < 0) s.diag += bits.get(i, d.row_size(i) - 1);

    const auto first = std::find(flags.begin(), flags.end(), true);
    if (first == flags.end()) return s;
    const int mi = static_cast<int>(first - flags.begin());
    s.m = d.rows()[mi];
    for (int j = 0; j < d.row_size(mi); ++j)
        if (!d.is_diagonal(mi, j)) s.toponez += bits.get(mi, j);
    if (s.m < 0) {
        const int mj = d.col_index(-s.m);
        const auto left = rightmost_restricted_zero(bits);
        for (int i = d.col_top(mj); i < d.col_bottom(mj); ++i)
            if (left[i] == mj) ++s.toponez;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Alternative-form cross-checks

namespace alt {

namespace {

bool row_has_left(const Arrows& a, int i)
{
    for (int j = 0; j < a.diagram().row_size(i); ++j)
        if (a.get(i, j) == Arrow::Left) return true;
    return false;
}

}  // namespace

std::vector<int> unrestricted_rows(const AltTableauA& a)
{
    std::vector<int> out;
    const Diagram& d = a.diagram();
    for (int i = 0; i < d.num_rows(); ++i)
        if (!row_has_left(a.arrows(), i)) out.push_back(d.rows()[i]);
    return out;
}

std::vector<int> unrestricted_rows(const AltTableauB& a)
{
    std::vector<int> out;
    const Diagram& d = a.diagram();
    for (int i = 0; i < d.num_rows(); ++i) {
        const int r = d.rows()[i];
        if (row_has_left(a.arrows(), i)) continue;
        if (r < 0 && a.has_up(-r)) continue;
        out.push_back(r);
    }
    return out;
}

int urc(const AltTableauA& a)
{
    // Column c is restricted iff some row above its Up holds a 1, that is an
    // Up or an unpointed cell, to the left of Column c.
    const Diagram& d = a.diagram();
    const auto pointed = pointed_cells(a.arrows());
    int count = 0;
    for (int j = 0; j < d.num_cols(); ++j) {
        int up = d.col_top(j);
        while (a.arrows().get(up, j) != Arrow::Up) ++up;
        bool restricted = false;
        for (int i = d.col_top(j); i < up && !restricted; ++i)
            for (int c = 0; c < j && !restricted; ++c) {
                const Arrow arrow = a.arrows().get(i, c);
                restricted = arrow == Arrow::Up ||
                             (arrow == Arrow::None && !pointed[static_cast<std::size_t>(d.index(i, c))]);
            }
        if (!restricted) ++count;
    }
    return count;
}

int topone(const AltTableauA& a)
{
    const Diagram& d = a.diagram();
    const int top = d.row_index(1);
    if (top < 0) return 0;
    int count = 0;
    for (int j = 0; j < d.row_size(top); ++j) count += a.arrows().get(top, j) == Arrow::Up;
    return count;
}

std::vector<int> up_columns_in_row(const AltTableauB& a, int row_label)
{
    std::vector<int> out;
    const Diagram& d = a.diagram();
    const int i = d.row_index(row_label);
    if (i < 0) return out;
    for (int j = 0; j < d.row_size(i); ++j)
        if (a.arrows().get(i, j) == Arrow::Up) out.push_back(d.cols()[j]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> left_rows_in_column(const AltTableauB& a, int col_label)
{
    std::vector<int> out;
    const Diagram& d = a.diagram();
    const int j = d.col_index(col_label);
    if (j < 0) return out;
    for (int i = d.col_top(j); i < d.col_bottom(j); ++i)
        if (a.arrows().get(i, j) == Arrow::Left) out.push_back(d.rows()[i]);
    return out;
}

StatsB stats(const AltTableauB& a)
{
    const Diagram& d = a.diagram();
    StatsB s;
    const auto rows = unrestricted_rows(a);
    s.urr = static_cast<int>(rows.size());
    s.diag = static_cast<int>(a.diagonal_ones().size());
    if (rows.empty()) return s;
    s.m = rows.front();
    const int mi = d.row_index(s.m);
    for (int j = 0; j < d.row_size(mi); ++j) s.toponez += a.arrows().get(mi, j) != Arrow::None;
    if (s.m < 0) {
        const int mj = d.col_index(-s.m);
        for (int i = d.col_top(mj); i < d.col_bottom(mj); ++i) s.toponez += a.arrows().get(i, mj) != Arrow::None;
    }
    return s;
}

}  // namespace alt

}  // namespace ptab
