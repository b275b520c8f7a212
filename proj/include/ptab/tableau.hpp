#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptab/shape.hpp"

namespace ptab {

/// Values over the cells of a Diagram, stored row-major.
template <class V>
class Filling {
public:
    Filling() = default;
    explicit Filling(Diagram diagram)
        : diagram_(std::move(diagram)), cells_(static_cast<std::size_t>(diagram_.cell_count()), V{})
    {
    }
    Filling(Diagram diagram, std::vector<V> cells) : diagram_(std::move(diagram)), cells_(std::move(cells))
    {
        if (static_cast<int>(cells_.size()) != diagram_.cell_count())
            throw std::invalid_argument("filling size does not match the diagram");
    }

    [[nodiscard]] const Diagram& diagram() const { return diagram_; }
    [[nodiscard]] std::span<const V> cells() const { return cells_; }

    [[nodiscard]] V get(int i, int j) const { return cells_[static_cast<std::size_t>(diagram_.index(i, j))]; }
    void set(int i, int j, V value) { cells_[static_cast<std::size_t>(diagram_.index(i, j))] = value; }

    /// Label-addressed access. Throws std::out_of_range for a missing cell.
    [[nodiscard]] V at(int row_label, int col_label) const
    {
        const auto [i, j] = locate(row_label, col_label);
        return get(i, j);
    }
    void put(int row_label, int col_label, V value)
    {
        const auto [i, j] = locate(row_label, col_label);
        set(i, j, value);
    }

    friend bool operator==(const Filling& a, const Filling& b)
    {
        return a.diagram_ == b.diagram_ && a.cells_ == b.cells_;
    }

private:
    [[nodiscard]] std::pair<int, int> locate(int row_label, int col_label) const
    {
        const int i = diagram_.row_index(row_label);
        const int j = diagram_.col_index(col_label);
        if (!diagram_.contains(i, j))
            throw std::out_of_range("no cell (" + std::to_string(row_label) + "," + std::to_string(col_label) + ")");
        return {i, j};
    }

    Diagram diagram_;
    std::vector<V> cells_;
};

enum class Arrow : std::uint8_t { None = 0, Up = 1, Left = 2 };

using Bits = Filling<std::uint8_t>;
using Arrows = Filling<Arrow>;

/// (row label, column label) -> 0/1.
using CellMap = std::map<std::pair<int, int>, int>;

enum class ViolationKind {
    MissingCell,
    ExtraCell,
    BadValue,
    ColumnAllZero,
    ForbiddenPattern,
    DiagonalViolation,
    ColumnWithoutUp,
    ColumnWithTwoUps,
    ArrowPointsAtArrow,
    ArrowOnDiagonal,
    EmptyDotColumn,
};

const char* to_string(ViolationKind kind);

/// First violated condition, naming the offending cell (or column).
struct Violation {
    ViolationKind kind;
    int row = 0;  // 0 when the violation concerns a whole column
    int col = 0;
    [[nodiscard]] std::string message() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(Violation v) : std::runtime_error(v.message()), violation_(v) {}
    [[nodiscard]] const Violation& violation() const { return violation_; }

private:
    Violation violation_;
};

/// Every column has a 1; no 0 has a 1 above it and a 1 to its left; for
/// type B no diagonal 0 has a 1 to its left. Checks run as: all-zero
/// columns left to right, then a row-major scan of cells.
std::optional<Violation> check_tableau(const Bits& bits);

/// A permutation tableau of type A.
class TableauA {
public:
    TableauA() : TableauA(Bits(Diagram::type_a(Shape{}))) {}
    /// Throws ValidationError.
    explicit TableauA(Bits bits);

    [[nodiscard]] const Bits& bits() const { return bits_; }
    [[nodiscard]] const Diagram& diagram() const { return bits_.diagram(); }
    [[nodiscard]] const Shape& shape() const { return bits_.diagram().base(); }
    [[nodiscard]] int length() const { return shape().length(); }
    [[nodiscard]] int at(int row_label, int col_label) const { return bits_.at(row_label, col_label); }

    friend bool operator==(const TableauA&, const TableauA&) = default;

private:
    Bits bits_;
};

/// A permutation tableau of type B on a shifted diagram.
class TableauB {
public:
    TableauB() : TableauB(Bits(Diagram::type_b(ShiftedShape{}))) {}
    explicit TableauB(Bits bits);

    [[nodiscard]] const Bits& bits() const { return bits_; }
    [[nodiscard]] const Diagram& diagram() const { return bits_.diagram(); }
    [[nodiscard]] ShiftedShape shape() const { return bits_.diagram().shifted(); }
    [[nodiscard]] int length() const { return diagram().length(); }
    [[nodiscard]] int at(int row_label, int col_label) const { return bits_.at(row_label, col_label); }

    friend bool operator==(const TableauB&, const TableauB&) = default;

private:
    Bits bits_;
};

TableauA validate_a(const Shape& shape, const CellMap& cells);
TableauB validate_b(const ShiftedShape& shape, const CellMap& cells);

/// Builds a filling from per-row strings of '0'/'1', top to bottom.
Bits bits_from_rows(const Diagram& diagram, const std::vector<std::string>& rows);

/// Alternative representation: topmost 1s become Up, rightmost restricted
/// 0s become Left. Each column holds exactly one Up.
class AltTableauA {
public:
    AltTableauA() : AltTableauA(Arrows(Diagram::type_a(Shape{}))) {}
    /// Throws ValidationError when a column lacks or repeats an Up, or an
    /// arrow points at another arrow.
    explicit AltTableauA(Arrows arrows);

    [[nodiscard]] const Arrows& arrows() const { return arrows_; }
    [[nodiscard]] const Diagram& diagram() const { return arrows_.diagram(); }
    [[nodiscard]] const Shape& shape() const { return diagram().base(); }
    [[nodiscard]] int length() const { return shape().length(); }
    [[nodiscard]] Arrow at(int row_label, int col_label) const { return arrows_.at(row_label, col_label); }

    friend bool operator==(const AltTableauA&, const AltTableauA&) = default;

private:
    Arrows arrows_;
};

/// Type B alternative representation. Diagonal cells are cut off (always
/// Arrow::None); a column without an Up had its 1 on the diagonal. The cut
/// acts as a mirror: an Up in Column m also points at every cell of Row -m.
class AltTableauB {
public:
    AltTableauB() : AltTableauB(Arrows(Diagram::type_b(ShiftedShape{}))) {}
    explicit AltTableauB(Arrows arrows);

    [[nodiscard]] const Arrows& arrows() const { return arrows_; }
    [[nodiscard]] const Diagram& diagram() const { return arrows_.diagram(); }
    [[nodiscard]] ShiftedShape shape() const { return diagram().shifted(); }
    [[nodiscard]] int length() const { return diagram().length(); }
    [[nodiscard]] Arrow at(int row_label, int col_label) const { return arrows_.at(row_label, col_label); }
    /// Column labels without an Up, increasing.
    [[nodiscard]] std::vector<int> diagonal_ones() const;
    [[nodiscard]] bool has_up(int col_label) const;

    friend bool operator==(const AltTableauB&, const AltTableauB&) = default;

private:
    Arrows arrows_;
};

std::optional<Violation> check_alternative(const Arrows& arrows);
/// pointed[index] is true when some arrow points at that cell.
std::vector<bool> pointed_cells(const Arrows& arrows);

AltTableauA to_alternative(const TableauA& t);
AltTableauB to_alternative(const TableauB& t);
TableauA from_alternative(const AltTableauA& a);
TableauB from_alternative(const AltTableauB& a);

/// Dot grid on a type A diagram.
class BareTableau {
public:
    BareTableau() = default;
    explicit BareTableau(Bits dots) : dots_(std::move(dots)) {}
    [[nodiscard]] const Bits& dots() const { return dots_; }
    [[nodiscard]] const Diagram& diagram() const { return dots_.diagram(); }
    [[nodiscard]] const Shape& shape() const { return diagram().base(); }
    friend bool operator==(const BareTableau&, const BareTableau&) = default;

private:
    Bits dots_;
};

/// Forgets arrow directions.
BareTableau to_bare(const AltTableauA& a);
/// Topmost dot of each column becomes Up, every other dot Left. Throws
/// ValidationError on an empty column or when the result is not a valid
/// alternative representation.
AltTableauA bare_to_alternative(const BareTableau& dots);
/// Dots on the 1s of T that are topmost in their column or leftmost in
/// their row.
BareTableau bare_of(const TableauA& t);

struct StatsA {
    int urr = 0;     // unrestricted rows
    int urc = 0;     // unrestricted columns
    int topone = 0;  // 1s in Row 1
    int sign = 1;    // (-1)^urc
    friend bool operator==(const StatsA&, const StatsA&) = default;
};

struct StatsB {
    int urr = 0;
    int diag = 0;     // diagonal 1s
    int toponez = 0;  // arrows in Row m and Column |m|
    int m = 0;        // label of the topmost unrestricted row; 0 when n = 0
    friend bool operator==(const StatsB&, const StatsB&) = default;
};

StatsA stats_a(const TableauA& t);
StatsB stats_b(const TableauB& t);

/// Labels of unrestricted rows, increasing (standard representation).
std::vector<int> unrestricted_rows(const TableauA& t);
std::vector<int> unrestricted_rows(const TableauB& t);
/// Labels of columns with a 1 in Row 1 (type A), left to right.
std::vector<int> first_row_one_columns(const TableauA& t);
/// True when some column's only 1 lies in the first row.
bool has_single_first_row_one_column(const TableauA& t);

/// Statistics recomputed from the alternative representation only.
namespace alt {
std::vector<int> unrestricted_rows(const AltTableauA& a);
std::vector<int> unrestricted_rows(const AltTableauB& a);
int urc(const AltTableauA& a);
int topone(const AltTableauA& a);
StatsB stats(const AltTableauB& a);
/// Column labels with an Up in the given row.
std::vector<int> up_columns_in_row(const AltTableauB& a, int row_label);
/// Row labels with a Left in the given column.
std::vector<int> left_rows_in_column(const AltTableauB& a, int col_label);
}  // namespace alt

}  // namespace ptab
