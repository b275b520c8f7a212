#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptab/permutation.hpp"

namespace ptab {

enum class Kind { A, B };

enum class Step : char { S = 'S', W = 'W' };

/// A Ferrers diagram encoded by its south-east border, read from the
/// north-east corner to the south-west corner. Step i (1-based) labels the
/// row (S) or column (W) it belongs to.
///
/// The cell in Row r and Column c exists iff r is a row label, c is a
/// column label and r < c.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Step> border);

    /// Throws std::invalid_argument on any symbol other than 'S' or 'W'.
    static Shape from_border(std::string_view word);

    [[nodiscard]] std::span<const Step> border() const { return border_; }
    [[nodiscard]] std::string border_string() const;
    [[nodiscard]] int length() const { return static_cast<int>(border_.size()); }
    [[nodiscard]] int num_rows() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] int num_cols() const { return static_cast<int>(cols_.size()); }

    /// Row labels top to bottom (increasing).
    [[nodiscard]] std::span<const int> row_labels() const { return rows_; }
    /// Column labels left to right (decreasing).
    [[nodiscard]] std::span<const int> col_labels() const { return cols_; }

    [[nodiscard]] bool is_row(int label) const;
    [[nodiscard]] bool is_col(int label) const;
    /// Number of cells in the given row; 0 for an unknown label.
    [[nodiscard]] int row_length(int row_label) const;
    [[nodiscard]] int col_height(int col_label) const;
    /// Row lengths top to bottom.
    [[nodiscard]] std::vector<int> row_lengths() const;

    [[nodiscard]] bool has_cell(int row_label, int col_label) const
    {
        return is_row(row_label) && is_col(col_label) && row_label < col_label;
    }

    /// True when no W precedes the first S, i.e. no column is empty.
    [[nodiscard]] bool valid_for_type_a() const;

    friend bool operator==(const Shape& a, const Shape& b) { return a.border_ == b.border_; }

private:
    std::vector<Step> border_;
    std::vector<int> rows_;
    std::vector<int> cols_;
};

/// The shifted diagram of a base shape with k columns: k staircase rows of
/// sizes 1..k sit above the base. The added row whose diagonal cell lies in
/// Column c carries label -c. Only the base is stored.
class ShiftedShape {
public:
    ShiftedShape() = default;
    explicit ShiftedShape(Shape base) : base_(std::move(base)) {}

    [[nodiscard]] const Shape& base() const { return base_; }
    [[nodiscard]] int length() const { return base_.length(); }

    /// All row labels top to bottom: -c_k < ... < -c_1 followed by the base rows.
    [[nodiscard]] std::vector<int> row_labels() const;
    [[nodiscard]] std::span<const int> col_labels() const { return base_.col_labels(); }

    [[nodiscard]] bool is_row(int label) const
    {
        return label < 0 ? base_.is_col(-label) : base_.is_row(label);
    }
    [[nodiscard]] bool is_col(int label) const { return base_.is_col(label); }
    [[nodiscard]] bool has_cell(int row_label, int col_label) const
    {
        if (row_label < 0) return base_.is_col(-row_label) && base_.is_col(col_label) && col_label >= -row_label;
        return base_.has_cell(row_label, col_label);
    }
    [[nodiscard]] static bool is_diagonal(int row_label, int col_label)
    {
        return row_label < 0 && col_label == -row_label;
    }

    friend bool operator==(const ShiftedShape& a, const ShiftedShape& b) = default;

private:
    Shape base_;
};

struct Labels {
    std::vector<int> rows;  // top to bottom
    std::vector<int> cols;  // left to right
    friend bool operator==(const Labels&, const Labels&) = default;
};

Labels labels(const Shape& shape);
Labels labels(const ShiftedShape& shape);

/// Shape of a (signed) permutation: |pi_i| labels a column iff pi_i is a
/// signed descent (pi_i < 0 or pi_i > |pi_{i+1}|, with pi_{n+1} = n+1).
ShiftedShape shape_from_descents(const SignedPermutation& pi);

/// Every border word of length n in lexicographic order ('S' < 'W').
/// Kind A skips words with a W before the first S.
void for_each_shape(int n, Kind kind, const std::function<void(const Shape&)>& fn);
std::vector<Shape> enumerate_shapes(int n, Kind kind);

/// Row/column geometry of a (shifted) diagram, addressed by labels and by
/// row-major cell index. Rows run top to bottom, columns left to right, and
/// every row is left-justified, so row i occupies columns 0..row_size(i)-1.
class Diagram {
public:
    Diagram() = default;
    static Diagram type_a(const Shape& shape);
    static Diagram type_b(const ShiftedShape& shape);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const Shape& base() const { return base_; }
    [[nodiscard]] ShiftedShape shifted() const { return ShiftedShape(base_); }
    [[nodiscard]] int length() const { return base_.length(); }

    [[nodiscard]] std::span<const int> rows() const { return rows_; }
    [[nodiscard]] std::span<const int> cols() const { return base_.col_labels(); }
    [[nodiscard]] int num_rows() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] int num_cols() const { return base_.num_cols(); }

    /// Geometric index of a label, or -1 when absent.
    [[nodiscard]] int row_index(int row_label) const;
    [[nodiscard]] int col_index(int col_label) const;

    [[nodiscard]] int row_size(int i) const { return row_size_[i]; }
    /// Column j occupies rows col_top(j)..col_bottom(j)-1. The top is row 0
    /// for type A and the diagonal row of the column for type B.
    [[nodiscard]] int col_top(int j) const { return col_top_[j]; }
    [[nodiscard]] int col_bottom(int j) const { return col_bottom_[j]; }

    [[nodiscard]] int cell_count() const { return static_cast<int>(offset_.empty() ? 0 : offset_.back()); }
    [[nodiscard]] int index(int i, int j) const { return offset_[i] + j; }
    [[nodiscard]] bool contains(int i, int j) const { return i >= 0 && i < num_rows() && j >= 0 && j < row_size_[i]; }
    /// Diagonal cells exist only for type B: the last cell of an added row.
    [[nodiscard]] bool is_diagonal(int i, int j) const
    {
        return kind_ == Kind::B && rows_[i] < 0 && j == row_size_[i] - 1;
    }
    [[nodiscard]] bool has_cell(int row_label, int col_label) const;

    friend bool operator==(const Diagram& a, const Diagram& b)
    {
        return a.kind_ == b.kind_ && a.base_ == b.base_;
    }

private:
    void build();

    Kind kind_ = Kind::A;
    Shape base_;
    std::vector<int> rows_;
    std::vector<int> row_size_;
    std::vector<int> col_top_;
    std::vector<int> col_bottom_;
    std::vector<int> offset_;
};

}  // namespace ptab
