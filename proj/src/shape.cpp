#include "ptab/shape.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ptab {

Shape::Shape(std::vector<Step> border) : border_(std::move(border))
{
    for (std::size_t i = 0; i < border_.size(); ++i) {
        const int label = static_cast<int>(i) + 1;
        if (border_[i] == Step::S)
            rows_.push_back(label);
        else
            cols_.push_back(label);
    }
    std::reverse(cols_.begin(), cols_.end());
}

Shape Shape::from_border(std::string_view word)
{
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (char ch : word) {
        if (ch == 'S')
            steps.push_back(Step::S);
        else if (ch == 'W')
            steps.push_back(Step::W);
        else
            throw std::invalid_argument(std::string("border word symbol must be S or W, got '") + ch + "'");
    }
    return Shape(std::move(steps));
}

std::string Shape::border_string() const
{
    std::string out;
    out.reserve(border_.size());
    for (Step s : border_) out += static_cast<char>(s);
    return out;
}

bool Shape::is_row(int label) const
{
    return label >= 1 && label <= length() && border_[label - 1] == Step::S;
}

bool Shape::is_col(int label) const
{
    return label >= 1 && label <= length() && border_[label - 1] == Step::W;
}

int Shape::row_length(int row_label) const
{
    if (!is_row(row_label)) return 0;
    return static_cast<int>(std::count(border_.begin() + row_label, border_.end(), Step::W));
}

int Shape::col_height(int col_label) const
{
    if (!is_col(col_label)) return 0;
    return static_cast<int>(std::count(border_.begin(), border_.begin() + (col_label - 1), Step::S));
}

std::vector<int> Shape::row_lengths() const
{
    std::vector<int> out;
    out.reserve(rows_.size());
    for (int r : rows_) out.push_back(row_length(r));
    return out;
}

bool Shape::valid_for_type_a() const
{
    return border_.empty() || border_.front() == Step::S;
}

std::vector<int> ShiftedShape::row_labels() const
{
    std::vector<int> out;
    const auto cols = base_.col_labels();  // decreasing
    for (int c : cols) out.push_back(-c);  // -c_k first: increasing
    for (int r : base_.row_labels()) out.push_back(r);
    return out;
}

Labels labels(const Shape& shape)
{
    return {{shape.row_labels().begin(), shape.row_labels().end()},
            {shape.col_labels().begin(), shape.col_labels().end()}};
}

Labels labels(const ShiftedShape& shape)
{
    return {shape.row_labels(), {shape.col_labels().begin(), shape.col_labels().end()}};
}

ShiftedShape shape_from_descents(const SignedPermutation& pi)
{
    const int n = pi.size();
    std::vector<Step> border(static_cast<std::size_t>(n), Step::S);
    for (int i = 0; i < n; ++i) {
        const int v = pi[i];
        const int next = i + 1 < n ? std::abs(pi[i + 1]) : n + 1;
        if (v < 0 || v > next) border[std::abs(v) - 1] = Step::W;
    }
    return ShiftedShape(Shape(std::move(border)));
}

void for_each_shape(int n, Kind kind, const std::function<void(const Shape&)>& fn)
{
    if (n < 0) throw std::invalid_argument("shape length must be non-negative");
    if (n == 0) {
        fn(Shape{});
        return;
    }
    // Bit (n-1-i) of the mask selects W at position i, so increasing masks
    // walk the words in lexicographic order.
    const unsigned long long total = 1ULL << n;
    for (unsigned long long mask = 0; mask < total; ++mask) {
        if (kind == Kind::A && ((mask >> (n - 1)) & 1ULL)) continue;
        std::vector<Step> steps(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) steps[i] = ((mask >> (n - 1 - i)) & 1ULL) ? Step::W : Step::S;
        fn(Shape(std::move(steps)));
    }
}

std::vector<Shape> enumerate_shapes(int n, Kind kind)
{
    std::vector<Shape> out;
    for_each_shape(n, kind, [&](const Shape& s) { out.push_back(s); });
    return out;
}

Diagram Diagram::type_a(const Shape& shape)
{
    Diagram d;
    d.kind_ = Kind::A;
    d.base_ = shape;
    d.build();
    return d;
}

Diagram Diagram::type_b(const ShiftedShape& shape)
{
    Diagram d;
    d.kind_ = Kind::B;
    d.base_ = shape.base();
    d.build();
    return d;
}

void Diagram::build()
{
    const auto cols = base_.col_labels();
    const int k = static_cast<int>(cols.size());
    rows_.clear();
    row_size_.clear();
    if (kind_ == Kind::B) {
        // Added row -c_j (j-th column from the left) has j+1 cells.
        for (int j = 0; j < k; ++j) {
            rows_.push_back(-cols[j]);
            row_size_.push_back(j + 1);
        }
    }
    for (int r : base_.row_labels()) {
        rows_.push_back(r);
        row_size_.push_back(base_.row_length(r));
    }
    offset_.assign(rows_.size() + 1, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) offset_[i + 1] = offset_[i] + row_size_[i];

    col_top_.assign(static_cast<std::size_t>(k), 0);
    col_bottom_.assign(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < k; ++j) {
        int top = -1;
        int bottom = -1;
        for (int i = 0; i < num_rows(); ++i) {
            if (j < row_size_[i]) {
                if (top < 0) top = i;
                bottom = i + 1;
            }
        }
        col_top_[j] = top < 0 ? 0 : top;
        col_bottom_[j] = bottom < 0 ? col_top_[j] : bottom;
    }
}

int Diagram::row_index(int row_label) const
{
    const auto it = std::lower_bound(rows_.begin(), rows_.end(), row_label);
    return (it != rows_.end() && *it == row_label) ? static_cast<int>(it - rows_.begin()) : -1;
}

int Diagram::col_index(int col_label) const
{
    const auto cols = base_.col_labels();
    const auto it = std::lower_bound(cols.begin(), cols.end(), col_label, std::greater<>());
    return (it != cols.end() && *it == col_label) ? static_cast<int>(it - cols.begin()) : -1;
}

bool Diagram::has_cell(int row_label, int col_label) const
{
    const int i = row_index(row_label);
    const int j = col_index(col_label);
    return i >= 0 && j >= 0 && j < row_size_[i];
}

}  // namespace ptab
