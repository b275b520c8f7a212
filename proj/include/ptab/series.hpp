#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ptab/poly.hpp"

namespace ptab {

class NonUnitConstantTerm : public std::domain_error {
public:
    NonUnitConstantTerm() : std::domain_error("reciprocal needs a constant term of +1 or -1") {}
};

/// Power series in x known up to and including x^order. Coefficients are
/// polynomials in t alone. Binary operations on series of different orders
/// return a series of the smaller order.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(int order);
    /// Missing trailing coefficients are zero; extra ones are dropped.
    TruncatedSeries(int order, std::vector<MultiPoly> coefficients);

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const MultiPoly& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    [[nodiscard]] const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

    /// Same series cut down to a smaller order.
    [[nodiscard]] TruncatedSeries truncate(int order) const;
    /// Multiply by x (the top coefficient falls off).
    [[nodiscard]] TruncatedSeries shift() const;
    /// Substitute an integer for t in every coefficient.
    [[nodiscard]] TruncatedSeries at_t(const BigInt& t) const;
    /// Throws NonUnitConstantTerm.
    [[nodiscard]] TruncatedSeries reciprocal() const;

    /// "c0 + c1*x + (c2)*x^2 + ..."; zero coefficients are skipped.
    [[nodiscard]] std::string str() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Coefficient-wise scaling by a polynomial in t.
    friend TruncatedSeries operator*(const MultiPoly& c, const TruncatedSeries& s);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int order_ = 0;
    std::vector<MultiPoly> coeffs_;
};

/// A series whose only coefficient is the constant c.
TruncatedSeries constant_series(int order, const MultiPoly& c);

}  // namespace ptab
