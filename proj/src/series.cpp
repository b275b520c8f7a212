#include "ptab/series.hpp"

#include <algorithm>

namespace ptab {

TruncatedSeries::TruncatedSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1)
{
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<MultiPoly> coefficients) : TruncatedSeries(order)
{
    for (std::size_t n = 0; n < coefficients.size() && n < coeffs_.size(); ++n) {
        if (!coefficients[n].only_in(Var::T))
            throw std::invalid_argument("series coefficients must be polynomials in t");
        coeffs_[n] = std::move(coefficients[n]);
    }
}

TruncatedSeries constant_series(int order, const MultiPoly& c) { return TruncatedSeries(order, {c}); }

TruncatedSeries TruncatedSeries::truncate(int order) const
{
    if (order > order_) throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(order, coeffs_);
}

TruncatedSeries TruncatedSeries::shift() const
{
    TruncatedSeries out(order_);
    for (int n = 1; n <= order_; ++n) out.coeffs_[n] = coeffs_[n - 1];
    return out;
}

TruncatedSeries TruncatedSeries::at_t(const BigInt& t) const
{
    TruncatedSeries out(order_);
    for (int n = 0; n <= order_; ++n) out.coeffs_[n] = coeffs_[n].eval({{Var::T, t}});
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries out(std::min(a.order_, b.order_));
    for (int n = 0; n <= out.order_; ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries out(std::min(a.order_, b.order_));
    for (int n = 0; n <= out.order_; ++n) out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries out(std::min(a.order_, b.order_));
    for (int i = 0; i <= out.order_; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= out.order_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

TruncatedSeries operator*(const MultiPoly& c, const TruncatedSeries& s)
{
    if (!c.only_in(Var::T)) throw std::invalid_argument("series scalars must be polynomials in t");
    TruncatedSeries out(s.order_);
    for (int n = 0; n <= s.order_; ++n) out.coeffs_[n] = c * s.coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const
{
    const MultiPoly& c0 = coeffs_[0];
    const bool unit = c0 == MultiPoly(1) || c0 == MultiPoly(-1);
    if (!unit) throw NonUnitConstantTerm();
    // b_0 = 1/c0 and c0 * b_n = -sum_{i >= 1} a_i b_{n-i}; 1/c0 = c0 for a unit.
    TruncatedSeries out(order_);
    out.coeffs_[0] = c0;
    for (int n = 1; n <= order_; ++n) {
        MultiPoly acc;
        for (int i = 1; i <= n; ++i) acc += coeffs_[i] * out.coeffs_[n - i];
        out.coeffs_[n] = -(c0 * acc);
    }
    return out;
}

std::string TruncatedSeries::str() const
{
    std::string out;
    for (int n = 0; n <= order_; ++n) {
        const MultiPoly& c = coeffs_[n];
        if (c.is_zero()) continue;
        std::string coeff = c.str();
        bool negative = false;
        if (c.terms().size() == 1 && coeff.front() == '-') {
            negative = true;
            coeff.erase(0, 1);
        }
        std::string term;
        if (n == 0) {
            term = coeff;
        } else {
            const std::string power = n == 1 ? "x" : "x^" + std::to_string(n);
            if (c.terms().size() > 1)
                term = "(" + coeff + ")*" + power;
            else if (coeff == "1")
                term = power;
            else
                term = coeff + "*" + power;
        }
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace ptab
