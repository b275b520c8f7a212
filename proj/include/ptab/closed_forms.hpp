#pragma once

#include <stdexcept>

#include "ptab/poly.hpp"
#include "ptab/series.hpp"

namespace ptab {

/// a + b*i with exact integer parts.
struct GaussianInt {
    BigInt re = 0;
    BigInt im = 0;

    friend GaussianInt operator+(const GaussianInt& p, const GaussianInt& q) { return {p.re + q.re, p.im + q.im}; }
    friend GaussianInt operator*(const GaussianInt& p, const GaussianInt& q)
    {
        return {p.re * q.re - p.im * q.im, p.re * q.im + p.im * q.re};
    }
    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt pow(GaussianInt base, int e);

/// Raised by closed forms that are computed two ways when the two disagree.
class InternalMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// base (base+1) ... (base+n-1); the empty product is 1.
MultiPoly rising_factorial(const MultiPoly& base, int n);

BigInt factorial(int n);
BigInt binomial(int n, int k);
/// Signless Stirling number of the first kind; requires 0 <= k <= n.
BigInt stirling_cycle(int n, int k);
/// sum_{i,j} c(n-1, i+j) C(i+j, i) x^i y^j, for n >= 1.
MultiPoly stirling_bivariate(int n);

/// sum_{n >= 1} n (t)_{n-1} x^n up to x^order.
TruncatedSeries e_t_series(int order);
/// (1 + E_t) / (1 + (t-1) x E_t) up to x^order.
TruncatedSeries p_t_closed(int order);
/// 1 - 1 / sum_{n >= 0} n! x^n up to x^order.
TruncatedSeries connected_series(int order);

/// ((1+i)^n + (1-i)^n) / 2 by Gaussian arithmetic.
BigInt sign_imbalance_gaussian(int n);
/// The same value by the n mod 4 case table.
BigInt sign_imbalance_cases(int n);
/// Both of the above; throws InternalMismatch if they differ.
BigInt sign_imbalance_closed(int n);

/// (x+y)_{n-1}, for n >= 1.
MultiPoly urr_topone_closed(int n);
/// (1+z)^n (x+y)_{n-1}, for n >= 1.
MultiPoly type_b_closed(int n);

}  // namespace ptab
