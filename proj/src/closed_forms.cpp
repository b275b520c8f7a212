#include "ptab/closed_forms.hpp"

#include <string>
#include <vector>

namespace ptab {

GaussianInt pow(GaussianInt base, int e)
{
    if (e < 0) throw std::invalid_argument("negative power");
    GaussianInt result{1, 0};
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

MultiPoly rising_factorial(const MultiPoly& base, int n)
{
    if (n < 0) throw std::invalid_argument("rising factorial of negative length");
    MultiPoly out(1);
    for (int i = 0; i < n; ++i) out *= base + MultiPoly(i);
    return out;
}

BigInt factorial(int n)
{
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

BigInt stirling_cycle(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("stirling_cycle(" + std::to_string(n) + "," + std::to_string(k) + ")");
    std::vector<BigInt> row{1};  // c(0, *)
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, 0);
        for (int j = 0; j <= m; ++j) {
            if (j >= 1) next[j] += row[j - 1];
            if (j < m) next[j] += BigInt(m - 1) * row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

MultiPoly stirling_bivariate(int n)
{
    if (n < 1) throw std::invalid_argument("stirling_bivariate needs n >= 1");
    MultiPoly out;
    for (int s = 0; s <= n - 1; ++s) {
        const BigInt c = stirling_cycle(n - 1, s);
        for (int i = 0; i <= s; ++i) out.add_term({i, s - i, 0, 0}, c * binomial(s, i));
    }
    return out;
}

TruncatedSeries e_t_series(int order)
{
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) coeffs[n] = MultiPoly(n) * rising_factorial(vars::t, n - 1);
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries p_t_closed(int order)
{
    const TruncatedSeries e = e_t_series(order);
    const TruncatedSeries one = constant_series(order, 1);
    const TruncatedSeries denominator = one + (vars::t - MultiPoly(1)) * e.shift();
    return (one + e) * denominator.reciprocal();
}

TruncatedSeries connected_series(int order)
{
    std::vector<MultiPoly> coeffs;
    for (int n = 0; n <= order; ++n) coeffs.emplace_back(factorial(n));
    return constant_series(order, 1) - TruncatedSeries(order, std::move(coeffs)).reciprocal();
}

BigInt sign_imbalance_gaussian(int n)
{
    const GaussianInt sum = pow(GaussianInt{1, 1}, n) + pow(GaussianInt{1, -1}, n);
    if (sum.im != 0) throw InternalMismatch("(1+i)^n + (1-i)^n has a nonzero imaginary part");
    return sum.re / 2;
}

BigInt sign_imbalance_cases(int n)
{
    if (n < 0) throw std::invalid_argument("sign imbalance of negative length");
    const int k = n / 4;
    const int r = n % 4;
    const BigInt sign = (k % 2 == 0) ? 1 : -1;
    switch (r) {
    case 0:
    case 1: return sign * (BigInt(1) << (2 * k));
    case 2: return 0;
    default: return -sign * (BigInt(1) << (2 * k + 1));
    }
}

BigInt sign_imbalance_closed(int n)
{
    const BigInt g = sign_imbalance_gaussian(n);
    const BigInt c = sign_imbalance_cases(n);
    if (g != c)
        throw InternalMismatch("sign imbalance: Gaussian " + g.str() + " vs case table " + c.str() + " at n=" +
                               std::to_string(n));
    return g;
}

MultiPoly urr_topone_closed(int n)
{
    if (n < 1) throw std::invalid_argument("urr_topone_closed needs n >= 1");
    return rising_factorial(vars::x + vars::y, n - 1);
}

MultiPoly type_b_closed(int n)
{
    if (n < 1) throw std::invalid_argument("type_b_closed needs n >= 1");
    return pow(MultiPoly(1) + vars::z, n) * rising_factorial(vars::x + vars::y, n - 1);
}

}  // namespace ptab
