#include <doctest.h>

#include "oracles.hpp"
#include "ptab/closed_forms.hpp"

using namespace ptab;
using namespace ptab::vars;

namespace {

// Coefficients of a series evaluated at an integer t.
std::vector<BigInt> at(const TruncatedSeries& s, long long t)
{
    std::vector<BigInt> out;
    const TruncatedSeries e = s.at_t(t);
    for (int n = 0; n <= e.order(); ++n) out.push_back(e[n].constant_term());
    return out;
}

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("algebra")
{
    TEST_CASE("polynomial printing")
    {
        CHECK(MultiPoly().str() == "0");
        CHECK(MultiPoly(7).str() == "7");
        CHECK((x + y).str() == "x + y");
        CHECK(pow(x + y, 2).str() == "x^2 + 2*x*y + y^2");
        CHECK((1 - x).str() == "1 - x");
        CHECK((-x).str() == "-x");
        CHECK((x * y * z * t - 3 * z).str() == "-3*z + x*y*z*t");
    }

    TEST_CASE("polynomial arithmetic and evaluation")
    {
        const MultiPoly p = pow(1 + z, 2) * (x + y);
        CHECK(p.coefficient({1, 0, 1, 0}) == 2);
        CHECK(p.degree(Var::Z) == 2);
        CHECK(p.total_degree() == 3);
        CHECK(p.eval({{Var::Z, 1}}) == 4 * (x + y));
        CHECK(p.eval_int({{Var::X, 1}, {Var::Y, 1}, {Var::Z, 1}}) == 8);
        CHECK((x - x).is_zero());
        CHECK(((x + 1) * (x - 1)) == x * x - 1);
        CHECK((3 * t).only_in(Var::T));
        CHECK_FALSE((x * t).only_in(Var::T));
    }

    TEST_CASE("rising factorials")
    {
        CHECK(rising_factorial(x, 3) == x * (x + 1) * (x + 2));
        CHECK(rising_factorial(2, 3) == 24);
        CHECK(rising_factorial(x + y, 0) == 1);
        CHECK((1 + z) * rising_factorial(x + y, 0) == 1 + z);
        CHECK(factorial(20) == BigInt("2432902008176640000"));
        CHECK(binomial(10, 3) == 120);
        CHECK(binomial(3, 5) == 0);
    }

    TEST_CASE("Stirling numbers of the first kind by cycle counts")
    {
        for (int n = 0; n <= 7; ++n) {
            std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1);
            for (const auto& p : oracle::all_permutations(n)) ++counts[static_cast<std::size_t>(oracle::cycle_count(p))];
            for (int k = 0; k <= n; ++k) CHECK(stirling_cycle(n, k) == counts[static_cast<std::size_t>(k)]);
        }
        MultiPoly sum;
        for (int k = 0; k <= 4; ++k) sum += stirling_cycle(4, k) * pow(x, k);
        CHECK(sum == rising_factorial(x, 4));
        CHECK_THROWS_AS(stirling_cycle(3, 4), std::out_of_range);
        for (int n = 1; n <= 10; ++n) CHECK(stirling_bivariate(n) == rising_factorial(x + y, n - 1));
    }

    TEST_CASE("series reciprocal and arithmetic")
    {
        const TruncatedSeries one_minus_x(5, {1, -1});
        CHECK(at(one_minus_x.reciprocal(), 0) == ints({1, 1, 1, 1, 1, 1}));
        const TruncatedSeries s(4, {1, 1 + t, t * t});
        CHECK((s * s.reciprocal()) == constant_series(4, 1));
        CHECK(s.shift()[1] == 1);
        CHECK(s.str() == "1 + (1 + t)*x + t^2*x^2");
        CHECK(TruncatedSeries(3, {2, 1}).str() == "2 + x");
        CHECK_THROWS_AS(static_cast<void>(TruncatedSeries(3, {2, 1}).reciprocal()), NonUnitConstantTerm);
        CHECK_THROWS_AS(TruncatedSeries(3, {x}), std::invalid_argument);
        CHECK((s + TruncatedSeries(2)).order() == 2);
        CHECK(s.truncate(1) == TruncatedSeries(1, {1, 1 + t}));
    }

    TEST_CASE("generating functions")
    {
        CHECK(at(connected_series(5), 0) == ints({0, 1, 1, 3, 13, 71}));
        CHECK(at(p_t_closed(4), 2) == ints({1, 1, 3, 13, 71}));
        CHECK(at(p_t_closed(4), -1) == ints({1, 1, 0, -2, -4}));
        CHECK(at(e_t_series(2), -1) == ints({0, 1, -2}));
        const TruncatedSeries e = e_t_series(4);
        CHECK(e[3] == 3 * t * (t + 1));

        const TruncatedSeries p = p_t_closed(10);
        const std::vector<BigInt> at_one = at(p, 1);
        for (int n = 0; n <= 10; ++n) CHECK(at_one[static_cast<std::size_t>(n)] == factorial(n));

        const TruncatedSeries lhs = constant_series(10, 1) + e_t_series(10);
        const TruncatedSeries rhs = p * (constant_series(10, 1) + (t - 1) * e_t_series(10).shift());
        CHECK(lhs == rhs);
    }

    TEST_CASE("sign imbalance closed forms")
    {
        CHECK(sign_imbalance_closed(1) == 1);
        CHECK(sign_imbalance_closed(2) == 0);
        CHECK(sign_imbalance_closed(3) == -2);
        CHECK(sign_imbalance_closed(4) == -4);
        CHECK(sign_imbalance_closed(8) == 16);
        for (int n = 0; n <= 64; ++n) CHECK(sign_imbalance_gaussian(n) == sign_imbalance_cases(n));

        GaussianInt sum = pow(GaussianInt{1, 1}, 13) + pow(GaussianInt{1, -1}, 13);
        CHECK(sum.im == 0);
        CHECK(sum.re == 2 * sign_imbalance_cases(13));
    }

    TEST_CASE("closed polynomial families")
    {
        CHECK(urr_topone_closed(1) == 1);
        CHECK(urr_topone_closed(2) == x + y);
        CHECK(type_b_closed(1) == 1 + z);
        CHECK(type_b_closed(2) == (1 + z) * (1 + z) * (x + y));
        CHECK_THROWS_AS(urr_topone_closed(0), std::invalid_argument);
        CHECK(urr_topone_closed(5).eval_int({{Var::X, 1}, {Var::Y, 1}}) == 120);
    }
}
