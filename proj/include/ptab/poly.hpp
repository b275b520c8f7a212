#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace ptab {

using BigInt = boost::multiprecision::cpp_int;

enum class Var { X = 0, Y = 1, Z = 2, T = 3 };
inline constexpr int kNumVars = 4;

/// Exponents of x, y, z, t in that order.
using Exponents = std::array<int, kNumVars>;

/// Sparse polynomial in x, y, z, t with integer coefficients. Zero
/// coefficients are never stored.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long long c);  // NOLINT: implicit constant
    MultiPoly(const BigInt& c);  // NOLINT

    static MultiPoly var(Var v);
    static MultiPoly monomial(const Exponents& e, const BigInt& c = 1);
    /// x^a y^b z^c t^d with a coefficient of 1.
    static MultiPoly monomial(int x, int y = 0, int z = 0, int t = 0) { return monomial(Exponents{x, y, z, t}); }

    [[nodiscard]] const std::map<Exponents, BigInt>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] BigInt coefficient(const Exponents& e) const;
    [[nodiscard]] BigInt constant_term() const { return coefficient({0, 0, 0, 0}); }
    [[nodiscard]] int degree(Var v) const;
    [[nodiscard]] int total_degree() const;
    /// True when no variable other than `v` occurs.
    [[nodiscard]] bool only_in(Var v) const;

    /// Substitutes integers for the listed variables; the rest stay symbolic.
    [[nodiscard]] MultiPoly eval(std::initializer_list<std::pair<Var, BigInt>> values) const;
    /// Substitutes integers for every variable (missing ones count as 0).
    [[nodiscard]] BigInt eval_int(std::initializer_list<std::pair<Var, BigInt>> values) const;

    /// Terms by increasing total degree, graded lex within a degree:
    /// "x + y + x^2 + 2*x*y + y^2". The zero polynomial prints as "0".
    [[nodiscard]] std::string str() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    /// Adds c * x^e in place.
    void add_term(const Exponents& e, const BigInt& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly{} - a; }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    std::map<Exponents, BigInt> terms_;
};

MultiPoly pow(const MultiPoly& base, int e);

namespace vars {
inline const MultiPoly x = MultiPoly::var(Var::X);
inline const MultiPoly y = MultiPoly::var(Var::Y);
inline const MultiPoly z = MultiPoly::var(Var::Z);
inline const MultiPoly t = MultiPoly::var(Var::T);
}  // namespace vars

}  // namespace ptab
