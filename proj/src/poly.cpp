#include "ptab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ptab {

MultiPoly::MultiPoly(long long c) : MultiPoly(BigInt(c)) {}

MultiPoly::MultiPoly(const BigInt& c)
{
    if (c != 0) terms_[{0, 0, 0, 0}] = c;
}

MultiPoly MultiPoly::var(Var v)
{
    Exponents e{0, 0, 0, 0};
    e[static_cast<int>(v)] = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const BigInt& c)
{
    for (int k : e)
        if (k < 0) throw std::invalid_argument("negative exponent");
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

BigInt MultiPoly::coefficient(const Exponents& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int MultiPoly::degree(Var v) const
{
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
}

int MultiPoly::total_degree() const
{
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool MultiPoly::only_in(Var v) const
{
    for (const auto& [e, c] : terms_)
        for (int k = 0; k < kNumVars; ++k)
            if (k != static_cast<int>(v) && e[k] != 0) return false;
    return true;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int k = 0; k < kNumVars; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly pow(const MultiPoly& base, int e)
{
    if (e < 0) throw std::invalid_argument("negative power");
    MultiPoly result(1);
    MultiPoly square = base;
    while (e > 0) {
        if (e & 1) result *= square;
        e >>= 1;
        if (e > 0) square *= square;
    }
    return result;
}

MultiPoly MultiPoly::eval(std::initializer_list<std::pair<Var, BigInt>> values) const
{
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        BigInt coeff = c;
        for (const auto& [v, value] : values) {
            const int k = static_cast<int>(v);
            coeff *= boost::multiprecision::pow(value, static_cast<unsigned>(rest[k]));
            rest[k] = 0;
        }
        out.add_term(rest, coeff);
    }
    return out;
}

BigInt MultiPoly::eval_int(std::initializer_list<std::pair<Var, BigInt>> values) const
{
    MultiPoly p = eval(values);
    BigInt sum = 0;
    for (const auto& [e, c] : p.terms_)
        if (e == Exponents{0, 0, 0, 0}) sum += c;
    return sum;
}

namespace {

constexpr const char* kNames[kNumVars] = {"x", "y", "z", "t"};

std::string monomial_str(const Exponents& e)
{
    std::string out;
    for (int k = 0; k < kNumVars; ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += kNames[k];
        if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
    return out;
}

}  // namespace

std::string MultiPoly::str() const
{
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, BigInt>> sorted(terms_.begin(), terms_.end());
    const auto total = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        if (total(a.first) != total(b.first)) return total(a.first) < total(b.first);
        return a.first > b.first;
    });

    std::string out;
    for (const auto& [e, c] : sorted) {
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string mono = monomial_str(e);
        if (mono.empty())
            out += magnitude.str();
        else if (magnitude == 1)
            out += mono;
        else
            out += magnitude.str() + "*" + mono;
    }
    return out;
}

}  // namespace ptab
