#include "ptab/enumerate.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "ptab/io.hpp"

namespace ptab {

Method parse_method(const std::string& name)
{
    if (name == "direct" || name == "DIRECT") return Method::Direct;
    if (name == "bijection" || name == "BIJECTION") return Method::Bijection;
    throw std::invalid_argument("unknown method '" + name + "'");
}

const char* to_string(Method m) { return m == Method::Direct ? "direct" : "bijection"; }

Limits Limits::with_max_n(int n)
{
    Limits l;
    l.a = n;
    l.b = n;
    l.brute_force = n + 1;
    return l;
}

Limits Limits::from_env()
{
    const char* value = std::getenv("PTAB_MAX_N");
    if (!value || !*value) return {};
    char* end = nullptr;
    const long n = std::strtol(value, &end, 10);
    if (*end != '\0' || n < 0 || n > 20) throw std::invalid_argument("PTAB_MAX_N must be an integer in 0..20");
    return with_max_n(static_cast<int>(n));
}

namespace {

void check(int n, int bound, const char* what)
{
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n > bound)
        throw LimitExceeded(std::string(what) + " limited to n <= " + std::to_string(bound) + ", got n = " +
                            std::to_string(n) + " (raise with PTAB_MAX_N)");
}

}  // namespace

void Limits::check_a(int n) const { check(n, a, "type A enumeration"); }
void Limits::check_b(int n) const { check(n, b, "type B enumeration"); }
void Limits::check_brute_force(int n) const { check(n, brute_force, "brute-force scan"); }

// ---------------------------------------------------------------------------

std::uint64_t count_permutations(int n)
{
    if (n < 0 || n > 20) throw std::out_of_range("n! overflows 64 bits");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t count_signed_permutations(int n)
{
    if (n > 15) throw std::out_of_range("2^n n! overflows 64 bits");
    return count_permutations(n) << n;
}

Permutation unrank_permutation(int n, std::uint64_t rank)
{
    if (rank >= count_permutations(n)) throw std::out_of_range("permutation rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> word;
    for (int i = n; i >= 1; --i) {
        const std::uint64_t block = count_permutations(i - 1);
        const auto pick = static_cast<std::size_t>(rank / block);
        rank %= block;
        word.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Permutation(std::move(word));
}

namespace {

SignedPermutation apply_signs(const Permutation& p, std::uint64_t mask)
{
    std::vector<int> word(p.word().begin(), p.word().end());
    for (std::size_t i = 0; i < word.size(); ++i)
        if (mask >> i & 1U) word[i] = -word[i];
    return SignedPermutation(std::move(word));
}

}  // namespace

SignedPermutation unrank_signed_permutation(int n, std::uint64_t rank)
{
    if (rank >= count_signed_permutations(n)) throw std::out_of_range("signed permutation rank out of range");
    return apply_signs(unrank_permutation(n, rank >> n), rank & ((std::uint64_t{1} << n) - 1));
}

void for_each_permutation(int n, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(const Permutation&)>& fn)
{
    end = std::min(end, count_permutations(n));
    if (begin >= end) return;
    const Permutation first = unrank_permutation(n, begin);
    std::vector<int> word(first.word().begin(), first.word().end());
    for (std::uint64_t r = begin; r < end; ++r) {
        fn(Permutation(word));
        std::next_permutation(word.begin(), word.end());
    }
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn)
{
    for_each_permutation(n, 0, count_permutations(n), fn);
}

void for_each_signed_permutation(int n, std::uint64_t begin, std::uint64_t end,
                                 const std::function<void(const SignedPermutation&)>& fn)
{
    end = std::min(end, count_signed_permutations(n));
    if (begin >= end) return;
    const std::uint64_t masks = std::uint64_t{1} << n;
    std::uint64_t r = begin;
    for_each_permutation(n, begin >> n, ((end - 1) >> n) + 1, [&](const Permutation& p) {
        for (std::uint64_t mask = r & (masks - 1); mask < masks && r < end; ++mask, ++r) fn(apply_signs(p, mask));
    });
}

void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& fn)
{
    for_each_signed_permutation(n, 0, count_signed_permutations(n), fn);
}

std::vector<Permutation> enumerate_perms(int n)
{
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

std::vector<SignedPermutation> enumerate_signed_perms(int n)
{
    std::vector<SignedPermutation> out;
    for_each_signed_permutation(n, [&](const SignedPermutation& p) { out.push_back(p); });
    return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
std::vector<T> direct(int n, Kind kind)
{
    std::vector<std::pair<std::string, T>> found;
    for_each_shape(n, kind, [&](const Shape& shape) {
        const Diagram d = kind == Kind::A ? Diagram::type_a(shape) : Diagram::type_b(ShiftedShape(shape));
        const int cells = d.cell_count();
        std::vector<std::uint8_t> values(static_cast<std::size_t>(cells));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
            for (int c = 0; c < cells; ++c) values[c] = static_cast<std::uint8_t>(mask >> c & 1U);
            Bits bits(d, values);
            if (check_tableau(bits)) continue;
            T t(std::move(bits));
            found.emplace_back(to_json(t).dump(), std::move(t));
        }
    });
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<T> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

}  // namespace

TableauA pt_at(int n, std::uint64_t rank) { return from_alternative(cn_inverse(unrank_permutation(n, rank))); }
TableauB ptb_at(int n, std::uint64_t rank) { return from_alternative(cnb_inverse(unrank_signed_permutation(n, rank))); }

std::vector<TableauA> enumerate_pt(int n, Method method, const Limits& limits)
{
    if (method == Method::Direct) {
        limits.check_a(n);
        return direct<TableauA>(n, Kind::A);
    }
    std::vector<TableauA> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(from_alternative(cn_inverse(p))); });
    return out;
}

std::vector<TableauB> enumerate_ptb(int n, Method method, const Limits& limits)
{
    if (method == Method::Direct) {
        limits.check_b(n);
        return direct<TableauB>(n, Kind::B);
    }
    std::vector<TableauB> out;
    for_each_signed_permutation(n, [&](const SignedPermutation& p) { out.push_back(from_alternative(cnb_inverse(p))); });
    return out;
}

std::uint64_t count_connected(int n, const Limits& limits)
{
    limits.check_brute_force(n);
    std::uint64_t count = 0;
    for_each_permutation(n, [&](const Permutation& p) { count += is_connected(p) ? 1 : 0; });
    return count;
}

std::uint64_t count_shift_connected(int n, const Limits& limits)
{
    limits.check_brute_force(n);
    std::uint64_t count = 0;
    for_each_permutation(n, [&](const Permutation& p) { count += is_shift_connected(p) ? 1 : 0; });
    return count;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranges(std::uint64_t total, int parts)
{
    if (parts < 1) throw std::invalid_argument("need at least one partition");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const auto p = static_cast<std::uint64_t>(parts);
    for (std::uint64_t k = 0; k < p; ++k) out.emplace_back(total * k / p, total * (k + 1) / p);
    return out;
}

}  // namespace ptab
