#include "ptab/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ptab {

namespace {

void require_permutation_of_abs(const std::vector<int>& word, bool allow_signs)
{
    const auto n = static_cast<int>(word.size());
    std::vector<bool> seen(word.size() + 1, false);
    for (int v : word) {
        if (v < 0 && !allow_signs) throw std::invalid_argument("negative entry in permutation: " + std::to_string(v));
        const int a = std::abs(v);
        if (a < 1 || a > n) throw std::invalid_argument("entry out of range 1.." + std::to_string(n) + ": " + std::to_string(v));
        if (seen[a]) throw std::invalid_argument("repeated entry: " + std::to_string(a));
        seen[a] = true;
    }
}

}  // namespace

std::string join_word(std::span<const int> word)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

std::vector<int> split_word(std::string_view text)
{
    std::vector<int> out;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        auto field = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (!field.empty() && field.front() == '+') field.remove_prefix(1);
        int value = 0;
        const auto* first = field.data();
        const auto* last = field.data() + field.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (field.empty() || ec != std::errc() || ptr != last)
            throw std::invalid_argument("malformed integer in word: '" + std::string(field) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word))
{
    require_permutation_of_abs(word_, false);
}

Permutation Permutation::identity(int n)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(split_word(text)); }

std::string Permutation::str() const { return join_word(word_); }

SignedPermutation::SignedPermutation(std::vector<int> word) : word_(std::move(word))
{
    require_permutation_of_abs(word_, true);
}

SignedPermutation::SignedPermutation(const Permutation& p) : word_(p.word().begin(), p.word().end()) {}

SignedPermutation SignedPermutation::parse(std::string_view text) { return SignedPermutation(split_word(text)); }

std::string SignedPermutation::str() const { return join_word(word_); }

int SignedPermutation::negatives() const
{
    return static_cast<int>(std::count_if(word_.begin(), word_.end(), [](int v) { return v < 0; }));
}

}  // namespace ptab
