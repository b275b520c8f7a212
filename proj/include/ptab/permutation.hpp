#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptab {

/// A permutation of [n] in one-line notation.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless the entries are exactly 1..n.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    /// Parses "4,6,5,2"; the empty string is the permutation of [0].
    static Permutation parse(std::string_view text);

    [[nodiscard]] int size() const { return static_cast<int>(word_.size()); }
    [[nodiscard]] int operator[](std::size_t i) const { return word_[i]; }
    [[nodiscard]] std::span<const int> word() const& { return word_; }
    std::span<const int> word() const&& = delete;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

/// An element of B_n: a permutation of [n] with some entries negated.
class SignedPermutation {
public:
    SignedPermutation() = default;
    /// Throws std::invalid_argument unless {|w_i|} = [n].
    explicit SignedPermutation(std::vector<int> word);
    explicit SignedPermutation(const Permutation& p);

    static SignedPermutation parse(std::string_view text);

    [[nodiscard]] int size() const { return static_cast<int>(word_.size()); }
    [[nodiscard]] int operator[](std::size_t i) const { return word_[i]; }
    [[nodiscard]] std::span<const int> word() const& { return word_; }
    std::span<const int> word() const&& = delete;
    [[nodiscard]] std::string str() const;
    /// neg(pi): number of negative entries.
    [[nodiscard]] int negatives() const;
    [[nodiscard]] bool all_positive() const { return negatives() == 0; }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> word_;
};

/// Comma-separated signed integers, no spaces.
std::string join_word(std::span<const int> word);
/// Inverse of join_word. Throws std::invalid_argument on malformed text.
std::vector<int> split_word(std::string_view text);

}  // namespace ptab
