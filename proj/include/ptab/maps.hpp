#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptab/permutation.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

// ---------------------------------------------------------------------------
// Word statistics

/// Entries smaller (resp. larger) than everything to their right, in word order.
std::vector<int> rl_minima(std::span<const int> word);
std::vector<int> rl_maxima(std::span<const int> word);

struct SignedDescent {
    int position = 0;  // 0-based index into the word
    int value = 0;
    friend bool operator==(const SignedDescent&, const SignedDescent&) = default;
};

/// Signed descents ordered by increasing |value|.
std::vector<SignedDescent> signed_descents(const SignedPermutation& pi);

/// No proper prefix pi_1..pi_k (k < n) is a permutation of [k].
bool is_connected(const Permutation& pi);
/// No window pi_i..pi_j ending at the entry 1 (i < j) is a permutation of
/// [j-i+1].
bool is_shift_connected(const Permutation& pi);

// ---------------------------------------------------------------------------
// Cycle form

/// A bijection on a finite set of (signed) integers, stored as disjoint
/// cycles. Canonical form: each cycle rotated to end at its minimum, cycles
/// sorted by minimum. Equality is function equality.
class CyclePermutation {
public:
    CyclePermutation() = default;
    explicit CyclePermutation(std::vector<std::vector<int>> cycles);

    /// i -> mapping[i]. Throws std::invalid_argument unless it is a bijection.
    static CyclePermutation from_mapping(const std::map<int, int>& mapping);
    /// i -> word[i-1] for i in 1..n.
    static CyclePermutation from_one_line(std::span<const int> word);
    static CyclePermutation from_one_line(const Permutation& p) { return from_one_line(p.word()); }

    [[nodiscard]] const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    [[nodiscard]] std::map<int, int> mapping() const;
    [[nodiscard]] int apply(int x) const;
    /// "(a,b,c)(d)"; the empty permutation prints as "()".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const CyclePermutation&, const CyclePermutation&) = default;

private:
    std::vector<std::vector<int>> cycles_;
};

/// Cycles of the word cut after each RL-minimum; (a,b,c) sends a->b->c->a.
CyclePermutation phi(std::span<const int> word);
inline CyclePermutation phi(const Permutation& p) { return phi(p.word()); }
inline CyclePermutation phi(const SignedPermutation& p) { return phi(p.word()); }

// ---------------------------------------------------------------------------
// Tableaux <-> permutations

/// Starts from the increasing word of unrestricted rows, then for each
/// column from the leftmost on inserts the Left rows (increasing) and the
/// column label before the row holding the column's Up.
Permutation cn(const AltTableauA& t);
/// Restriction of cnb_inverse to positive words.
AltTableauA cn_inverse(const Permutation& pi);

SignedPermutation cnb(const AltTableauB& t);
AltTableauB cnb_inverse(const SignedPermutation& pi);

/// Result of cnb_inverse together with the residual word left after all
/// columns were filled.
struct CnbInverseTrace {
    AltTableauB tableau;
    std::vector<int> residual;
};
CnbInverseTrace cnb_inverse_traced(const SignedPermutation& pi);

/// View a type B alternative with no diagonal 1 and empty added rows as type A.
AltTableauA to_type_a(const AltTableauB& t);
/// Embed a type A alternative into type B (added rows empty).
AltTableauB to_type_b(const AltTableauA& t);

// ---------------------------------------------------------------------------
// Zigzag maps

/// Turns at every 1. Path i enters Row i from the left or Column i from the
/// top; pi_i is the label it exits through.
Permutation zigzag_standard(const TableauA& t);
/// Turns at every arrow cell.
Permutation zigzag_alternative(const AltTableauA& t);
/// Type B zigzag: every path enters a row (Row i, else Row -i) going east,
/// turns at each arrow and reflects into Column m at the diagonal cell of
/// Row -m. Returned as the map i_T -> j_T.
CyclePermutation zigzag_alternative_b_map(const AltTableauB& t);
/// Lower line of the two-line form of zigzag_alternative_b_map, with the
/// top line ordered by |i|.
SignedPermutation zigzag_alternative_b(const AltTableauB& t);

// ---------------------------------------------------------------------------
// Connected / shift-connected

class ConnectedInput : public std::invalid_argument {
public:
    ConnectedInput() : std::invalid_argument("cp_scp_map needs a permutation that is not connected") {}
};

/// pi = sigma tau (k+1) rho  ->  tau sigma^+ 1 rho, with k the length of the
/// shortest proper prefix that is a permutation and sigma^+ the reversal of
/// sigma with every entry incremented.
Permutation cp_scp_map(const Permutation& pi);

}  // namespace ptab
