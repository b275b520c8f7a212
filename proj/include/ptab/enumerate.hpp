#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ptab/maps.hpp"
#include "ptab/permutation.hpp"
#include "ptab/poly.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

enum class Method { Direct, Bijection };

Method parse_method(const std::string& name);
const char* to_string(Method m);

class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest n for exhaustive work over PT(n) and PTB(n), and for the
/// definition scans over S_n behind the connected counts.
struct Limits {
    int a = 8;
    int b = 5;
    int brute_force = 9;

    /// Defaults, or with PTAB_MAX_N=N set: a = b = N and brute_force = N+1.
    static Limits from_env();
    /// Same override applied explicitly.
    static Limits with_max_n(int n);

    void check_a(int n) const;
    void check_b(int n) const;
    void check_brute_force(int n) const;
};

// ---------------------------------------------------------------------------
// Permutations

std::uint64_t count_permutations(int n);
/// n! * 2^n
std::uint64_t count_signed_permutations(int n);

/// rank in lexicographic order, 0-based.
Permutation unrank_permutation(int n, std::uint64_t rank);
/// rank = (rank of |pi|) * 2^n + mask, where bit i of mask negates position i.
SignedPermutation unrank_signed_permutation(int n, std::uint64_t rank);

/// Visits ranks [begin, end) in order.
void for_each_permutation(int n, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(const Permutation&)>& fn);
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
void for_each_signed_permutation(int n, std::uint64_t begin, std::uint64_t end,
                                 const std::function<void(const SignedPermutation&)>& fn);
void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& fn);

std::vector<Permutation> enumerate_perms(int n);
std::vector<SignedPermutation> enumerate_signed_perms(int n);

// ---------------------------------------------------------------------------
// Tableaux

/// DIRECT: every 0/1 filling of every shape, filtered by validation, sorted
/// by canonical JSON. BIJECTION: pullback of S_n (resp. B_n) in
/// lexicographic rank order. DIRECT checks the limits; BIJECTION does not.
std::vector<TableauA> enumerate_pt(int n, Method method, const Limits& limits = {});
std::vector<TableauB> enumerate_ptb(int n, Method method, const Limits& limits = {});

/// The i-th tableau under BIJECTION.
TableauA pt_at(int n, std::uint64_t rank);
TableauB ptb_at(int n, std::uint64_t rank);

/// Brute-force definition scans over S_n; check limits.brute_force.
std::uint64_t count_connected(int n, const Limits& limits = {});
std::uint64_t count_shift_connected(int n, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Parallel driver

/// Splits [0, total) into `parts` contiguous ranges of near-equal size.
std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranges(std::uint64_t total, int parts);

/// Runs work(begin, end) on each range (one thread per range when jobs > 1)
/// and folds the partial results in range order with +=.
template <class Acc, class Work>
Acc parallel_reduce(std::uint64_t total, int jobs, Work work)
{
    const auto ranges = partition_ranges(total, std::max(jobs, 1));
    std::vector<Acc> partial(ranges.size());
    if (jobs <= 1) {
        for (std::size_t p = 0; p < ranges.size(); ++p) partial[p] = work(ranges[p].first, ranges[p].second);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(ranges.size());
        for (std::size_t p = 0; p < ranges.size(); ++p)
            threads.emplace_back([&, p] {
                try {
                    partial[p] = work(ranges[p].first, ranges[p].second);
                } catch (...) {
                    errors[p] = std::current_exception();
                }
            });
        for (auto& th : threads) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    Acc total_acc{};
    for (auto& p : partial) total_acc += p;
    return total_acc;
}

/// Folds visit(acc, T) over PT(n) (resp. PTB(n)) in `jobs` rank-range
/// partitions. Under DIRECT the sorted list is materialized first and
/// partitioned by index.
template <class Acc, class Visit>
Acc reduce_pt(int n, Method method, int jobs, const Limits& limits, Visit visit)
{
    limits.check_a(n);
    if (method == Method::Direct) {
        const auto all = enumerate_pt(n, method, limits);
        return parallel_reduce<Acc>(all.size(), jobs, [&](std::uint64_t b, std::uint64_t e) {
            Acc acc{};
            for (auto i = b; i < e; ++i) visit(acc, all[i]);
            return acc;
        });
    }
    return parallel_reduce<Acc>(count_permutations(n), jobs, [&](std::uint64_t b, std::uint64_t e) {
        Acc acc{};
        for_each_permutation(n, b, e, [&](const Permutation& pi) { visit(acc, from_alternative(cn_inverse(pi))); });
        return acc;
    });
}

template <class Acc, class Visit>
Acc reduce_ptb(int n, Method method, int jobs, const Limits& limits, Visit visit)
{
    limits.check_b(n);
    if (method == Method::Direct) {
        const auto all = enumerate_ptb(n, method, limits);
        return parallel_reduce<Acc>(all.size(), jobs, [&](std::uint64_t b, std::uint64_t e) {
            Acc acc{};
            for (auto i = b; i < e; ++i) visit(acc, all[i]);
            return acc;
        });
    }
    return parallel_reduce<Acc>(count_signed_permutations(n), jobs, [&](std::uint64_t b, std::uint64_t e) {
        Acc acc{};
        for_each_signed_permutation(n, b, e,
                                    [&](const SignedPermutation& pi) { visit(acc, from_alternative(cnb_inverse(pi))); });
        return acc;
    });
}

}  // namespace ptab
