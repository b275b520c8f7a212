#include <doctest.h>

#include <set>

#include "support.hpp"
#include "ptab/enumerate.hpp"

using namespace ptab;
using support::vec;

namespace {

std::vector<int> w(const std::string& text) { return split_word(text); }

oracle::Grid grid_of_alt_b(const AltTableauB& a) { return support::grid_of(from_alternative(a).bits()); }

// i_T -> j_T for a type B alternative, by labels.
std::map<int, int> oracle_zab(const AltTableauB& a)
{
    const oracle::Grid g = grid_of_alt_b(a);
    const auto marks = oracle::arrows(g);
    const auto turn = [&](int r, int c) {
        const auto it = marks.find({r, c});
        return it != marks.end() && it->second != oracle::Mark::None;
    };
    const auto has_col = [&](int c) { return std::find(g.cols.begin(), g.cols.end(), c) != g.cols.end(); };
    const auto signed_label = [&](int x) {
        if (x < 0 || !has_col(x)) return x;
        for (int r : g.col_rows(x))
            if (turn(r, x) && marks.at({r, x}) == oracle::Mark::Up) return x;
        return -x;
    };
    std::map<int, int> out;
    for (int i = 1; i <= static_cast<int>(g.border.size()); ++i) {
        const bool base_row = std::find(g.rows.begin(), g.rows.end(), i) != g.rows.end();
        const int exit = oracle::zigzag_exit(g, base_row ? i : -i, true, turn);
        out[signed_label(i)] = signed_label(exit);
    }
    return out;
}

std::vector<int> oracle_za(const TableauA& t)
{
    const oracle::Grid g = support::grid_of(t.bits());
    const auto marks = oracle::arrows(g);
    std::vector<int> out;
    for (int i = 1; i <= t.length(); ++i) {
        const bool is_row = std::find(g.rows.begin(), g.rows.end(), i) != g.rows.end();
        out.push_back(oracle::zigzag_exit(g, i, is_row, [&](int r, int c) { return marks.at({r, c}) != oracle::Mark::None; }));
    }
    return out;
}

}  // namespace

TEST_SUITE("maps")
{
    TEST_CASE("right-to-left extrema")
    {
        CHECK(rl_minima(w("4,6,5,2,8,3,1,9,7,12,10,11,13")) == w("1,7,10,11,13"));
        CHECK(rl_maxima(w("4,6,5,2,8,3")) == w("8,3"));
        CHECK(rl_minima(w("3,1,2")) == w("1,2"));
        CHECK(rl_maxima(w("3,1,2")) == w("3,2"));
        CHECK(rl_minima({}).empty());
    }

    TEST_CASE("signed descents by absolute value")
    {
        const auto d = signed_descents(SignedPermutation::parse("9,7,10,6,2,1,-3,5,-8,4,11"));
        std::vector<int> values;
        for (const auto& x : d) values.push_back(x.value);
        CHECK(values == w("2,-3,6,-8,9,10"));
        CHECK(d.front().position == 4);
        CHECK(signed_descents(SignedPermutation::parse("1,2,3")).empty());
        CHECK(signed_descents(SignedPermutation::parse("-1")).size() == 1);
    }

    TEST_CASE("connectivity predicates match window definitions")
    {
        for (int n = 1; n <= 7; ++n)
            for (const auto& p : oracle::all_permutations(n)) {
                const Permutation pi(p);
                CHECK(is_connected(pi) == !oracle::has_permutation_prefix(p));
                CHECK(is_shift_connected(pi) == !oracle::has_window_at_one(p));
            }
        CHECK(count_connected(3) == 3);
        CHECK(count_connected(4) == 13);
        CHECK(count_shift_connected(4) == 13);
        CHECK(count_connected(1) == 1);
    }

    TEST_CASE("cycle forms")
    {
        const CyclePermutation c({{1, 3}, {2}});
        CHECK(c.str() == "(3,1)(2)");
        CHECK(c.apply(1) == 3);
        CHECK(c == CyclePermutation::from_one_line(w("3,2,1")));
        CHECK(CyclePermutation().str() == "()");
        CHECK_THROWS_AS(CyclePermutation::from_mapping({{1, 2}, {2, 2}}), std::invalid_argument);
    }

    TEST_CASE("cycle cutting")
    {
        CHECK(phi(w("3,1,2")).str() == "(3,1)(2)");
        CHECK(phi(w("2,4,3,1")) == CyclePermutation({{2, 4, 3, 1}}));
        for (int n = 0; n <= 6; ++n)
            for (const auto& p : oracle::all_permutations(n)) {
                CHECK(phi(p).mapping() == oracle::cycle_closure(p));
                CHECK(static_cast<int>(phi(p).cycles().size()) == static_cast<int>(rl_minima(p).size()));
            }
    }

    TEST_CASE("thirteen-step tableau permutations")
    {
        const AltTableauA a = to_alternative(fig2());
        const Permutation pi = cn(a);
        CHECK(pi.str() == "4,6,5,2,8,3,1,9,7,12,10,11,13");
        CHECK(cn_inverse(pi) == a);
        CHECK(zigzag_standard(fig2()).str() == "7,6,1,5,3,4,9,2,8,11,12,10,13");
        const Permutation za = zigzag_alternative(a);
        CHECK(za[0] == 4);
        CHECK(CyclePermutation::from_one_line(za) == phi(pi));

        // Product of one cycle per column, rightmost factor first.
        const std::vector<std::vector<int>> factors = {{3, 1}, {5, 2}, {4, 6, 2}, {2, 8, 1}, {9, 7}, {12, 10}};
        std::vector<int> product(13);
        for (int i = 1; i <= 13; ++i) {
            int x = i;
            for (auto f = factors.rbegin(); f != factors.rend(); ++f) {
                const auto it = std::find(f->begin(), f->end(), x);
                if (it != f->end()) x = it + 1 == f->end() ? f->front() : *(it + 1);
            }
            product[static_cast<std::size_t>(i) - 1] = x;
        }
        CHECK(vec(za.word()) == product);
    }

    TEST_CASE("shifted tableau permutations")
    {
        const AltTableauB a = to_alternative(fig4());
        const SignedPermutation pi = cnb(a);
        CHECK(pi.str() == "9,7,10,6,2,1,-3,5,-8,4,11");
        CHECK(cnb_inverse(pi) == a);
        CHECK(zigzag_alternative_b(a).str() == "-3,1,5,4,-8,2,10,9,7,6,11");
        CHECK(zigzag_alternative_b_map(a) == CyclePermutation({{9, 7, 10, 6, 2, 1, -3, 5, -8}, {4}, {11}}));
        CHECK(zigzag_alternative_b_map(a) == phi(pi));
        CHECK(cnb_inverse_traced(pi).residual == unrestricted_rows(fig4()));
    }

    TEST_CASE("length-one and empty cases")
    {
        CHECK(cn(to_alternative(TableauA())).size() == 0);
        CHECK(cn_inverse(Permutation::parse("1")).diagram().cell_count() == 0);
        const AltTableauB neg = cnb_inverse(SignedPermutation::parse("-1"));
        CHECK(neg.diagonal_ones() == std::vector<int>{1});
        CHECK(cnb(neg).str() == "-1");
        CHECK(zigzag_alternative_b(neg).str() == "-1");
        CHECK(cnb(cnb_inverse(SignedPermutation::parse("1"))).str() == "1");
    }

    TEST_CASE("type A bijection round trips")
    {
        for (int n = 0; n <= 6; ++n) {
            std::set<std::string> seen;
            for_each_permutation(n, [&](const Permutation& pi) {
                const AltTableauA a = cn_inverse(pi);
                CHECK(cn(a) == pi);
                CHECK(zigzag_alternative(a) == Permutation(oracle_za(from_alternative(a))));
                seen.insert(to_json(a).dump());
            });
            CHECK(seen.size() == count_permutations(n));
        }
        for (int n = 0; n <= 6; ++n)
            for (const auto& t : support::oracle_pt(n)) {
                const AltTableauA a = to_alternative(t);
                CHECK(cn_inverse(cn(a)) == a);
                CHECK(zigzag_standard(t) == Permutation(oracle::zp(support::grid_of(t.bits()), n)));
                CHECK(CyclePermutation::from_one_line(zigzag_alternative(a)) == phi(cn(a)));
            }
    }

    TEST_CASE("type B bijection round trips")
    {
        for (int n = 0; n <= 4; ++n)
            for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
                const auto traced = cnb_inverse_traced(pi);
                CHECK(cnb(traced.tableau) == pi);
                CHECK(traced.residual == alt::unrestricted_rows(traced.tableau));
                CHECK(zigzag_alternative_b_map(traced.tableau).mapping() == oracle_zab(traced.tableau));
                CHECK(zigzag_alternative_b_map(traced.tableau) == phi(pi));
            });
        for (int n = 0; n <= 4; ++n)
            for (const auto& t : support::oracle_ptb(n)) {
                const AltTableauB a = to_alternative(t);
                CHECK(cnb_inverse(cnb(a)) == a);
                CHECK(cnb(a).negatives() == stats_b(t).diag);
            }
    }

    TEST_CASE("type A and type B alternatives embed")
    {
        for (int n = 0; n <= 5; ++n)
            for_each_permutation(n, [&](const Permutation& pi) {
                const AltTableauA a = cn_inverse(pi);
                CHECK(to_type_a(to_type_b(a)) == a);
                CHECK(cnb(to_type_b(a)) == SignedPermutation(pi));
            });
    }

    TEST_CASE("connected to shift-connected map")
    {
        CHECK(cp_scp_map(Permutation::parse("1,2")).str() == "2,1");
        CHECK(cp_scp_map(Permutation::parse("1,2,3")).str() == "2,1,3");
        CHECK(cp_scp_map(Permutation::parse("2,1,3")).str() == "2,3,1");
        CHECK_THROWS_AS(cp_scp_map(Permutation::parse("2,1")), ConnectedInput);
        CHECK_THROWS_AS(cp_scp_map(Permutation::parse("1")), ConnectedInput);
        for (int n = 2; n <= 6; ++n) {
            std::set<Permutation> images;
            for (const auto& p : oracle::all_permutations(n)) {
                if (!oracle::has_permutation_prefix(p)) continue;
                const Permutation img = cp_scp_map(Permutation(p));
                CHECK(oracle::has_window_at_one(vec(img.word())));
                images.insert(img);
            }
            std::size_t not_scp = 0;
            for (const auto& p : oracle::all_permutations(n)) not_scp += oracle::has_window_at_one(p) ? 1 : 0;
            CHECK(images.size() == not_scp);
        }
    }
}
