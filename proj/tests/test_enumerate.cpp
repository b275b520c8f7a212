#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "ptab/verify.hpp"

using namespace ptab;

namespace {

template <class T>
std::set<std::string> dumps(const std::vector<T>& ts)
{
    std::set<std::string> out;
    for (const auto& t : ts) out.insert(to_json(t).dump());
    return out;
}

VerifyReport run(const std::string& identity, int n)
{
    VerifyParams p;
    p.identity = identity;
    p.n = n;
    return verify(p);
}

}  // namespace

TEST_SUITE("enumerate")
{
    TEST_CASE("small counts")
    {
        const std::uint64_t a[] = {1, 1, 2, 6, 24, 120};
        const std::uint64_t b[] = {1, 2, 8, 48, 384};
        for (int n = 0; n <= 5; ++n) CHECK(enumerate_pt(n, Method::Direct).size() == a[n]);
        for (int n = 0; n <= 4; ++n) CHECK(enumerate_ptb(n, Method::Direct).size() == b[n]);
        CHECK(count_signed_permutations(3) == 48);
        CHECK(count_permutations(0) == 1);
    }

    TEST_CASE("both methods and the label-based filter produce the same sets")
    {
        for (int n = 0; n <= 6; ++n) {
            const auto direct = dumps(enumerate_pt(n, Method::Direct));
            CHECK(direct == dumps(enumerate_pt(n, Method::Bijection)));
            CHECK(direct == dumps(support::oracle_pt(n)));
        }
        for (int n = 0; n <= 4; ++n) {
            const auto direct = dumps(enumerate_ptb(n, Method::Direct));
            CHECK(direct == dumps(enumerate_ptb(n, Method::Bijection)));
            CHECK(direct == dumps(support::oracle_ptb(n)));
        }
    }

    TEST_CASE("direct enumeration is sorted")
    {
        const auto all = enumerate_pt(5, Method::Direct);
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(to_json(all[i - 1]).dump() < to_json(all[i]).dump());
    }

    TEST_CASE("unranking follows iteration order")
    {
        for (int n = 0; n <= 5; ++n) {
            std::uint64_t rank = 0;
            for_each_permutation(n, [&](const Permutation& p) { CHECK(unrank_permutation(n, rank++) == p); });
            CHECK(rank == count_permutations(n));
            const auto perms = enumerate_perms(n);
            CHECK(std::is_sorted(perms.begin(), perms.end()));
        }
        for (int n = 0; n <= 4; ++n) {
            std::uint64_t rank = 0;
            for_each_signed_permutation(n, [&](const SignedPermutation& p) {
                CHECK(unrank_signed_permutation(n, rank) == p);
                CHECK(cnb(to_alternative(ptb_at(n, rank))) == p);
                ++rank;
            });
            CHECK(rank == count_signed_permutations(n));
        }
        CHECK(unrank_signed_permutation(2, 1).str() == "-1,2");
        CHECK(unrank_signed_permutation(2, 4).str() == "2,1");
        CHECK(cn(to_alternative(pt_at(4, 23))).str() == "4,3,2,1");
    }

    TEST_CASE("limits")
    {
        const Limits l;
        CHECK_THROWS_AS(l.check_a(9), LimitExceeded);
        CHECK_NOTHROW(l.check_a(8));
        CHECK_THROWS_AS(l.check_b(6), LimitExceeded);
        CHECK_THROWS_AS(enumerate_pt(9, Method::Direct), LimitExceeded);
        CHECK_THROWS_AS(count_connected(10), LimitExceeded);
        const Limits small = Limits::with_max_n(3);
        CHECK(small.a == 3);
        CHECK(small.b == 3);
        CHECK(small.brute_force == 4);
        CHECK_THROWS_AS(run("EQ8", 9), LimitExceeded);
    }

    TEST_CASE("range partitions cover the total")
    {
        for (std::uint64_t total : {0ULL, 1ULL, 7ULL, 120ULL})
            for (int parts = 1; parts <= 5; ++parts) {
                const auto r = partition_ranges(total, parts);
                std::uint64_t next = 0;
                for (const auto& [b, e] : r) {
                    CHECK(b == next);
                    CHECK(e >= b);
                    next = e;
                }
                CHECK(next == total);
            }
    }

    TEST_CASE("parallel sums match sequential sums")
    {
        std::mt19937 rng(20261014);
        for (int n = 0; n <= 7; ++n) {
            const auto visit = [](MultiPoly& acc, const TableauA& t) {
                const StatsA s = stats_a(t);
                acc += MultiPoly::monomial(s.urr, s.topone, 0, s.urc);
            };
            const MultiPoly seq = reduce_pt<MultiPoly>(n, Method::Bijection, 1, Limits{}, visit);
            const int jobs = std::uniform_int_distribution<int>(2, 6)(rng);
            CHECK(reduce_pt<MultiPoly>(n, Method::Bijection, jobs, Limits{}, visit) == seq);
            if (n <= 6) CHECK(reduce_pt<MultiPoly>(n, Method::Direct, jobs, Limits{}, visit) == seq);
        }
        for (int n = 0; n <= 4; ++n) {
            const auto visit = [](MultiPoly& acc, const TableauB& t) {
                const StatsB s = stats_b(t);
                acc += MultiPoly::monomial(s.urr, s.toponez, s.diag);
            };
            CHECK(reduce_ptb<MultiPoly>(n, Method::Bijection, 3, Limits{}, visit) ==
                  reduce_ptb<MultiPoly>(n, Method::Direct, 1, Limits{}, visit));
        }
    }

    TEST_CASE("worker exceptions propagate")
    {
        const auto work = [](std::uint64_t b, std::uint64_t) -> int {
            if (b > 0) throw std::runtime_error("boom");
            return 1;
        };
        CHECK_THROWS_AS(parallel_reduce<int>(10, 3, work), std::runtime_error);
    }

    TEST_CASE("verify reports")
    {
        const VerifyReport urr_topone = run("EQ8", 2);
        CHECK(urr_topone.pass);
        CHECK(urr_topone.left == "x + y");
        CHECK(urr_topone.right == "x + y");
        CHECK(urr_topone.count == 2);

        const VerifyReport sign = run("SIGN", 2);
        CHECK(sign.pass);
        CHECK(sign.left == "0");

        const VerifyReport typeb = run("TYPEB", 1);
        CHECK(typeb.pass);
        CHECK(typeb.left == "1 + z");

        CHECK(run("SIGN", 4).left == "-4");
        CHECK_THROWS_AS(run("NOPE", 2), UnknownIdentity);
        CHECK_THROWS_AS(run("EQ8", 0), std::invalid_argument);

        for (const auto& name : identity_names()) {
            const int n = name.find("_B") != std::string::npos || name == "TYPEB" ? 3 : 4;
            const VerifyReport r = run(name, n);
            CHECK_MESSAGE(r.pass, name);
            CHECK(r.to_json()["identity"] == name);
        }

        VerifyParams gf;
        gf.identity = "GF_PT";
        gf.order = 5;
        gf.jobs = 2;
        CHECK(verify(gf).pass);
    }
}
