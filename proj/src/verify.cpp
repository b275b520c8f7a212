#include "ptab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "ptab/closed_forms.hpp"

namespace ptab {

Json VerifyReport::to_json() const
{
    Json doc;
    doc["identity"] = identity;
    doc["n"] = n;
    doc["left"] = left;
    doc["right"] = right;
    doc["pass"] = pass;
    doc["count"] = count;
    doc["ms"] = ms;
    return doc;
}

namespace {

struct PolySum {
    MultiPoly value;
    std::uint64_t count = 0;
    PolySum& operator+=(const PolySum& o)
    {
        value += o.value;
        count += o.count;
        return *this;
    }
};

struct IntSum {
    BigInt value = 0;
    std::uint64_t count = 0;
    IntSum& operator+=(const IntSum& o)
    {
        value += o.value;
        count += o.count;
        return *this;
    }
};

struct Tally {
    std::uint64_t holds = 0;
    std::uint64_t checks = 0;
    std::uint64_t count = 0;
    void check(bool ok)
    {
        ++checks;
        holds += ok ? 1 : 0;
    }
    Tally& operator+=(const Tally& o)
    {
        holds += o.holds;
        checks += o.checks;
        count += o.count;
        return *this;
    }
};

struct Distinct {
    std::set<std::string> seen;
    std::uint64_t count = 0;
    Distinct& operator+=(const Distinct& o)
    {
        seen.insert(o.seen.begin(), o.seen.end());
        count += o.count;
        return *this;
    }
};

VerifyReport values(const std::string& left, const std::string& right, std::uint64_t count)
{
    VerifyReport r;
    r.left = left;
    r.right = right;
    r.pass = left == right;
    r.count = count;
    return r;
}

VerifyReport tally_report(const Tally& t)
{
    VerifyReport r;
    r.left = std::to_string(t.holds);
    r.right = std::to_string(t.checks);
    r.pass = t.holds == t.checks;
    r.count = t.count;
    return r;
}

void require_positive(const VerifyParams& p)
{
    if (p.n < 1) throw std::invalid_argument(p.identity + " is stated for n >= 1");
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// ---------------------------------------------------------------------------

VerifyReport urr_topone(const VerifyParams& p)
{
    require_positive(p);
    const auto sum = reduce_pt<PolySum>(p.n, p.method, p.jobs, p.limits, [](PolySum& acc, const TableauA& t) {
        const StatsA s = stats_a(t);
        acc.value.add_term({s.urr - 1, s.topone, 0, 0}, 1);
        ++acc.count;
    });
    return values(sum.value.str(), urr_topone_closed(p.n).str(), sum.count);
}

PolySum urc_sum(int n, const VerifyParams& p)
{
    return reduce_pt<PolySum>(n, p.method, p.jobs, p.limits, [](PolySum& acc, const TableauA& t) {
        acc.value.add_term({0, 0, 0, stats_a(t).urc}, 1);
        ++acc.count;
    });
}

VerifyReport gf_pt(const VerifyParams& p)
{
    if (p.order) {
        const int order = *p.order;
        if (order < 0) throw std::invalid_argument("order must be >= 0");
        std::vector<MultiPoly> coeffs;
        std::uint64_t count = 0;
        for (int n = 0; n <= order; ++n) {
            auto s = urc_sum(n, p);
            coeffs.push_back(std::move(s.value));
            count += s.count;
        }
        VerifyReport r = values(TruncatedSeries(order, std::move(coeffs)).str(), p_t_closed(order).str(), count);
        r.n = order;
        return r;
    }
    const auto s = urc_sum(p.n, p);
    return values(s.value.str(), p_t_closed(p.n)[p.n].str(), s.count);
}

IntSum two_to_urc(const VerifyParams& p)
{
    return reduce_pt<IntSum>(p.n, p.method, p.jobs, p.limits, [](IntSum& acc, const TableauA& t) {
        acc.value += BigInt(1) << stats_a(t).urc;
        ++acc.count;
    });
}

VerifyReport connected(const VerifyParams& p)
{
    const auto s = two_to_urc(p);
    return values(s.value.str(), std::to_string(count_connected(p.n + 1, p.limits)), s.count);
}

VerifyReport scp_count(const VerifyParams& p)
{
    const auto s = two_to_urc(p);
    return values(s.value.str(), std::to_string(count_shift_connected(p.n + 1, p.limits)), s.count);
}

VerifyReport sign(const VerifyParams& p)
{
    const auto s = reduce_pt<IntSum>(p.n, p.method, p.jobs, p.limits, [](IntSum& acc, const TableauA& t) {
        acc.value += stats_a(t).sign;
        ++acc.count;
    });
    return values(s.value.str(), sign_imbalance_closed(p.n).str(), s.count);
}

VerifyReport type_b(const VerifyParams& p)
{
    require_positive(p);
    const auto sum = reduce_ptb<PolySum>(p.n, p.method, p.jobs, p.limits, [](PolySum& acc, const TableauB& t) {
        const StatsB s = stats_b(t);
        acc.value.add_term({s.urr - 1, s.toponez, s.diag, 0}, 1);
        ++acc.count;
    });
    return values(sum.value.str(), type_b_closed(p.n).str(), sum.count);
}

VerifyReport zigzag_a_identity(const VerifyParams& p)
{
    const auto t = reduce_pt<Tally>(p.n, p.method, p.jobs, p.limits, [](Tally& acc, const TableauA& t) {
        const AltTableauA a = to_alternative(t);
        acc.check(CyclePermutation::from_one_line(zigzag_alternative(a)) == phi(cn(a)));
        ++acc.count;
    });
    return tally_report(t);
}

VerifyReport zigzag_b_identity(const VerifyParams& p)
{
    const auto t = reduce_ptb<Tally>(p.n, p.method, p.jobs, p.limits, [](Tally& acc, const TableauB& t) {
        const AltTableauB a = to_alternative(t);
        acc.check(zigzag_alternative_b_map(a) == phi(cnb(a)));
        ++acc.count;
    });
    return tally_report(t);
}

// Counts distinct tableaux pulled back from S_n (B_n) and, within the
// DIRECT limit, compares the set with the DIRECT enumeration.
template <class T>
VerifyReport count_identity(const VerifyParams& p, std::uint64_t expected, int direct_limit,
                            const std::function<T(std::uint64_t)>& at,
                            const std::function<std::vector<T>()>& direct)
{
    const auto pulled = parallel_reduce<Distinct>(expected, p.jobs, [&](std::uint64_t b, std::uint64_t e) {
        Distinct acc;
        for (auto r = b; r < e; ++r) {
            acc.seen.insert(to_json(at(r)).dump());
            ++acc.count;
        }
        return acc;
    });
    VerifyReport r = values(std::to_string(pulled.seen.size()), std::to_string(expected), pulled.count);
    if (p.n <= direct_limit) {
        std::set<std::string> by_filling;
        for (const auto& t : direct()) by_filling.insert(to_json(t).dump());
        r.count += by_filling.size();
        r.pass = r.pass && by_filling == pulled.seen;
    }
    return r;
}

VerifyReport count_a(const VerifyParams& p)
{
    p.limits.check_a(p.n);
    return count_identity<TableauA>(
        p, count_permutations(p.n), p.limits.a, [&](std::uint64_t r) { return pt_at(p.n, r); },
        [&] { return enumerate_pt(p.n, Method::Direct, p.limits); });
}

VerifyReport count_b(const VerifyParams& p)
{
    p.limits.check_b(p.n);
    return count_identity<TableauB>(
        p, count_signed_permutations(p.n), p.limits.b, [&](std::uint64_t r) { return ptb_at(p.n, r); },
        [&] { return enumerate_ptb(p.n, Method::Direct, p.limits); });
}

VerifyReport roundtrip_a(const VerifyParams& p)
{
    auto t = parallel_reduce<Tally>(count_permutations(p.n), p.jobs, [&](std::uint64_t b, std::uint64_t e) {
        Tally acc;
        for_each_permutation(p.n, b, e, [&](const Permutation& pi) {
            acc.check(cn(cn_inverse(pi)) == pi);
            ++acc.count;
        });
        return acc;
    });
    t += reduce_pt<Tally>(p.n, p.method, p.jobs, p.limits, [](Tally& acc, const TableauA& tab) {
        const AltTableauA a = to_alternative(tab);
        acc.check(from_alternative(a) == tab && cn_inverse(cn(a)) == a);
        ++acc.count;
    });
    return tally_report(t);
}

VerifyReport roundtrip_b(const VerifyParams& p)
{
    p.limits.check_b(p.n);
    auto t = parallel_reduce<Tally>(count_signed_permutations(p.n), p.jobs, [&](std::uint64_t b, std::uint64_t e) {
        Tally acc;
        for_each_signed_permutation(p.n, b, e, [&](const SignedPermutation& pi) {
            acc.check(cnb(cnb_inverse(pi)) == pi);
            ++acc.count;
        });
        return acc;
    });
    t += reduce_ptb<Tally>(p.n, p.method, p.jobs, p.limits, [](Tally& acc, const TableauB& tab) {
        const AltTableauB a = to_alternative(tab);
        acc.check(from_alternative(a) == tab && cnb_inverse(cnb(a)) == a);
        ++acc.count;
    });
    return tally_report(t);
}

VerifyReport lemma_rl(const VerifyParams& p)
{
    const auto t = reduce_pt<Tally>(p.n, p.method, p.jobs, p.limits, [](Tally& acc, const TableauA& tab) {
        const Permutation pi = cn(to_alternative(tab));
        const auto word = pi.word();
        acc.check(unrestricted_rows(tab) == rl_minima(word));
        const auto one = std::find(word.begin(), word.end(), 1);
        const std::vector<int> prefix(word.begin(), one);
        acc.check(as_set(first_row_one_columns(tab)) == as_set(rl_maxima(prefix)));
        ++acc.count;
    });
    return tally_report(t);
}

VerifyReport prop_b6(const VerifyParams& p)
{
    const auto t = reduce_ptb<Tally>(p.n, p.method, p.jobs, p.limits, [](Tally& acc, const TableauB& tab) {
        ++acc.count;
        if (tab.length() == 0) return;
        const AltTableauB a = to_alternative(tab);
        const StatsB s = stats_b(tab);
        const SignedPermutation pi = cnb(a);
        const auto w = pi.word();
        const int m = *std::min_element(w.begin(), w.end());

        // pi = sigma tau m rho, tau the longest run before m of entries below |m|.
        const auto m_pos = std::find(w.begin(), w.end(), m);
        auto tau_begin = m_pos;
        while (tau_begin != w.begin() && *(tau_begin - 1) < std::abs(m)) --tau_begin;
        const std::vector<int> sigma(w.begin(), tau_begin);
        const std::vector<int> tau(tau_begin, m_pos);

        acc.check(s.m == m);
        bool part2 = true;
        for (int c : tab.diagram().cols()) {
            const bool negated = std::find(w.begin(), w.end(), -c) != w.end();
            part2 = part2 && (!a.has_up(c) == negated);
        }
        acc.check(part2);
        acc.check(unrestricted_rows(tab) == rl_minima(w));
        acc.check(as_set(alt::up_columns_in_row(a, m)) == as_set(rl_maxima(sigma)));
        acc.check(as_set(alt::left_rows_in_column(a, std::abs(m))) == as_set(rl_minima(tau)));
        acc.check(pi.negatives() == s.diag);
    });
    return tally_report(t);
}

VerifyReport prop_single1(const VerifyParams& p)
{
    const auto t = reduce_pt<Tally>(p.n, p.method, p.jobs, p.limits, [](Tally& acc, const TableauA& tab) {
        acc.check(has_single_first_row_one_column(tab) == !is_shift_connected(cn(to_alternative(tab))));
        ++acc.count;
    });
    return tally_report(t);
}

struct CpScp {
    std::set<std::string> images;
    Tally tally;
    std::uint64_t not_scp = 0;
    CpScp& operator+=(const CpScp& o)
    {
        images.insert(o.images.begin(), o.images.end());
        tally += o.tally;
        not_scp += o.not_scp;
        return *this;
    }
};

VerifyReport cp_scp(const VerifyParams& p)
{
    p.limits.check_a(p.n);
    const auto acc = parallel_reduce<CpScp>(count_permutations(p.n), p.jobs, [&](std::uint64_t b, std::uint64_t e) {
        CpScp part;
        for_each_permutation(p.n, b, e, [&](const Permutation& pi) {
            ++part.tally.count;
            if (!is_shift_connected(pi)) ++part.not_scp;
            if (is_connected(pi)) return;
            const Permutation image = cp_scp_map(pi);
            part.tally.check(!is_shift_connected(image));
            part.images.insert(image.str());
        });
        return part;
    });
    // Injective, lands in the complement of SCP(n), and fills it.
    VerifyReport r = values(std::to_string(acc.images.size()), std::to_string(acc.not_scp), acc.tally.count);
    r.pass = r.pass && acc.tally.holds == acc.tally.checks && acc.images.size() == acc.tally.checks;
    return r;
}

VerifyReport zp_injective(const VerifyParams& p)
{
    const auto d = reduce_pt<Distinct>(p.n, p.method, p.jobs, p.limits, [](Distinct& acc, const TableauA& t) {
        acc.seen.insert(zigzag_standard(t).str());
        ++acc.count;
    });
    VerifyReport r = values(std::to_string(d.seen.size()), std::to_string(d.count), d.count);
    r.pass = r.pass && d.count == count_permutations(p.n);
    return r;
}

using Handler = VerifyReport (*)(const VerifyParams&);

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> table = {
        {"EQ8", urr_topone},
        {"GF_PT", gf_pt},
        {"CONNECTED", connected},
        {"SCP_COUNT", scp_count},
        {"SIGN", sign},
        {"TYPEB", type_b},
        {"ZIGZAG_A", zigzag_a_identity},
        {"ZIGZAG_B", zigzag_b_identity},
        {"COUNT_A", count_a},
        {"COUNT_B", count_b},
        {"ROUNDTRIP_A", roundtrip_a},
        {"ROUNDTRIP_B", roundtrip_b},
        {"LEMMA_RL", lemma_rl},
        {"PROP_B6", prop_b6},
        {"PROP_SINGLE1", prop_single1},
        {"CP_SCP", cp_scp},
        {"ZP_INJECTIVE", zp_injective},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& identity_names()
{
    static const std::vector<std::string> names = {
        "EQ8",     "GF_PT",       "CONNECTED",   "SCP_COUNT", "SIGN",    "TYPEB",        "ZIGZAG_A", "ZIGZAG_B",
        "COUNT_A", "COUNT_B",     "ROUNDTRIP_A", "ROUNDTRIP_B", "LEMMA_RL", "PROP_B6", "PROP_SINGLE1", "CP_SCP",
        "ZP_INJECTIVE",
    };
    return names;
}

VerifyReport verify(const VerifyParams& params)
{
    const auto it = handlers().find(params.identity);
    if (it == handlers().end()) throw UnknownIdentity(params.identity);
    if (params.n < 0) throw std::invalid_argument("n must be >= 0");
    if (params.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report = it->second(params);
    report.identity = params.identity;
    if (!params.order || params.identity != "GF_PT") report.n = params.n;
    report.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace ptab
