// ptab: command-line front end for the permutation tableau library.
//
// Exit codes: 0 success, 1 verification failed, 2 bad input or flags,
// 3 resource limit, 4 internal error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "ptab/enumerate.hpp"
#include "ptab/fixtures.hpp"
#include "ptab/io.hpp"
#include "ptab/maps.hpp"
#include "ptab/verify.hpp"

using namespace ptab;

namespace {

constexpr int kFailed = 1;
constexpr int kBadInput = 2;
constexpr int kLimit = 3;
constexpr int kInternal = 4;

struct Options {
    std::optional<int> max_n;

    std::string input;
    std::string to = "standard";
    bool render_ascii = false;

    std::string perm;
    std::string via;
    bool cycles = false;

    std::string type;
    int n = 0;
    std::string method = "bijection";
    bool with_stats = false;
    std::string poly;
    int jobs = 1;

    std::string identity;
    std::optional<int> order;

    std::string dir = ".";
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Limits limits_for(const Options& o)
{
    Limits l = Limits::from_env();
    if (o.max_n) l = Limits::with_max_n(*o.max_n);
    return l;
}

std::string read_input(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AnyTableau load(const Options& o)
{
    if (o.input.empty()) throw UsageError("--input is required");
    return parse_tableau(read_input(o.input));
}

void print_string(const std::string& s) { std::cout << Json(s).dump() << "\n"; }

void print_tableau(const AnyTableau& t, bool ascii)
{
    if (ascii)
        std::cout << render(t);
    else
        std::cout << to_json(t).dump() << "\n";
}

Json stats_json(const TableauA& t)
{
    const StatsA s = stats_a(t);
    Json j;
    j["type"] = "A";
    j["urr"] = s.urr;
    j["urc"] = s.urc;
    j["topone"] = s.topone;
    j["sign"] = s.sign;
    return j;
}

Json stats_json(const TableauB& t)
{
    const StatsB s = stats_b(t);
    Json j;
    j["type"] = "B";
    j["urr"] = s.urr;
    j["diag"] = s.diag;
    j["toponez"] = s.toponez;
    j["m"] = s.m;
    return j;
}

// ---------------------------------------------------------------------------

int run_convert(const Options& o)
{
    print_tableau(convert(load(o), parse_repr(o.to)), o.render_ascii);
    return 0;
}

void print_perm(const std::string& word, const CyclePermutation& as_cycles, bool cycles)
{
    print_string(cycles ? as_cycles.str() : word);
}

int run_map(const Options& o)
{
    const bool from_perm = !o.perm.empty();
    const bool wants_perm = o.via == "cn-inv" || o.via == "cnb-inv" || o.via == "phi" || o.via == "cpscp";
    if (from_perm != wants_perm)
        throw UsageError("--via " + o.via + (wants_perm ? " takes --perm" : " takes --input"));

    if (wants_perm) {
        const SignedPermutation pi = SignedPermutation::parse(o.perm);
        if (o.via == "cnb-inv") {
            print_tableau(convert(cnb_inverse(pi), parse_repr(o.to)), o.render_ascii);
        } else if (o.via == "phi") {
            print_string(phi(pi).str());
        } else {
            if (!pi.all_positive()) throw UsageError("--via " + o.via + " needs an unsigned permutation");
            const Permutation p = Permutation::parse(o.perm);
            if (o.via == "cn-inv")
                print_tableau(convert(cn_inverse(p), parse_repr(o.to)), o.render_ascii);
            else
                print_string(cp_scp_map(p).str());
        }
        return 0;
    }

    const AnyTableau t = load(o);
    const Kind kind = kind_of(t);
    const bool type_b_map = o.via == "cnb" || o.via == "zab";
    if (type_b_map != (kind == Kind::B))
        throw UsageError("--via " + o.via + " needs a type " + (type_b_map ? "B" : "A") + " tableau");

    if (o.via == "cn") {
        print_string(cn(to_alternative(standard_a(t))).str());
    } else if (o.via == "zp") {
        const Permutation p = zigzag_standard(standard_a(t));
        print_perm(p.str(), CyclePermutation::from_one_line(p), o.cycles);
    } else if (o.via == "za") {
        const Permutation p = zigzag_alternative(to_alternative(standard_a(t)));
        print_perm(p.str(), CyclePermutation::from_one_line(p), o.cycles);
    } else if (o.via == "cnb") {
        print_string(cnb(to_alternative(standard_b(t))).str());
    } else if (o.via == "zab") {
        const AltTableauB a = to_alternative(standard_b(t));
        print_perm(zigzag_alternative_b(a).str(), zigzag_alternative_b_map(a), o.cycles);
    } else {
        throw UsageError("unknown map '" + o.via + "'");
    }
    return 0;
}

int run_stats(const Options& o)
{
    const AnyTableau t = load(o);
    const Json j = kind_of(t) == Kind::A ? stats_json(standard_a(t)) : stats_json(standard_b(t));
    std::cout << j.dump() << "\n";
    return 0;
}

struct PolyAcc {
    MultiPoly value;
    PolyAcc& operator+=(const PolyAcc& o)
    {
        value += o.value;
        return *this;
    }
};

// Exponent vector for --poly VARS: each requested variable gets its statistic.
Exponents poly_exponents(const std::string& vars, Kind kind, int urr, int second, int third)
{
    Exponents e{0, 0, 0, 0};
    for (char v : vars) {
        switch (v) {
        case 'x': e[0] = urr - 1; break;
        case 'y': e[1] = second; break;
        case 'z':
            if (kind == Kind::A) throw UsageError("variable z is defined only for type B");
            e[2] = third;
            break;
        case 't':
            if (kind == Kind::B) throw UsageError("variable t is defined only for type A");
            e[3] = third;
            break;
        default: throw UsageError(std::string("unknown polynomial variable '") + v + "'");
        }
    }
    return e;
}

int run_enumerate(const Options& o)
{
    const Limits limits = limits_for(o);
    const Method method = parse_method(o.method);
    if (o.type != "a" && o.type != "b") throw UsageError("--type must be a or b");
    const Kind kind = o.type == "a" ? Kind::A : Kind::B;
    if (o.n < 0) throw UsageError("--n must be >= 0");
    if (o.jobs < 1) throw UsageError("--jobs must be >= 1");

    if (!o.poly.empty()) {
        if (o.poly.find('x') != std::string::npos && o.n == 0)
            throw UsageError("x carries urr - 1, which is undefined at n = 0");
        PolyAcc sum;
        if (kind == Kind::A) {
            poly_exponents(o.poly, kind, 1, 0, 0);
            sum = reduce_pt<PolyAcc>(o.n, method, o.jobs, limits, [&](PolyAcc& acc, const TableauA& t) {
                const StatsA s = stats_a(t);
                acc.value.add_term(poly_exponents(o.poly, kind, s.urr, s.topone, s.urc), 1);
            });
        } else {
            poly_exponents(o.poly, kind, 1, 0, 0);
            sum = reduce_ptb<PolyAcc>(o.n, method, o.jobs, limits, [&](PolyAcc& acc, const TableauB& t) {
                const StatsB s = stats_b(t);
                acc.value.add_term(poly_exponents(o.poly, kind, s.urr, s.toponez, s.diag), 1);
            });
        }
        print_string(sum.value.str());
        return 0;
    }

    const auto emit = [&](const auto& t) {
        Json line = to_json(t);
        if (o.with_stats) line["stats"] = stats_json(t);
        std::cout << line.dump() << "\n";
    };
    if (kind == Kind::A) {
        limits.check_a(o.n);
        for (const auto& t : enumerate_pt(o.n, method, limits)) emit(t);
    } else {
        limits.check_b(o.n);
        for (const auto& t : enumerate_ptb(o.n, method, limits)) emit(t);
    }
    return 0;
}

int run_verify(const Options& o)
{
    VerifyParams p;
    p.identity = o.identity;
    p.n = o.n;
    p.order = o.order;
    p.jobs = o.jobs;
    p.method = parse_method(o.method);
    p.limits = limits_for(o);
    const VerifyReport r = verify(p);
    std::cout << r.to_json().dump() << "\n";
    return r.pass ? 0 : kFailed;
}

int run_fixtures(const Options& o)
{
    std::filesystem::create_directories(o.dir);
    const auto write = [&](const std::string& name, const Json& doc) {
        const auto path = std::filesystem::path(o.dir) / name;
        std::ofstream out(path);
        if (!out) throw UsageError("cannot write '" + path.string() + "'");
        out << doc.dump() << "\n";
        print_string(path.string());
    };
    write("fig2.json", to_json(fig2()));
    write("fig4.json", to_json(fig4()));
    return 0;
}

void report_error(const char* kind, const std::string& message)
{
    Json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Permutation tableaux of type A and B: conversions, bijections, enumeration, verification"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--max-n", o.max_n, "Raise or lower the exhaustive-work limits (same as PTAB_MAX_N)");

    auto* convert_cmd = app.add_subcommand("convert", "Convert a tableau between representations");
    convert_cmd->add_option("--input", o.input, "Tableau JSON file, or - for stdin")->required();
    convert_cmd->add_option("--to", o.to, "standard | alternative | bare")
        ->check(CLI::IsMember({"standard", "alternative", "bare"}));
    convert_cmd->add_flag("--render", o.render_ascii, "Draw an ASCII grid instead of JSON");

    auto* map_cmd = app.add_subcommand("map", "Apply a bijection or zigzag map");
    auto* in_opt = map_cmd->add_option("--input", o.input, "Tableau JSON file, or - for stdin");
    auto* perm_opt = map_cmd->add_option("--perm", o.perm, "Comma-separated (signed) permutation");
    in_opt->excludes(perm_opt);
    map_cmd->add_option("--via", o.via, "cn | cn-inv | cnb | cnb-inv | zp | za | zab | phi | cpscp")
        ->required()
        ->check(CLI::IsMember({"cn", "cn-inv", "cnb", "cnb-inv", "zp", "za", "zab", "phi", "cpscp"}));
    map_cmd->add_flag("--cycles", o.cycles, "Print zigzag results in cycle form");
    map_cmd->add_option("--to", o.to, "Representation for tableau output")
        ->check(CLI::IsMember({"standard", "alternative", "bare"}));
    map_cmd->add_flag("--render", o.render_ascii, "Draw tableau output as an ASCII grid");

    auto* stats_cmd = app.add_subcommand("stats", "Statistics of a tableau");
    stats_cmd->add_option("--input", o.input, "Tableau JSON file, or - for stdin")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "List PT(n) or PTB(n), or sum a statistics polynomial");
    enum_cmd->add_option("--type", o.type, "a | b")->required()->check(CLI::IsMember({"a", "b"}));
    enum_cmd->add_option("--n", o.n, "Length")->required();
    enum_cmd->add_option("--method", o.method, "direct | bijection")
        ->check(CLI::IsMember({"direct", "bijection"}));
    enum_cmd->add_flag("--stats", o.with_stats, "Attach statistics to each line");
    enum_cmd->add_option("--poly", o.poly,
                         "Sum monomials over the listed variables: x=urr-1, y=topone|toponez, t=urc (A), z=diag (B)");
    enum_cmd->add_option("--jobs", o.jobs, "Parallel partitions for --poly");

    auto* verify_cmd = app.add_subcommand("verify", "Check an identity exhaustively");
    verify_cmd->add_option("--identity", o.identity, "Identity name")
        ->required()
        ->check(CLI::IsMember(identity_names()));
    auto* n_opt = verify_cmd->add_option("--n", o.n, "Length");
    auto* order_opt = verify_cmd->add_option("--order", o.order, "GF_PT: compare the series up to this order");
    n_opt->excludes(order_opt);
    verify_cmd->add_option("--jobs", o.jobs, "Parallel partitions");
    verify_cmd->add_option("--method", o.method, "direct | bijection")
        ->check(CLI::IsMember({"direct", "bijection"}));

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Write fig2.json and fig4.json");
    fixtures_cmd->add_option("--dir", o.dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*verify_cmd && !*n_opt && !*order_opt) throw UsageError("verify needs --n or --order");
        if (*verify_cmd && *order_opt && o.identity != "GF_PT") throw UsageError("--order applies to GF_PT only");
        if (*convert_cmd) return run_convert(o);
        if (*map_cmd) return run_map(o);
        if (*stats_cmd) return run_stats(o);
        if (*enum_cmd) return run_enumerate(o);
        if (*verify_cmd) return run_verify(o);
        if (*fixtures_cmd) return run_fixtures(o);
    } catch (const ValidationError& e) {
        Json j;
        j["error"] = "validation";
        j["kind"] = to_string(e.violation().kind);
        j["row"] = e.violation().row;
        j["col"] = e.violation().col;
        j["message"] = e.what();
        std::cerr << j.dump() << "\n";
        return kBadInput;
    } catch (const LimitExceeded& e) {
        report_error("limit", e.what());
        return kLimit;
    } catch (const std::invalid_argument& e) {
        report_error("input", e.what());
        return kBadInput;
    } catch (const std::out_of_range& e) {
        report_error("input", e.what());
        return kBadInput;
    } catch (const std::exception& e) {
        report_error("internal", e.what());
        return kInternal;
    }
    return kBadInput;
}
