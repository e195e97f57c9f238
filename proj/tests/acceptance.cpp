// Acceptance battery: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

#include "mspring/cli.hpp"
#include "mspring/suites.hpp"
#include "oracles.hpp"

using namespace mspring;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double s)
{
    std::ostringstream o;
    o.precision(1);
    o << std::fixed << s << "s";
    return o.str();
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail)
{
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << id << ". " << name << ": " << detail << std::endl;
}

/// Passing and total cases whose name starts with prefix.
std::pair<int, int> tally(const SuiteReport& r, const std::string& prefix, std::string* first_failure = nullptr)
{
    int ok = 0, total = 0;
    for (const auto& c : r.cases)
        if (c.name.rfind(prefix, 0) == 0) {
            ++total;
            ok += c.pass;
            if (!c.pass && first_failure && first_failure->empty())
                *first_failure = c.name + " " + c.detail;
        }
    return {ok, total};
}

std::string cli_output(std::vector<std::string> args, int* code)
{
    args.insert(args.begin(), "mspring");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out;
    *code = cli::run(static_cast<int>(argv.size()), argv.data(), out);
    return out.str();
}

void criterion1()
{
    auto t0 = Clock::now();
    auto r = paving_oracle_suite(4, {2, 3, 5}, 1);
    double s = seconds_since(t0);
    std::string bad;
    auto [ok, total] = tally(r, "", &bad);
    report(1, "paving-oracle identity", ok == total && total > 0 && s <= 300,
        std::to_string(ok) + "/" + std::to_string(total) + " cases exact at q=2,3,5, single-threaded " + fixed(s)
            + (bad.empty() ? "" : "; first failure " + bad));
}

void criterion2()
{
    auto loop = Quiver::cyclic(1);
    Multisegment m({{0, 2}, {0, 1}});
    auto comp = Composition::from_word(1, {0, 0, 0});
    auto p = poincare(loop, m, comp);
    auto n2 = count_points(loop, m, comp, 2), n3 = count_points(loop, m, comp, 3);
    bool poly = p.coefficients() == std::map<int, std::int64_t>{{0, 1}, {1, 2}};
    bool pass = poly && n2 == p(2) && n3 == p(3) && n2 == 5 && n3 == 7;
    report(2, "Springer subregular fiber", pass,
        "P(q) coefficients " + std::to_string(p[0]) + "," + std::to_string(p[1]) + "; F_2 count " + std::to_string(n2)
            + ", F_3 count " + std::to_string(n3));
}

void criteria3to5(int threads)
{
    auto t0 = Clock::now();
    auto r = klr_match_suite(24, 3, threads);
    double s = seconds_since(t0);
    std::string bad3, bad5;
    auto [ok3, total3] = tally(r, "match ", &bad3);
    report(3, "KLR graded-dimension match", ok3 == total3 && total3 > 0 && s <= 120,
        std::to_string(ok3) + "/" + std::to_string(total3) + " complete blocks agree to u^24 in " + fixed(s)
            + (bad3.empty() ? "" : "; first failure " + bad3));

    // closed form against an independent binomial oracle
    bool pass4 = true;
    std::string detail4;
    for (int n = 1; n <= 3; ++n) {
        auto c = Composition::from_word(1, std::vector<int>(static_cast<std::size_t>(n), 0));
        auto geo = gdim_geo(Quiver::linear(1), DimVector({n}), c, c, 24);
        for (int e = -n * (n - 1) - 2; e <= 24; ++e)
            if (geo[e] != oracle::nil_hecke_coefficient(n, e)) {
                pass4 = false;
                if (detail4.empty())
                    detail4 = "; n=" + std::to_string(n) + " differs at u^" + std::to_string(e);
            }
    }
    auto [ok4, total4] = tally(r, "nil-hecke closed form");
    pass4 = pass4 && ok4 == total4 && total4 == 3;
    report(4, "nil Hecke closed form", pass4, "n=1,2,3 exact to u^24 against the binomial oracle" + detail4);

    auto [ok5, total5] = tally(r, "transpose ", &bad5);
    report(5, "transpose symmetry", ok5 == total5 && total5 > 0,
        std::to_string(ok5) + "/" + std::to_string(total5) + " block pairs" + (bad5.empty() ? "" : "; first failure " + bad5));
}

void criterion6(int threads)
{
    auto t0 = Clock::now();
    auto r = relations_suite(100, 42, threads, 4);
    double s = seconds_since(t0);
    std::string bad;
    auto [ok, total] = tally(r, "", &bad);
    int homog = 0, homog_total = 0;
    for (const auto& c : r.cases)
        if (c.name.find("degree_homogeneity") != std::string::npos) {
            ++homog_total;
            homog += c.pass;
        }
    report(6, "KLR relation suite", ok == total && homog == homog_total && homog_total > 0,
        std::to_string(ok) + "/" + std::to_string(total) + " checks (100 trials per relation, degree homogeneity "
            + std::to_string(homog) + "/" + std::to_string(homog_total) + ") in " + fixed(s)
            + (bad.empty() ? "" : "; first failure " + bad));
}

void criterion7()
{
    bool pass = true;
    std::string detail;
    for (int n : {2, 3}) {
        auto dims = smash_center_dims(n, 6);
        std::string row;
        for (int k = 0; k <= 6; ++k) {
            pass = pass && dims.at(static_cast<std::size_t>(k)) == oracle::partitions(k, n);
            row += (k ? "," : "") + std::to_string(dims.at(static_cast<std::size_t>(k)));
        }
        detail += (detail.empty() ? "" : "; ") + ("n=" + std::to_string(n) + ": " + row);
    }
    pass = pass && smash_center_dims(2, 6) == std::vector<int>{1, 1, 2, 2, 3, 3, 4}
        && smash_center_dims(3, 6) == std::vector<int>{1, 1, 2, 3, 4, 5, 7};
    report(7, "smash-product center", pass, detail);
}

void criterion8()
{
    std::string counts;
    bool pass = true;
    const std::vector<long> expected{1, 2, 3, 5, 7, 11};
    for (int d = 1; d <= 6; ++d) {
        long c = static_cast<long>(enumerate_nilreps(Quiver::cyclic(1), DimVector({d})).size());
        pass = pass && c == expected[static_cast<std::size_t>(d - 1)] && c == oracle::partitions(d);
        counts += (d > 1 ? "," : "") + std::to_string(c);
    }
    int pairs = 0, agree = 0;
    for (int n = 1; n <= 3; ++n)
        for (bool cyclic : {false, true}) {
            auto q = cyclic ? Quiver::cyclic(n) : Quiver::linear(n);
            for (int ia = 0; ia < n; ++ia)
                for (int la = 1; la <= 5; ++la)
                    for (int ib = 0; ib < n; ++ib)
                        for (int lb = 1; lb <= 5; ++lb) {
                            if (!segment_fits(q, {ia, la}) || !segment_fits(q, {ib, lb}))
                                continue;
                            ++pairs;
                            agree += hom_dim(q, {ia, la}, {ib, lb}) == oracle::intertwiner_hom_dim(n, cyclic, ia, la, ib, lb);
                        }
        }
    report(8, "enumeration and hom_dim", pass && agree == pairs && pairs > 0,
        "loop classes d=1..6: " + counts + "; hom_dim agrees with intertwiner oracle on " + std::to_string(agree) + "/"
            + std::to_string(pairs) + " segment pairs");
}

void criterion9(int threads)
{
    auto t0 = Clock::now();
    auto r = homotopy_suite(200, 42, threads);
    double s = seconds_since(t0);
    std::string bad;
    auto [ok, total] = tally(r, "", &bad);
    report(9, "homotopy suite", ok == total && total > 0,
        std::to_string(ok) + "/" + std::to_string(total) + " property checks, 200 complexes per handle, " + fixed(s)
            + (bad.empty() ? "" : "; first failure " + bad));
}

void criterion10()
{
    const std::vector<std::vector<std::string>> commands{
        {"orbits", "--quiver", "cyclic:3", "--dim", "1,2,1"},
        {"paving", "--quiver", "cyclic:1", "--dim", "3", "--rep", "(0,2)+(0,1)", "--comp", "1;1;1"},
        {"gdim-table", "--quiver", "cyclic:2", "--dim", "2,1", "--all-comps"},
        {"klr-selftest", "--quiver", "A3", "--dim", "1,1,1", "--trials", "20", "--seed", "7"},
        {"suite", "homotopy", "--trials", "15", "--seed", "3"},
        {"suite", "klr-match"},
    };
    int identical = 0;
    std::string bad;
    for (const auto& cmd : commands) {
        std::vector<std::string> outs;
        bool ok = true;
        for (const char* threads : {"1", "1", "2", "4"}) {
            auto args = cmd;
            args.push_back("--threads");
            args.push_back(threads);
            int code = 0;
            outs.push_back(cli_output(args, &code));
            ok = ok && code == 0;
        }
        for (const auto& o : outs)
            ok = ok && o == outs.front() && !o.empty();
        identical += ok;
        if (!ok && bad.empty())
            bad = "; differs: " + cmd[0] + " " + cmd[1];
    }
    report(10, "determinism", identical == static_cast<int>(commands.size()),
        std::to_string(identical) + "/" + std::to_string(commands.size())
            + " commands byte-identical over repeated runs at --threads 1,2,4" + bad);
}

} // namespace

int main()
{
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    criterion1();
    criterion2();
    criteria3to5(threads);
    criterion6(threads);
    criterion7();
    criterion8();
    criterion9(threads);
    criterion10();
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all 10 criteria passed") << std::endl;
    return failures ? 1 : 0;
}
