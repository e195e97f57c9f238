#pragma once

// Self-test batteries: paving against point counts, geometric against KLR
// graded dimensions, KLR relations, and the homotopy properties.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mspring/extalg.hpp"
#include "mspring/handles.hpp"
#include "mspring/homotopy.hpp"
#include "mspring/klr.hpp"
#include "mspring/nilrep.hpp"
#include "mspring/parallel.hpp"
#include "mspring/paving.hpp"
#include "mspring/smash.hpp"

namespace mspring {

struct CaseVerdict {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseVerdict> cases;

    bool passed() const
    {
        return std::all_of(cases.begin(), cases.end(), [](const CaseVerdict& c) { return c.pass; });
    }
    long failures() const
    {
        return std::count_if(cases.begin(), cases.end(), [](const CaseVerdict& c) { return !c.pass; });
    }
};

inline const std::vector<Quiver>& small_quivers()
{
    static const std::vector<Quiver> qs{Quiver::linear(1), Quiver::linear(2), Quiver::linear(3),
        Quiver::cyclic(1), Quiver::cyclic(2), Quiver::cyclic(3)};
    return qs;
}

/// Nonzero dimension vectors with total at most max_total, in lexicographic order.
inline std::vector<DimVector> dims_up_to(int vertices, int max_total)
{
    std::vector<DimVector> out;
    std::vector<int> cur(static_cast<std::size_t>(vertices), 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == vertices) {
            DimVector d(cur);
            if (!d.is_zero())
                out.push_back(d);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[static_cast<std::size_t>(v)] = x;
            rec(v + 1, left - x);
        }
        cur[static_cast<std::size_t>(v)] = 0;
    };
    rec(0, max_total);
    return out;
}

/// Poincare polynomial at q against the F_q point count, for every quiver,
/// multisegment of total dimension <= max_total and composition.
inline SuiteReport paving_oracle_suite(int max_total = 4, const std::vector<int>& primes = {2, 3, 5}, int threads = 1)
{
    struct Job {
        Quiver q;
        Multisegment m;
        Composition comp;
    };
    std::vector<Job> jobs;
    for (const auto& q : small_quivers())
        for (const auto& d : dims_up_to(q.vertices(), max_total))
            for (const auto& m : enumerate_nilreps(q, d))
                for (const auto& comp : enumerate_comps(d))
                    jobs.push_back({q, m, comp});
    SuiteReport r{"paving-oracle", {}};
    r.cases = parallel_map(jobs.size(), threads, [&](std::size_t k) {
        const auto& [q, m, comp] = jobs[k];
        auto poly = poincare(q, m, comp);
        CaseVerdict v{q.name() + " " + m.str() + " [" + comp.str() + "]", true, {}};
        for (int p : primes) {
            auto count = count_points(q, m, comp, p);
            if (count != poly(p)) {
                v.pass = false;
                v.detail = "q=" + std::to_string(p) + ": poincare " + std::to_string(poly(p)) + ", count " + std::to_string(count);
                break;
            }
        }
        return v;
    });
    return r;
}

inline HalfLaurentSeries nil_hecke_closed_form(int n, int trunc = default_truncation)
{
    std::map<int, HalfLaurentSeries::Coef> lengths;
    for (const auto& w : all_perms(n))
        lengths[-2 * perm_length(w)] += 1;
    int low = lengths.begin()->first;
    return HalfLaurentSeries::polynomial(lengths, trunc) * free_polynomial_series(n, trunc - low);
}

/// Geometric against KLR graded dimensions on complete blocks, the nil Hecke
/// closed form, and transpose symmetry of every block computed.
inline SuiteReport klr_match_suite(int trunc = default_truncation, int max_total = 3, int threads = 1)
{
    struct Job {
        Quiver q;
        DimVector d;
    };
    std::vector<Job> jobs;
    for (const auto& q : {Quiver::linear(2), Quiver::linear(3), Quiver::cyclic(2), Quiver::cyclic(3)})
        for (const auto& d : dims_up_to(q.vertices(), max_total))
            jobs.push_back({q, d});
    for (int n = 1; n <= 3; ++n)
        jobs.push_back({Quiver::linear(1), DimVector({n})});
    auto per_job = parallel_map(jobs.size(), threads, [&](std::size_t k) {
        const auto& [q, d] = jobs[k];
        std::vector<CaseVerdict> out;
        auto comps = enumerate_complete_comps(d);
        std::map<std::pair<std::size_t, std::size_t>, HalfLaurentSeries> geo;
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = 0; b < comps.size(); ++b) {
                auto rep = compare_block(q, d, comps[a], comps[b], trunc);
                geo.emplace(std::make_pair(a, b), rep.geometric);
                CaseVerdict v{"match " + q.name() + " d=" + d.str() + " " + word_str(comps[a].word()) + " -> "
                        + word_str(comps[b].word()),
                    rep.normalized_match, {}};
                if (!v.pass)
                    v.detail = "first discrepancy at u^" + std::to_string(rep.first_discrepancy.value_or(0));
                out.push_back(v);
            }
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = a; b < comps.size(); ++b) {
                bool ok = transpose_symmetric(q, comps[a], comps[b], geo.at({a, b}), geo.at({b, a}));
                out.push_back({"transpose " + q.name() + " d=" + d.str() + " " + word_str(comps[a].word()) + " <-> "
                        + word_str(comps[b].word()),
                    ok, ok ? "" : "coefficients differ"});
            }
        if (q.vertices() == 1 && !q.is_cyclic()) {
            int n = d[0];
            auto expected = nil_hecke_closed_form(n, trunc);
            const auto& got = geo.at({0, 0});
            int bad = 0;
            bool ok = got.agrees_with(expected, &bad) && got.trunc() >= trunc;
            out.push_back({"nil-hecke closed form n=" + std::to_string(n), ok,
                ok ? "" : "first discrepancy at u^" + std::to_string(bad)});
        }
        return out;
    });
    SuiteReport r{"klr-match", {}};
    for (auto& v : per_job)
        r.cases.insert(r.cases.end(), v.begin(), v.end());
    return r;
}

/// Nil Hecke identities for divided differences on random polynomials.
inline CaseVerdict nil_hecke_divided_difference_check(int n, int trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    CaseVerdict v{"divided differences n=" + std::to_string(n), true, {}};
    for (int t = 0; t < trials && v.pass; ++t) {
        auto f = random_poly(rng, n, 6, 6);
        for (int r = 0; r + 1 < n; ++r)
            if (!f.divided_difference(r, r + 1).divided_difference(r, r + 1).is_zero()) {
                v = {v.name, false, "square of d_" + std::to_string(r + 1) + " nonzero on " + f.str()};
                break;
            }
        for (int r = 0; r + 2 < n && v.pass; ++r) {
            auto lhs = f.divided_difference(r, r + 1).divided_difference(r + 1, r + 2).divided_difference(r, r + 1);
            auto rhs = f.divided_difference(r + 1, r + 2).divided_difference(r, r + 1).divided_difference(r + 1, r + 2);
            if (!(lhs == rhs))
                v = {v.name, false, "braid relation fails at " + std::to_string(r + 1) + " on " + f.str()};
        }
    }
    return v;
}

/// Relation suite on every quiver and dimension vector with total <= max_total,
/// faithfulness rank, nil Hecke identities and smash-product centers.
inline SuiteReport relations_suite(int trials = 100, std::uint64_t seed = 42, int threads = 1, int max_total = 4)
{
    SuiteReport r{"relations", {}};
    for (const auto& q : small_quivers())
        for (const auto& d : dims_up_to(q.vertices(), max_total)) {
            KlrAlgebra alg(q, d);
            auto rep = relation_suite(alg, trials, seed, threads);
            for (const auto& rel : rep.relations) {
                CaseVerdict v{q.name() + " d=" + d.str() + " " + rel.name, rel.failures == 0,
                    std::to_string(rel.checks - rel.failures) + "/" + std::to_string(rel.checks)};
                if (!v.pass)
                    v.detail += " " + rel.witness;
                r.cases.push_back(v);
            }
            auto [rank, size] = faithfulness_rank(alg, seed);
            r.cases.push_back({q.name() + " d=" + d.str() + " faithfulness", rank == size,
                std::to_string(rank) + "/" + std::to_string(size)});
        }
    for (int n = 2; n <= 4; ++n)
        r.cases.push_back(nil_hecke_divided_difference_check(n, trials, seed));
    for (int n = 1; n <= 3; ++n) {
        auto dims = smash_center_dims(n, 6);
        bool ok = true;
        std::string got;
        for (int deg = 0; deg <= 6; ++deg) {
            got += (deg ? "," : "") + std::to_string(dims[static_cast<std::size_t>(deg)]);
            // partitions of deg into parts <= n
            std::vector<long> p(static_cast<std::size_t>(deg + 1), 0);
            p[0] = 1;
            for (int part = 1; part <= n; ++part)
                for (int k = part; k <= deg; ++k)
                    p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
            ok = ok && p[static_cast<std::size_t>(deg)] == dims[static_cast<std::size_t>(deg)];
        }
        r.cases.push_back({"smash center n=" + std::to_string(n), ok, got});
        auto series = springer_smash_gdim(n);
        bool slices = true;
        for (int deg = 0; deg <= 6; ++deg)
            slices = slices && series[2 * deg] == smash_slice_dim(n, deg);
        r.cases.push_back({"smash slices n=" + std::to_string(n), slices, ""});
    }
    return r;
}

struct HomotopyTally {
    int trials = 0;
    int valid = 0;
    int cone_identity = 0;
    int euler_invariant = 0;
    int idempotent = 0;
    int reassembly = 0;
    int cone_euler = 0;
    std::string first_failure;
};

/// Property checks on a seeded corpus of random complexes over one handle.
template <AlgebraHandle H>
HomotopyTally homotopy_properties(const H& h, int trials, std::uint64_t seed, int threads = 1)
{
    struct Outcome {
        bool flags[6] = {false, false, false, false, false, false};
        std::string failure;
    };
    auto outcomes = parallel_map(static_cast<std::size_t>(trials), threads, [&](std::size_t t) {
        std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(ss);
        Outcome o;
        auto c = random_complex(h, rng);
        auto note = [&](const std::string& what) {
            if (o.failure.empty())
                o.failure = "trial " + std::to_string(t) + ": " + what;
        };
        if (!validate(h, c).ok) {
            note("corpus complex invalid");
            return o;
        }
        auto m = minimize(h, c);
        o.flags[0] = validate(h, m).ok;
        o.flags[1] = minimize(h, cone(h, identity_map(h, c))).empty();
        o.flags[2] = euler_symbol(m) == euler_symbol(c);
        o.flags[3] = equal_up_to_reordering(h, minimize(h, m), m);
        std::uniform_int_distribution<int> pick(-2, 2);
        auto wt = weight_truncate(h, c, pick(rng));
        auto cn = cone(h, wt.inclusion);
        o.flags[0] = o.flags[0] && validate(h, cn).ok && validate(h, wt.lower).ok && validate(h, wt.upper).ok;
        o.flags[4] = equal_up_to_reordering(h, minimize(h, cn), minimize(h, wt.lower));
        o.flags[5] = euler_symbol(cn) == euler_difference(euler_symbol(c), euler_symbol(wt.upper));
        const char* names[] = {"validity", "cone(id)", "euler invariance", "idempotence", "reassembly", "cone euler"};
        for (int k = 0; k < 6; ++k)
            if (!o.flags[k])
                note(names[k]);
        return o;
    });
    HomotopyTally tally;
    tally.trials = trials;
    for (const auto& o : outcomes) {
        tally.valid += o.flags[0];
        tally.cone_identity += o.flags[1];
        tally.euler_invariant += o.flags[2];
        tally.idempotent += o.flags[3];
        tally.reassembly += o.flags[4];
        tally.cone_euler += o.flags[5];
        if (tally.first_failure.empty())
            tally.first_failure = o.failure;
    }
    return tally;
}

inline void append_tally(SuiteReport& r, const std::string& handle, const HomotopyTally& t, const std::string& extra = {})
{
    auto line = [&](const std::string& what, int ok) {
        r.cases.push_back({handle + " " + what, ok == t.trials,
            std::to_string(ok) + "/" + std::to_string(t.trials) + (ok == t.trials ? extra : " " + t.first_failure)});
    };
    line("validity", t.valid);
    line("cone(id) minimizes to zero", t.cone_identity);
    line("euler invariant under minimize", t.euler_invariant);
    line("minimize idempotent", t.idempotent);
    line("weight truncation reassembly", t.reassembly);
    line("cone euler exactness", t.cone_euler);
}

inline SuiteReport homotopy_suite(int trials = 200, std::uint64_t seed = 42, int threads = 1)
{
    SuiteReport r{"homotopy", {}};
    {
        KlrHandle h(KlrAlgebra(Quiver::linear(1), DimVector({2})));
        auto t = homotopy_properties(h, trials, seed, threads);
        append_tally(r, "nilhecke:2", t, " (degree bound " + std::to_string(h.degree_bound_used()) + ")");
    }
    {
        KlrHandle h(KlrAlgebra(Quiver::linear(1), DimVector({3})));
        auto t = homotopy_properties(h, trials, seed, threads);
        append_tally(r, "nilhecke:3", t, " (degree bound " + std::to_string(h.degree_bound_used()) + ")");
    }
    {
        KlrHandle h(KlrAlgebra(Quiver::linear(2), DimVector({1, 1})));
        auto t = homotopy_properties(h, trials, seed, threads);
        append_tally(r, "klr:A2:1,1", t, " (degree bound " + std::to_string(h.degree_bound_used()) + ")");
    }
    {
        KlrHandle h(KlrAlgebra(Quiver::cyclic(2), DimVector({2, 1})));
        auto t = homotopy_properties(h, trials, seed, threads);
        append_tally(r, "klr:cyclic:2:2,1", t, " (degree bound " + std::to_string(h.degree_bound_used()) + ")");
    }
    {
        SmashHandle h(2);
        append_tally(r, "smash:2", homotopy_properties(h, trials, seed, threads));
    }
    return r;
}

} // namespace mspring
