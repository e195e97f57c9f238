#pragma once

// Command-line front end. run() parses argv, writes the result to out and
// returns the exit code: 0 success, 1 usage error, 2 mismatch found.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mspring/complex_json.hpp"
#include "mspring/extalg.hpp"
#include "mspring/klr.hpp"
#include "mspring/nilrep.hpp"
#include "mspring/parse.hpp"
#include "mspring/paving.hpp"
#include "mspring/suites.hpp"

namespace mspring::cli {

using json = nlohmann::json;

enum Exit { ok = 0, usage = 1, mismatch = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json coef_json(const mpz_class& c)
{
    if (c.fits_slong_p())
        return c.get_si();
    return c.get_str();
}

inline json series_json(const HalfLaurentSeries& s)
{
    json terms = json::object();
    for (const auto& [e, c] : s.terms())
        terms[std::to_string(e)] = coef_json(c);
    return {{"terms", terms}, {"truncation", s.trunc()}};
}

inline json suite_json(const SuiteReport& r)
{
    json cases = json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"schema", "suite/1"}, {"suite", r.suite}, {"cases", cases}, {"failures", r.failures()}, {"passed", r.passed()}};
}

struct Common {
    std::string quiver;
    std::string dim;
    int trunc = default_truncation;
    std::string format = "json";
    int threads = 1;
    std::uint64_t seed = 42;
};

inline void add_common(CLI::App* app, Common& c, bool needs_quiver)
{
    auto* q = app->add_option("--quiver", c.quiver, "quiver: A<n> or cyclic:<n>");
    auto* d = app->add_option("--dim", c.dim, "dimension vector, e.g. 1,2,1");
    if (needs_quiver) {
        q->required();
        d->required();
    }
    app->add_option("--trunc", c.trunc, "series truncation order in u")->check(CLI::NonNegativeNumber);
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--seed", c.seed, "random seed");
}

class Runner {
public:
    Runner(std::ostream& out) : out_(out) {}

    int run(int argc, const char* const* argv)
    {
        CLI::App app{"Affine pavings, graded dimensions and KLR arithmetic for quivers of type A"};
        app.require_subcommand(1);

        // orbits
        auto* orbits = app.add_subcommand("orbits", "nilpotent orbits of a dimension vector");
        Common c_orbits;
        add_common(orbits, c_orbits, true);

        // paving / count
        auto* paving = app.add_subcommand("paving", "cells of the affine paving of a quiver flag variety");
        Common c_paving;
        std::string rep, comp, word;
        add_common(paving, c_paving, true);
        paving->add_option("--rep", rep, "multisegment, e.g. (0,2)+(0,1)")->required();
        auto* comp_opt = paving->add_option("--comp", comp, "composition, parts separated by ';'");
        auto* word_opt = paving->add_option("--word", word, "complete composition as a word");
        comp_opt->excludes(word_opt);

        auto* count = app.add_subcommand("count", "F_q point count of a quiver flag variety");
        Common c_count;
        std::string rep_c, comp_c, word_c;
        int q_prime = 2;
        add_common(count, c_count, true);
        count->add_option("--rep", rep_c, "multisegment")->required();
        auto* cc = count->add_option("--comp", comp_c, "composition");
        auto* cw = count->add_option("--word", word_c, "complete composition as a word");
        cc->excludes(cw);
        count->add_option("--q", q_prime, "prime field size")->required();

        // gdim
        auto* gdim = app.add_subcommand("gdim", "graded dimension of one block of the extension algebra");
        Common c_gdim;
        std::string mode = "compare", wi, wj, ci, cj;
        add_common(gdim, c_gdim, true);
        gdim->add_option("--mode", mode, "geo, alg or compare")->check(CLI::IsMember({"geo", "alg", "compare"}));
        auto* owi = gdim->add_option("--word-i", wi, "source word");
        auto* owj = gdim->add_option("--word-j", wj, "target word");
        auto* oci = gdim->add_option("--comp-i", ci, "source composition (geo mode)");
        auto* ocj = gdim->add_option("--comp-j", cj, "target composition (geo mode)");
        owi->excludes(oci);
        owj->excludes(ocj);

        auto* table = app.add_subcommand("gdim-table", "geometric graded dimensions of all blocks");
        Common c_table;
        bool all_comps = false;
        add_common(table, c_table, true);
        table->add_flag("--all-comps", all_comps, "include non-complete compositions (quiver Schur algebra)");

        // klr-selftest
        auto* selftest = app.add_subcommand("klr-selftest", "KLR relations on the polynomial representation");
        Common c_self;
        int trials = 100, max_degree = 6;
        add_common(selftest, c_self, true);
        selftest->add_option("--trials", trials, "random trials per relation")->check(CLI::PositiveNumber);
        selftest->add_option("--max-degree", max_degree, "degree of random test polynomials")->check(CLI::NonNegativeNumber);

        // complex
        auto* complex = app.add_subcommand("complex", "validate, minimize or truncate a complex given as JSON");
        Common c_complex;
        std::string file, op = "minimize";
        int cut = 0;
        add_common(complex, c_complex, false);
        complex->add_option("file", file, "JSON complex file ('-' for stdin)")->required();
        complex->add_option("--op", op, "validate, minimize, euler or truncate")
            ->check(CLI::IsMember({"validate", "minimize", "euler", "truncate"}));
        complex->add_option("--n", cut, "truncation degree for --op truncate");

        // suite
        auto* suite = app.add_subcommand("suite", "run a self-test battery");
        Common c_suite;
        std::string suite_name;
        int suite_trials = -1;
        add_common(suite, c_suite, false);
        suite->add_option("name", suite_name, "paving-oracle, klr-match, relations or homotopy")
            ->required()
            ->check(CLI::IsMember({"paving-oracle", "klr-match", "relations", "homotopy"}));
        suite->add_option("--trials", suite_trials, "trials (relations: per relation, homotopy: per handle)");

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            out_ << app.help();
            return ok;
        } catch (const CLI::CallForAllHelp& e) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return ok;
        } catch (const CLI::ParseError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return usage;
        }

        try {
            if (*orbits)
                return cmd_orbits(c_orbits);
            if (*paving)
                return cmd_paving(c_paving, rep, comp, word, comp_opt->count() > 0, std::nullopt);
            if (*count)
                return cmd_paving(c_count, rep_c, comp_c, word_c, cc->count() > 0, q_prime);
            if (*gdim)
                return cmd_gdim(c_gdim, mode, wi, wj, ci, cj);
            if (*table)
                return cmd_table(c_table, all_comps);
            if (*selftest)
                return cmd_selftest(c_self, trials, max_degree);
            if (*complex)
                return cmd_complex(c_complex, file, op, cut);
            if (*suite)
                return cmd_suite(c_suite, suite_name, suite_trials);
        } catch (const ParseError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return usage;
        } catch (const UsageError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return usage;
        } catch (const json::exception& e) {
            std::cerr << "error: malformed JSON input: " << e.what() << "\n";
            return usage;
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return usage;
        }
        return usage;
    }

private:
    void emit(const json& doc) { out_ << doc.dump(2) << "\n"; }

    static Composition read_comp(const Quiver& q, const std::string& comp, const std::string& word, bool use_comp)
    {
        if (use_comp)
            return parse_composition(q, comp);
        if (word.empty())
            throw UsageError("one of --comp or --word is required");
        return Composition::from_word(q.vertices(), parse_word(q, word));
    }

    int cmd_orbits(const Common& c)
    {
        auto q = parse_quiver(c.quiver);
        auto d = parse_dim(q, c.dim);
        auto reps = enumerate_nilreps(q, d);
        std::stable_sort(reps.begin(), reps.end(),
            [&](const Multisegment& a, const Multisegment& b) { return orbit_dim(q, a) < orbit_dim(q, b); });
        if (c.format == "table") {
            out_ << "# " << q.name() << " d=" << d.str() << ": " << reps.size() << " orbits\n";
            for (const auto& m : reps)
                out_ << m.str() << "\t" << orbit_dim(q, m) << "\n";
            return ok;
        }
        json list = json::array(), dims = json::array();
        for (const auto& m : reps) {
            list.push_back({{"rep", m.str()}, {"orbit_dim", orbit_dim(q, m)}, {"aut_multiplicities", aut_series_exponents(m)}});
            dims.push_back(orbit_dim(q, m));
        }
        emit({{"schema", "orbits/1"}, {"quiver", q.name()}, {"dim", d.str()}, {"count", reps.size()}, {"orbit_dims", dims},
            {"multisegments", list}});
        return ok;
    }

    int cmd_paving(const Common& c, const std::string& rep, const std::string& comp, const std::string& word, bool use_comp,
        std::optional<int> prime)
    {
        auto q = parse_quiver(c.quiver);
        auto d = parse_dim(q, c.dim);
        auto m = parse_multisegment(q, rep);
        if (m.dim_vector(q) != d)
            throw UsageError("representation " + m.str() + " has dimension vector " + m.dim_vector(q).str() + ", not " + d.str());
        auto f = read_comp(q, comp, word, use_comp);
        if (f.target() != d)
            throw UsageError("composition " + f.str() + " does not sum to " + d.str());
        if (prime && !fp::is_prime(*prime))
            throw UsageError("--q " + std::to_string(*prime) + " is not a prime");
        auto cells = paving_cells(q, m, f);
        auto poly = PoincarePolynomial(cells);
        json poincare = json::object();
        for (const auto& [k, v] : poly.coefficients())
            poincare[std::to_string(k)] = v;
        if (!prime) {
            if (c.format == "table") {
                out_ << "cells:";
                for (int x : cells)
                    out_ << " " << x;
                out_ << "\npoincare:";
                for (const auto& [k, v] : poly.coefficients())
                    out_ << " " << v << "*q^" << k;
                out_ << "\neuler: " << cells.size() << "\n";
                return ok;
            }
            emit({{"schema", "paving/1"}, {"quiver", q.name()}, {"dim", d.str()}, {"rep", m.str()}, {"comp", f.str()},
                {"cells", cells}, {"poincare", poincare}, {"euler", cells.size()}});
            return ok;
        }
        auto n = count_points(q, m, f, *prime);
        bool match = n == poly(*prime);
        if (c.format == "table")
            out_ << "count over F_" << *prime << ": " << n << "\npoincare at q: " << poly(*prime) << "\n"
                 << (match ? "match" : "MISMATCH") << "\n";
        else
            emit({{"schema", "count/1"}, {"quiver", q.name()}, {"dim", d.str()}, {"rep", m.str()}, {"comp", f.str()},
                {"q", *prime}, {"count", n}, {"poincare_at_q", poly(*prime)}, {"poincare", poincare}, {"match", match}});
        return match ? ok : mismatch;
    }

    int cmd_gdim(const Common& c, const std::string& mode, const std::string& wi, const std::string& wj, const std::string& ci,
        const std::string& cj)
    {
        auto q = parse_quiver(c.quiver);
        auto d = parse_dim(q, c.dim);
        auto read = [&](const std::string& w, const std::string& cm, const char* which) {
            if (!cm.empty())
                return parse_composition(q, cm);
            if (w.empty())
                throw UsageError(std::string("--word-") + which + " or --comp-" + which + " is required");
            return Composition::from_word(q.vertices(), parse_word(q, w));
        };
        auto i = read(wi, ci, "i"), j = read(wj, cj, "j");
        detail::check_block(q, d, i, j);
        if (mode != "geo" && (!i.is_complete() || !j.is_complete()))
            throw UsageError("modes alg and compare need complete compositions");
        json doc{{"schema", "gdim/1"}, {"quiver", q.name()}, {"dim", d.str()}, {"i", i.str()}, {"j", j.str()}, {"mode", mode}};
        int code = ok;
        if (mode == "geo") {
            auto s = gdim_geo(q, d, i, j, c.trunc);
            doc["geo"] = series_json(s);
            if (c.format == "table") {
                out_ << s.str() << "\n";
                return ok;
            }
        } else if (mode == "alg") {
            auto s = gdim_alg_klr(q, d, i, j, c.trunc);
            doc["alg"] = series_json(s);
            if (c.format == "table") {
                out_ << s.str() << "\n";
                return ok;
            }
        } else {
            auto r = compare_block(q, d, i, j, c.trunc);
            doc["geo"] = series_json(r.geometric);
            doc["alg"] = series_json(r.algebraic);
            doc["normalized_alg"] = series_json(r.normalized);
            doc["shift"] = dim_qvariety(q, j) - dim_qvariety(q, i);
            doc["match"] = r.normalized_match;
            if (r.first_discrepancy)
                doc["first_discrepancy"] = *r.first_discrepancy;
            code = r.normalized_match ? ok : mismatch;
            if (c.format == "table") {
                out_ << "geo:  " << r.geometric.str() << "\nalg:  " << r.normalized.str() << "\n"
                     << (r.normalized_match ? "match" : "MISMATCH") << "\n";
                return code;
            }
        }
        emit(doc);
        return code;
    }

    int cmd_table(const Common& c, bool all_comps)
    {
        auto q = parse_quiver(c.quiver);
        auto d = parse_dim(q, c.dim);
        std::vector<Composition> comps;
        for (auto& f : enumerate_comps(d))
            if (all_comps || f.is_complete())
                comps.push_back(std::move(f));
        std::vector<std::pair<std::size_t, std::size_t>> keys;
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = 0; b < comps.size(); ++b)
                keys.emplace_back(a, b);
        struct Row {
            HalfLaurentSeries geo;
            std::optional<bool> match;
        };
        auto rows = parallel_map(keys.size(), c.threads, [&](std::size_t k) {
            const auto& i = comps[keys[k].first];
            const auto& j = comps[keys[k].second];
            Row r{gdim_geo(q, d, i, j, c.trunc), std::nullopt};
            if (i.is_complete() && j.is_complete())
                r.match = compare_block(q, d, i, j, c.trunc).normalized_match;
            return r;
        });
        bool all = true;
        json blocks = json::array();
        for (std::size_t k = 0; k < keys.size(); ++k) {
            const auto& i = comps[keys[k].first];
            const auto& j = comps[keys[k].second];
            json b{{"i", i.str()}, {"j", j.str()}, {"geo", series_json(rows[k].geo)}};
            if (rows[k].match) {
                b["alg_match"] = *rows[k].match;
                all = all && *rows[k].match;
            }
            blocks.push_back(b);
            if (c.format == "table")
                out_ << "[" << i.str() << "] -> [" << j.str() << "]\t" << rows[k].geo.str()
                     << (rows[k].match ? (*rows[k].match ? "\tmatch" : "\tMISMATCH") : "") << "\n";
        }
        if (c.format == "json")
            emit({{"schema", "gdim-table/1"}, {"quiver", q.name()}, {"dim", d.str()}, {"all_comps", all_comps}, {"blocks", blocks},
                {"all_match", all}});
        return all ? ok : mismatch;
    }

    int cmd_selftest(const Common& c, int trials, int max_degree)
    {
        auto q = parse_quiver(c.quiver);
        auto d = parse_dim(q, c.dim);
        if (d.is_zero())
            throw UsageError("dimension vector must be nonzero");
        KlrAlgebra alg(q, d);
        auto rep = relation_suite(alg, trials, c.seed, c.threads, max_degree);
        auto [rank, size] = faithfulness_rank(alg, c.seed);
        bool passed = rep.passed() && rank == size;
        if (c.format == "table") {
            for (const auto& r : rep.relations)
                out_ << r.name << "\t" << (r.failures ? "FAIL" : "pass") << "\t" << r.checks - r.failures << "/" << r.checks
                     << (r.failures ? "\t" + r.witness : "") << "\n";
            out_ << "faithfulness\t" << (rank == size ? "pass" : "FAIL") << "\t" << rank << "/" << size << "\n";
            return passed ? ok : mismatch;
        }
        json rels = json::array();
        for (const auto& r : rep.relations) {
            json v{{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"pass", r.failures == 0}};
            if (r.failures)
                v["witness"] = r.witness;
            rels.push_back(v);
        }
        emit({{"schema", "klr-selftest/1"}, {"quiver", q.name()}, {"dim", d.str()}, {"trials", trials}, {"seed", c.seed},
            {"max_degree", max_degree}, {"relations", rels}, {"faithfulness", {{"rank", rank}, {"family", size}}},
            {"passed", passed}});
        return passed ? ok : mismatch;
    }

    int cmd_complex(const Common& c, const std::string& file, const std::string& op, int cut)
    {
        json doc;
        if (file == "-")
            doc = json::parse(std::cin);
        else {
            std::ifstream in(file);
            if (!in)
                throw UsageError("cannot open " + file);
            doc = json::parse(in);
        }
        auto handle = make_handle(doc.at("algebra"));
        return std::visit([&](const auto& h) { return complex_op(c, h, doc, op, cut); }, handle);
    }

    template <AlgebraHandle H>
    int complex_op(const Common& c, const H& h, const json& doc, const std::string& op, int cut)
    {
        auto cx = complex_from_json(h, doc);
        json report{{"schema", "complex-report/1"}, {"algebra", doc.at("algebra")}, {"op", op}};
        json idems = json::array();
        for (int i = 0; i < h.idempotent_count(); ++i)
            idems.push_back(h.idempotent_name(i));
        report["idempotents"] = idems;
        auto v = validate(h, cx);
        report["valid"] = v.ok;
        if (!v.ok) {
            report["violation"] = v.message;
            if (c.format == "table")
                out_ << "invalid: " << v.message << "\n";
            else
                emit(report);
            return mismatch;
        }
        report["euler"] = euler_to_json(h, euler_symbol(cx));
        if (op == "minimize") {
            MinimizeStats stats;
            auto m = minimize(h, cx, &stats);
            report["minimized"] = complex_to_json(h, m);
            report["cancellations"] = stats.cancellations;
            report["euler_preserved"] = euler_symbol(m) == euler_symbol(cx);
        } else if (op == "truncate") {
            auto wt = weight_truncate(h, cx, cut);
            report["n"] = cut;
            report["upper"] = complex_to_json(h, wt.upper);
            report["lower"] = complex_to_json(h, wt.lower);
            report["reassembly"] = equal_up_to_reordering(h, minimize(h, cone(h, wt.inclusion)), minimize(h, wt.lower));
        }
        if constexpr (std::is_same_v<H, KlrHandle>)
            report["degree_bound"] = h.degree_bound_used();
        if (c.format == "table") {
            out_ << "valid\n";
            for (const auto& e : report["euler"])
                out_ << "euler [" << e["idempotent"].template get<std::string>() << "," << e["shift"] << "] "
                     << e["coefficient"] << "\n";
            if (report.contains("minimized"))
                out_ << "minimized: " << report["minimized"]["generators"].size() << " generators\n";
            return ok;
        }
        emit(report);
        if (op == "truncate" && !report["reassembly"].template get<bool>())
            return mismatch;
        return ok;
    }

    int cmd_suite(const Common& c, const std::string& name, int trials)
    {
        SuiteReport r;
        if (name == "paving-oracle")
            r = paving_oracle_suite(4, {2, 3, 5}, c.threads);
        else if (name == "klr-match")
            r = klr_match_suite(c.trunc, 3, c.threads);
        else if (name == "relations")
            r = relations_suite(trials > 0 ? trials : 100, c.seed, c.threads);
        else
            r = homotopy_suite(trials > 0 ? trials : 200, c.seed, c.threads);
        if (c.format == "table") {
            for (const auto& v : r.cases)
                out_ << (v.pass ? "pass" : "FAIL") << "\t" << v.name << (v.detail.empty() ? "" : "\t" + v.detail) << "\n";
            out_ << r.suite << ": " << r.cases.size() - static_cast<std::size_t>(r.failures()) << "/" << r.cases.size()
                 << " passed\n";
        } else
            emit(suite_json(r));
        return r.passed() ? ok : mismatch;
    }

    std::ostream& out_;
};

inline int run(int argc, const char* const* argv, std::ostream& out)
{
    return Runner(out).run(argc, argv);
}

} // namespace mspring::cli
