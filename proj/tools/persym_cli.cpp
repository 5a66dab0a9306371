// Command-line driver. Two subcommands:
//
//   census: enumerate the tuple space at (n, k) and print the rank
//           distribution (json, csv, or table).
//   verify: run one of the cross-validation suites and print a
//           machine-readable report; any failed check names the equation
//           and both sides on stderr.
//
// Exit codes: 0 success, 1 usage, 2 budget refusal, 3 verification failure.
// All big integers are serialized as decimal strings, rationals as "p/q".
// Output is byte-deterministic for fixed inputs when --no-timing is given.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "persym/census.hpp"
#include "persym/closedform.hpp"
#include "persym/expsum.hpp"
#include "persym/fitting.hpp"
#include "persym/identities.hpp"
#include "persym/persym.hpp"
#include "persym/polysys.hpp"
#include "persym/version.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerification = 3;

using Clock = std::chrono::steady_clock;

std::string rational_str(const persym::BigRational& v) { return v.get_str(); }

ordered_json poly_json(const persym::RatPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : p.coeff_strings()) arr.push_back(s);
    return arr;
}

ordered_json gamma_json(const persym::RankDistribution& dist) {
    ordered_json arr = ordered_json::array();
    for (const auto& g : dist.counts) arr.push_back(g.get_str());
    return arr;
}

struct NRange {
    int lo = 0;
    int hi = 0;
};

NRange parse_n_range(const std::string& text) {
    NRange r;
    std::size_t pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, pos));
            r.hi = std::stoi(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("--n-range: expected N or A..B, got '" + text + "'");
    }
    if (r.lo < 0 || r.hi < r.lo)
        throw std::invalid_argument("--n-range: need 0 <= A <= B in '" + text + "'");
    return r;
}

void emit_json(ordered_json& doc, bool no_timing, Clock::time_point t0) {
    if (!no_timing)
        doc["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                               .count();
    std::cout << doc.dump(2) << "\n";
}

struct SuiteResult {
    ordered_json payload;
    bool pass = true;
    std::vector<std::string> failures;

    void fail(std::string line) {
        pass = false;
        failures.push_back(std::move(line));
    }
};

persym::RankDistribution load_distribution(int n, int k, persym::GammaSource src, int workers,
                                           bool force) {
    return src == persym::GammaSource::Census ? persym::census(n, k, workers, force)
                                              : persym::closedform_distribution(n, k);
}

SuiteResult suite_moments(NRange nr, int k, persym::GammaSource src, int workers, bool force) {
    SuiteResult out;
    out.payload["suite"] = "moments";
    out.payload["source"] = persym::to_string(src);
    ordered_json reports = ordered_json::array();
    for (int n = nr.lo; n <= nr.hi; ++n) {
        persym::MomentReport rep = persym::verify_moments(n, k, src, workers, force);
        ordered_json jr;
        jr["n"] = n;
        jr["k"] = k;
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks) {
            checks.push_back({{"name", c.name},
                              {"lhs", rational_str(c.lhs)},
                              {"rhs", rational_str(c.rhs)},
                              {"pass", c.pass}});
            if (!c.pass)
                out.fail("moments n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                         c.name + ": lhs = " + rational_str(c.lhs) +
                         ", rhs = " + rational_str(c.rhs));
        }
        jr["checks"] = checks;
        jr["pass"] = rep.all_pass();
        reports.push_back(jr);
        if (!rep.all_pass()) out.pass = false;
    }
    out.payload["reports"] = reports;
    out.payload["pass"] = out.pass;
    return out;
}

SuiteResult suite_census_vs_formula(NRange nr, int k, int workers, bool force) {
    SuiteResult out;
    out.payload["suite"] = "census-vs-formula";
    ordered_json rows = ordered_json::array();
    for (int n = nr.lo; n <= nr.hi; ++n) {
        persym::RankDistribution from_census = persym::census(n, k, workers, force);
        persym::RankDistribution from_formula = persym::closedform_distribution(n, k);
        bool same = from_census == from_formula;
        ordered_json row;
        row["n"] = n;
        row["k"] = k;
        row["census"] = gamma_json(from_census);
        row["closedform"] = gamma_json(from_formula);
        row["pass"] = same;
        rows.push_back(row);
        if (!same)
            out.fail("census-vs-formula n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     ": distributions differ");
    }
    out.payload["rows"] = rows;
    out.payload["pass"] = out.pass;
    return out;
}

SuiteResult suite_expsum(int n, int k) {
    long tuple_bits = static_cast<long>(n) * (k + 1);
    if (tuple_bits > 20 || k + 2 * n > 24)
        throw persym::BudgetError(
            "expsum suite n=" + std::to_string(n) + " k=" + std::to_string(k) +
                ": n(k+1) > 20 or k+2n > 24",
            persym::pow2(static_cast<unsigned long>(std::max(tuple_bits, 0L))));

    SuiteResult out;
    out.payload["suite"] = "expsum";
    out.payload["n"] = n;
    out.payload["k"] = k;
    const std::uint64_t tuples = std::uint64_t{1} << tuple_bits;
    const persym::word block_mask = (persym::word{1} << (k + 1)) - 1;
    std::uint64_t mismatches = 0;
    persym::BigInt f_sum(0);
    for (std::uint64_t idx = 0; idx < tuples; ++idx) {
        std::vector<persym::LaurentTail> tails;
        tails.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            tails.emplace_back((idx >> (j * (k + 1))) & block_mask, k + 1);
        std::int64_t f = persym::f_k_bruteforce(tails, k);
        persym::CoeffTuple t = persym::tuple_from_index(persym::BigInt(static_cast<unsigned long>(idx)), n, k);
        int r = persym::rank(persym::build_matrix(t));
        std::int64_t expected = std::int64_t{1} << (2 * n + k - r);
        if (f != expected) {
            ++mismatches;
            if (mismatches <= 5)
                out.fail("expsum n=" + std::to_string(n) + " k=" + std::to_string(k) + " tuple " +
                         std::to_string(idx) + ": f = " + std::to_string(f) +
                         ", 2^(2n+k-rank) = " + std::to_string(expected));
        }
        f_sum += f;
    }
    if (mismatches > 5)
        out.fail("expsum: " + std::to_string(mismatches) + " tuples violated the rank identity");

    // The mean of f over the tuple space is the q = 1 solution count.
    persym::BigRational mean = persym::BigRational(f_sum) /
                               persym::BigRational(persym::pow2(static_cast<unsigned long>(tuple_bits)));
    persym::BigInt expected_r1 = persym::r1_expected(n, k);
    bool mean_ok = mean == persym::BigRational(expected_r1);
    if (!mean_ok)
        out.fail("expsum n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 ": mean f = " + rational_str(mean) + ", expected " + expected_r1.get_str());

    out.payload["tuples"] = tuples;
    out.payload["identity_mismatches"] = mismatches;
    out.payload["mean_f"] = rational_str(mean);
    out.payload["q1_solution_count"] = expected_r1.get_str();
    out.payload["pass"] = out.pass;
    return out;
}

SuiteResult suite_rq(int q, NRange nr, int k, persym::GammaSource src, int workers, bool force) {
    SuiteResult out;
    out.payload["suite"] = "rq";
    out.payload["q"] = q;
    out.payload["source"] = persym::to_string(src);
    ordered_json rows = ordered_json::array();
    for (int n = nr.lo; n <= nr.hi; ++n) {
        persym::RankDistribution dist = load_distribution(n, k, src, workers, force);
        persym::BigInt r = persym::r_qnk(q, n, k, dist);
        ordered_json row;
        row["n"] = n;
        row["k"] = k;
        row["r"] = r.get_str();
        ordered_json checks = ordered_json::array();
        auto check = [&](const std::string& name, const persym::BigInt& other) {
            bool ok = other == r;
            checks.push_back({{"name", name}, {"value", other.get_str()}, {"pass", ok}});
            if (!ok)
                out.fail("rq q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" +
                         std::to_string(k) + ": " + name + " = " + other.get_str() +
                         ", distribution gives " + r.get_str());
        };
        if (q == 1) check("closed-form-2^2n+2^k-1", persym::r1_expected(n, k));
        if (q == 4 && k == 10 && n >= 1 && n <= 3) {
            const long anchor_c[] = {587, 6361, 1552553};
            const unsigned long anchor_e[] = {31, 28, 21};
            check("reference-value",
                  persym::BigInt(anchor_c[n - 1]) * persym::pow2(anchor_e[n - 1]));
        }
        if (src == persym::GammaSource::ClosedForm &&
            static_cast<long>(n) * (k + 1) <= 16)
            check("census-gammas", persym::r_qnk(q, n, k, persym::census(n, k, workers)));
        if (2L * n * q <= 16 && static_cast<long>(q) * k <= 64)
            check("marginalized-count", persym::count_solutions_marginalized(q, n, k, workers));
        row["checks"] = checks;
        rows.push_back(row);
    }
    out.payload["rows"] = rows;
    if (q == 4 && k == 10) {
        persym::TranscriptionReport rep = persym::adjudicate_r4_transcriptions();
        ordered_json adj;
        adj["resolved_y2_coeff"] = rep.resolved_y2_coeff.get_str();
        adj["resolved_gamma7_y5_coeff"] = rep.resolved_gamma7_y5_coeff.get_str();
        adj["count_polynomial"] = poly_json(rep.resolved);
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks) {
            checks.push_back({{"name", c.name}, {"detail", c.detail}, {"pass", c.pass}});
            if (!c.pass) out.fail("rq adjudication: " + c.name + ": " + c.detail);
        }
        adj["checks"] = checks;
        adj["pass"] = rep.all_pass();
        out.payload["adjudication"] = adj;
    }
    out.payload["pass"] = out.pass;
    return out;
}

SuiteResult suite_fit() {
    SuiteResult out;
    out.payload["suite"] = "fit";

    persym::Gamma7Fit g7 = persym::fit_gamma7();
    bool g7_match = g7.assembled_y_coeffs == persym::gamma_general_formula(7).y_coeffs;
    if (!g7_match)
        out.fail("fit: assembled rank-7 bivariate form differs from the general table row");
    ordered_json jg7;
    jg7["alpha"] = poly_json(g7.alpha_x);
    jg7["beta"] = poly_json(g7.beta_x);
    jg7["gamma"] = poly_json(g7.gamma_x);
    jg7["a"] = poly_json(g7.a_x);
    jg7["b"] = poly_json(g7.b_x);
    jg7["c"] = poly_json(g7.c_x);
    jg7["d"] = poly_json(g7.d_x);
    jg7["e"] = poly_json(g7.e_x);
    jg7["f"] = poly_json(g7.f_x);
    jg7["g"] = poly_json(g7.g_x);
    jg7["matches_general_row"] = g7_match;
    out.payload["gamma7"] = jg7;

    persym::K10HighRankFit k10 = persym::fit_k10_high_ranks();
    if (!k10.consistent)
        out.fail("fit: k10 high-rank system inconsistent at equation '" + k10.failing_equation +
                 "'");
    ordered_json jk10;
    jk10["consistent"] = k10.consistent;
    jk10["equations"] = k10.equation_count;
    jk10["unknowns"] = k10.unknown_count;
    jk10["rank"] = k10.system_rank;
    if (k10.consistent) {
        ordered_json rows;
        bool rows_match = true;
        for (int h = 0; h < 3; ++h) {
            rows[std::to_string(8 + h)] = poly_json(k10.rows[static_cast<std::size_t>(h)]);
            if (k10.rows[static_cast<std::size_t>(h)] != persym::gamma_k10_poly(8 + h))
                rows_match = false;
        }
        jk10["rows"] = rows;
        jk10["matches_table"] = rows_match;
        if (!rows_match) out.fail("fit: fitted k10 high-rank rows differ from the table");
    } else {
        jk10["failing_equation"] = k10.failing_equation;
    }
    out.payload["k10"] = jk10;
    out.payload["pass"] = out.pass;
    return out;
}

int finish_verify(SuiteResult&& result, const ordered_json& params, const std::string& format,
                  bool no_timing, Clock::time_point t0) {
    for (const auto& line : result.failures) std::cerr << "FAIL " << line << "\n";
    if (format == "table") {
        std::cout << "suite " << result.payload["suite"].get<std::string>() << ": "
                  << (result.pass ? "PASS" : "FAIL") << "\n";
    } else {
        ordered_json doc;
        doc["command"] = "verify";
        doc["version"] = persym::kVersion;
        doc["params"] = params;
        doc["payload"] = std::move(result.payload);
        emit_json(doc, no_timing, t0);
    }
    return result.pass ? kExitOk : kExitVerification;
}

}

int main(int argc, char** argv) {
    CLI::App app{"persymmetric block-matrix rank census and identity verification"};
    app.require_subcommand(1);

    int n = 0, k = 0, workers = 1, q = 1;
    bool force = false, no_timing = false;
    std::string format = "json", suite, n_range_text, source_text = "closedform";

    CLI::App* census_cmd = app.add_subcommand("census", "enumerate tuples, print the rank distribution");
    census_cmd->add_option("--n", n, "number of blocks")->required()->check(CLI::Range(0, 64));
    census_cmd->add_option("--k", k, "columns per block")->required()->check(CLI::Range(1, 63));
    census_cmd->add_option("--workers", workers, "worker threads")
        ->envname("PERSYM_WORKERS")
        ->check(CLI::Range(1, 64));
    census_cmd->add_flag("--force", force, "run even above the default cost ceiling");
    census_cmd->add_option("--format", format, "json, csv, or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    census_cmd->add_flag("--no-timing", no_timing, "omit the timing field");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a cross-validation suite");
    verify_cmd->add_option("--suite", suite, "moments, census-vs-formula, expsum, rq, or fit")
        ->required()
        ->check(CLI::IsMember({"moments", "census-vs-formula", "expsum", "rq", "fit"}));
    verify_cmd->add_option("--n", n, "number of blocks (expsum)")->check(CLI::Range(0, 64));
    verify_cmd->add_option("--k", k, "columns per block")->check(CLI::Range(1, 63));
    verify_cmd->add_option("--q", q, "system columns (rq)")->check(CLI::Range(1, 64));
    verify_cmd->add_option("--n-range", n_range_text, "N or A..B (moments, census-vs-formula, rq)");
    verify_cmd->add_option("--source", source_text, "census or closedform")
        ->check(CLI::IsMember({"census", "closedform"}));
    verify_cmd->add_option("--workers", workers, "worker threads")
        ->envname("PERSYM_WORKERS")
        ->check(CLI::Range(1, 64));
    verify_cmd->add_flag("--force", force, "run even above the default cost ceiling");
    verify_cmd->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    verify_cmd->add_flag("--no-timing", no_timing, "omit the timing field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Clock::time_point t0 = Clock::now();
    try {
        if (census_cmd->parsed()) {
            persym::RankDistribution dist = persym::census(n, k, workers, force);
            if (format == "csv") {
                std::cout << "i,gamma\n";
                for (std::size_t i = 0; i < dist.counts.size(); ++i)
                    std::cout << i << "," << dist.counts[i].get_str() << "\n";
            } else if (format == "table") {
                std::cout << "n=" << dist.n << " k=" << dist.k << " total="
                          << dist.total().get_str() << "\n";
                std::cout << "rank  count\n";
                for (std::size_t i = 0; i < dist.counts.size(); ++i)
                    std::cout << i << (i < 10 ? "     " : "    ") << dist.counts[i].get_str()
                              << "\n";
            } else {
                ordered_json doc;
                doc["command"] = "census";
                doc["version"] = persym::kVersion;
                doc["params"] = {{"n", n}, {"k", k}, {"workers", workers}, {"force", force}};
                ordered_json payload;
                payload["n"] = dist.n;
                payload["k"] = dist.k;
                payload["gamma"] = gamma_json(dist);
                doc["payload"] = payload;
                emit_json(doc, no_timing, t0);
            }
            return kExitOk;
        }

        // verify
        persym::GammaSource src = source_text == "census" ? persym::GammaSource::Census
                                                          : persym::GammaSource::ClosedForm;
        NRange nr = parse_n_range(n_range_text.empty() ? "1..3" : n_range_text);
        ordered_json params;
        params["suite"] = suite;

        if (suite == "moments") {
            if (k == 0) throw std::invalid_argument("moments suite needs --k");
            params["k"] = k;
            params["n_range"] = std::to_string(nr.lo) + ".." + std::to_string(nr.hi);
            params["source"] = source_text;
            params["workers"] = workers;
            return finish_verify(suite_moments(nr, k, src, workers, force), params, format,
                                 no_timing, t0);
        }
        if (suite == "census-vs-formula") {
            if (k == 0) throw std::invalid_argument("census-vs-formula suite needs --k");
            params["k"] = k;
            params["n_range"] = std::to_string(nr.lo) + ".." + std::to_string(nr.hi);
            params["workers"] = workers;
            return finish_verify(suite_census_vs_formula(nr, k, workers, force), params, format,
                                 no_timing, t0);
        }
        if (suite == "expsum") {
            if (k == 0) throw std::invalid_argument("expsum suite needs --k");
            params["n"] = n;
            params["k"] = k;
            return finish_verify(suite_expsum(n, k), params, format, no_timing, t0);
        }
        if (suite == "rq") {
            if (k == 0) throw std::invalid_argument("rq suite needs --k");
            params["q"] = q;
            params["k"] = k;
            params["n_range"] = std::to_string(nr.lo) + ".." + std::to_string(nr.hi);
            params["source"] = source_text;
            params["workers"] = workers;
            return finish_verify(suite_rq(q, nr, k, src, workers, force), params, format,
                                 no_timing, t0);
        }
        // fit
        return finish_verify(suite_fit(), params, format, no_timing, t0);
    } catch (const persym::BudgetError& e) {
        std::cerr << "budget: " << e.what() << " (estimated cost "
                  << e.estimated_leaves().get_str() << ")\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}
