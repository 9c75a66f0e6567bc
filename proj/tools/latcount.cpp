// latcount — exact endpoint counts of nearest-neighbor lattice walks.
//
// Subcommands: count, table, poly, verify, bench, bernoulli.
// Exit codes: 0 success, 1 usage or guard error, 2 verification or digest
// mismatch. Counts appear in JSON and CSV only as decimal strings.

#include "latcount/latcount.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using latcount::BigInt;
using latcount::BruteLimits;
using latcount::CoeffVector;
using latcount::to_decimal;
using latcount::WalkSpec;
using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kEngineNames = {"brute",  "closed",     "parity",
                                               "poly",   "recurrence", "series"};

bool is_engine_name(const std::string& name) {
    return std::find(kEngineNames.begin(), kEngineNames.end(), name) != kEngineNames.end();
}

BigInt run_engine(const std::string& name, const WalkSpec& spec, const BruteLimits& limits,
                  const CoeffVector* coeffs) {
    if (name == "brute") return latcount::count_bruteforce(spec, limits);
    if (name == "closed") return latcount::count_closed_form(spec);
    if (name == "parity") return latcount::count_parity_ball(spec);
    if (name == "recurrence") return latcount::count_recurrence(spec);
    if (name == "series")
        return latcount::series_counts(spec.dimension, spec.steps).counts.back();
    if (name == "poly") return latcount::count_polynomial(spec, *coeffs);
    throw std::invalid_argument("unknown engine: " + name);
}

BruteLimits brute_limits_from_env() {
    BruteLimits limits;
    const char* raw = std::getenv("LATCOUNT_BRUTE_LIMIT");
    if (raw == nullptr) return limits;
    int d = 0;
    long long n = 0;
    char trailing = 0;
    if (std::sscanf(raw, "%d,%lld%c", &d, &n, &trailing) != 2 || d < 1 || n < 0)
        throw std::invalid_argument("invalid LATCOUNT_BRUTE_LIMIT (expected \"d,n\"): " +
                                    std::string(raw));
    limits.max_dimension = d;
    limits.max_steps = n;
    return limits;
}

std::string latex_polynomial(const CoeffVector& coeffs) {
    std::ostringstream out;
    for (size_t i = 0; i < coeffs.entries.size(); ++i) {
        const latcount::Rational& c = coeffs.entries[i];
        const int power = coeffs.degree - static_cast<int>(i);
        if (i > 0) out << " + ";
        const bool unit = c == latcount::Rational(1);
        if (c.is_integer()) {
            if (!unit || power == 0) out << latcount::to_decimal(c.num());
        } else {
            out << "\\frac{" << latcount::to_decimal(c.num()) << "}{"
                << latcount::to_decimal(c.den()) << "}";
        }
        if (power == 1)
            out << "n";
        else if (power > 1)
            out << "n^{" << power << "}";
    }
    return out.str();
}

int cmd_count(int d, long long n, const std::string& engine, const std::string& format,
              const BruteLimits& limits) {
    const WalkSpec spec(d, n);
    std::optional<CoeffVector> coeffs;
    if (engine == "poly" || engine == "all") coeffs = latcount::coeff_vector(d);

    if (engine != "all") {
        const BigInt count = run_engine(engine, spec, limits, coeffs ? &*coeffs : nullptr);
        if (format == "json") {
            ordered_json out{{"d", d}, {"n", n}, {"engine", engine}, {"count", to_decimal(count)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << to_decimal(count) << "\n";
        }
        return 0;
    }

    std::vector<std::pair<std::string, std::string>> counts;
    for (const std::string& name : kEngineNames) {
        if (name == "brute" && n > 0 && (d > limits.max_dimension || n > limits.max_steps))
            continue;  // in all-engine mode the guard just drops the enumerator
        counts.emplace_back(name, to_decimal(run_engine(name, spec, limits, &*coeffs)));
    }
    if (format == "json") {
        ordered_json engines = ordered_json::object();
        for (const auto& [name, value] : counts) engines[name] = value;
        ordered_json out{{"d", d}, {"n", n}, {"counts", engines}};
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& [name, value] : counts) std::cout << name << " " << value << "\n";
    }
    return 0;
}

int cmd_table(int d, long long n_max, const std::string& format) {
    const latcount::SeriesTable table = latcount::series_counts(d, n_max);
    if (format == "json") {
        ordered_json counts = ordered_json::array();
        for (const BigInt& c : table.counts) counts.push_back(to_decimal(c));
        ordered_json out{{"d", d}, {"n_max", n_max}, {"counts", counts}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n,count\n";
        for (size_t i = 0; i < table.counts.size(); ++i)
            std::cout << i << "," << to_decimal(table.counts[i]) << "\n";
    }
    return 0;
}

int cmd_poly(int d, const std::string& format) {
    const CoeffVector coeffs = latcount::coeff_vector(d);
    if (format == "latex") {
        std::cout << latex_polynomial(coeffs) << "\n";
    } else {
        ordered_json out = ordered_json::array();
        for (const latcount::Rational& c : coeffs.entries) out.push_back(c.to_string());
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int cmd_verify(int d_max, long long n_max, const std::string& format, const BruteLimits& limits) {
    const latcount::VerifyReport report = latcount::run_verification(d_max, n_max, limits);
    if (format == "json") {
        ordered_json grid = ordered_json::array();
        for (const latcount::VerifyCell& cell : report.grid) {
            ordered_json counts = ordered_json::object();
            for (const auto& [name, value] : cell.counts) counts[name] = value;
            grid.push_back(ordered_json{{"d", cell.dimension}, {"n", cell.steps}, {"counts", counts}});
        }
        ordered_json checks = ordered_json::array();
        for (const latcount::CoeffCheck& check : report.coefficient_checks)
            checks.push_back(ordered_json{{"d", check.degree},
                                          {"j", check.offset},
                                          {"matrix", check.matrix_route},
                                          {"closed_form", check.closed_form},
                                          {"symmetric_sums", check.symmetric_sums}});
        ordered_json out{{"d_max", report.d_max},     {"n_max", report.n_max},
                         {"grid", grid},              {"coefficient_checks", checks},
                         {"mismatches", report.mismatches}, {"notes", report.notes}};
        std::cout << out.dump() << "\n";
    } else {
        for (const latcount::VerifyCell& cell : report.grid) {
            std::cout << "count d=" << cell.dimension << " n=" << cell.steps;
            bool agree = true;
            for (const auto& [name, value] : cell.counts)
                agree = agree && value == cell.counts.front().second;
            if (agree) {
                std::cout << " value=" << cell.counts.front().second
                          << " engines=" << cell.counts.size() << "\n";
            } else {
                std::cout << " MISMATCH";
                for (const auto& [name, value] : cell.counts)
                    std::cout << " " << name << "=" << value;
                std::cout << "\n";
            }
        }
        for (const latcount::CoeffCheck& check : report.coefficient_checks) {
            std::cout << "coeff d=" << check.degree << " j=" << check.offset;
            if (check.consistent())
                std::cout << " value=" << check.matrix_route << "\n";
            else
                std::cout << " MISMATCH matrix=" << check.matrix_route
                          << " closed_form=" << check.closed_form
                          << " symmetric_sums=" << check.symmetric_sums << "\n";
        }
        for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
        std::cout << (report.ok() ? "ok" : "MISMATCH") << ": " << report.grid.size()
                  << " count cells, " << report.coefficient_checks.size()
                  << " coefficient checks, " << report.mismatches.size() << " mismatches\n";
    }
    return latcount::verify_exit_code(report);
}

int cmd_bench(int d, long long n, const std::string& engines_csv, int reps,
              const std::string& format, const BruteLimits& limits) {
    if (reps < 1) throw std::invalid_argument("bench: reps must be >= 1");
    std::vector<std::string> engines;
    std::stringstream stream(engines_csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty() || !is_engine_name(token))
            throw std::invalid_argument("bench: unknown engine: " + token);
        engines.push_back(token);
    }
    if (engines.empty()) throw std::invalid_argument("bench: no engines given");
    std::sort(engines.begin(), engines.end());
    engines.erase(std::unique(engines.begin(), engines.end()), engines.end());

    const WalkSpec spec(d, n);
    std::optional<CoeffVector> coeffs;
    if (std::find(engines.begin(), engines.end(), "poly") != engines.end())
        coeffs = latcount::coeff_vector(d);

    struct Record {
        std::string engine;
        long long min_ns = 0;
        long long median_ns = 0;
        std::string digest;
    };
    std::vector<Record> records;
    for (const std::string& name : engines) {
        std::vector<long long> times;
        BigInt result;
        for (int rep = 0; rep < reps; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            result = run_engine(name, spec, limits, coeffs ? &*coeffs : nullptr);
            const auto stop = std::chrono::steady_clock::now();
            times.push_back(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        records.push_back({name, times.front(), times[times.size() / 2], to_decimal(result)});
    }

    bool digests_agree = true;
    for (const Record& record : records)
        digests_agree = digests_agree && record.digest == records.front().digest;

    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const Record& record : records)
            out.push_back(ordered_json{{"engine", record.engine},
                                       {"d", d},
                                       {"n", n},
                                       {"reps", reps},
                                       {"min_ns", record.min_ns},
                                       {"median_ns", record.median_ns},
                                       {"digest", record.digest}});
        std::cout << out.dump() << "\n";
    } else {
        for (const Record& record : records)
            std::cout << record.engine << " d=" << d << " n=" << n << " reps=" << reps
                      << " min_ns=" << record.min_ns << " median_ns=" << record.median_ns
                      << " digest=" << record.digest << "\n";
    }
    if (!digests_agree) {
        std::cerr << "bench: result digests disagree\n";
        return 2;
    }
    return 0;
}

int cmd_bernoulli(int k_max, const std::string& format) {
    if (k_max < 0) throw std::invalid_argument("bernoulli: k-max must be >= 0");
    const latcount::BernoulliTable table(k_max);
    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (int k = 0; k <= k_max; ++k) out.push_back(table.at(k).to_string());
        std::cout << out.dump() << "\n";
    } else {
        for (int k = 0; k <= k_max; ++k) std::cout << k << " " << table.at(k).to_string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact endpoint counts of n-step nearest-neighbor walks on the integer lattice"};
    app.require_subcommand(1);

    int d = 1;
    long long n = 0;
    long long n_max = 0;
    int d_max = 6;
    long long verify_n_max = 20;
    int reps = 3;
    int k_max = 0;
    std::string engine = "closed";
    std::string engines_csv;
    std::string format;

    CLI::App* count = app.add_subcommand("count", "Count endpoints for one (d, n) pair");
    count->add_option("--d", d, "dimension (>= 1)")->required();
    count->add_option("--n", n, "step count (>= 0)")->required();
    count->add_option("--engine", engine,
                      "brute|parity|recurrence|closed|series|poly|all (default closed)");
    count->add_option("--format", format, "json|plain (default plain)");

    CLI::App* table = app.add_subcommand("table", "Counts for n = 0..n-max at fixed d");
    table->add_option("--d", d, "dimension (>= 1)")->required();
    table->add_option("--n-max", n_max, "largest step count")->required();
    table->add_option("--format", format, "csv|json (default csv)");

    CLI::App* poly = app.add_subcommand("poly", "Coefficients of the counting polynomial");
    poly->add_option("--d", d, "dimension (>= 1)")->required();
    poly->add_option("--format", format, "json|latex (default json)");

    CLI::App* verify = app.add_subcommand("verify", "Cross-check engines and coefficient routes");
    verify->add_option("--d-max", d_max, "largest dimension (default 6)");
    verify->add_option("--n-max", verify_n_max, "largest step count (default 20)");
    verify->add_option("--format", format, "json|plain (default plain)");

    CLI::App* bench = app.add_subcommand("bench", "Time engines on one (d, n) pair");
    bench->add_option("--d", d, "dimension (>= 1)")->required();
    bench->add_option("--n", n, "step count (>= 0)")->required();
    bench->add_option("--engines", engines_csv, "comma-separated engine list")->required();
    bench->add_option("--reps", reps, "repetitions per engine (default 3)");
    bench->add_option("--format", format, "json|plain (default plain)");

    CLI::App* bernoulli = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_k");
    bernoulli->add_option("--k-max", k_max, "largest index (>= 0)")->required();
    bernoulli->add_option("--format", format, "json|plain (default json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const BruteLimits limits = brute_limits_from_env();
        if (*count) {
            if (format.empty()) format = "plain";
            if (format != "json" && format != "plain")
                throw std::invalid_argument("count: format must be json or plain");
            if (engine != "all" && !is_engine_name(engine))
                throw std::invalid_argument("count: unknown engine: " + engine);
            return cmd_count(d, n, engine, format, limits);
        }
        if (*table) {
            if (format.empty()) format = "csv";
            if (format != "csv" && format != "json")
                throw std::invalid_argument("table: format must be csv or json");
            return cmd_table(d, n_max, format);
        }
        if (*poly) {
            if (format.empty()) format = "json";
            if (format != "json" && format != "latex")
                throw std::invalid_argument("poly: format must be json or latex");
            return cmd_poly(d, format);
        }
        if (*verify) {
            if (format.empty()) format = "plain";
            if (format != "json" && format != "plain")
                throw std::invalid_argument("verify: format must be json or plain");
            return cmd_verify(d_max, verify_n_max, format, limits);
        }
        if (*bench) {
            if (format.empty()) format = "plain";
            if (format != "json" && format != "plain")
                throw std::invalid_argument("bench: format must be json or plain");
            return cmd_bench(d, n, engines_csv, reps, format, limits);
        }
        if (*bernoulli) {
            if (format.empty()) format = "json";
            if (format != "json" && format != "plain")
                throw std::invalid_argument("bernoulli: format must be json or plain");
            return cmd_bernoulli(k_max, format);
        }
    } catch (const std::exception& e) {
        std::cerr << "latcount: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
