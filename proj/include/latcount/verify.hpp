#pragma once

#include "latcount/coefficients.hpp"
#include "latcount/engines.hpp"

#include <string>
#include <utility>
#include <vector>

namespace latcount {

/// One grid cell: every engine's count for a (dimension, steps) pair, as
/// decimal strings, ordered by engine name.
struct VerifyCell {
    int dimension = 1;
    long long steps = 0;
    std::vector<std::pair<std::string, std::string>> counts;
};

/// One coefficient reconciliation: the three routes to c(d, d-j).
struct CoeffCheck {
    int degree = 1;
    int offset = 0;
    std::string matrix_route;
    std::string closed_form;
    std::string symmetric_sums;

    bool consistent() const {
        return matrix_route == closed_form && matrix_route == symmetric_sums;
    }
};

/// Cross-engine and cross-route comparison results. `mismatches` is empty
/// exactly when every cell's engines agree and every coefficient triple
/// agrees; `notes` carries documented discrepancies that are expected
/// output, not failures.
struct VerifyReport {
    int d_max = 1;
    long long n_max = 0;
    std::vector<VerifyCell> grid;
    std::vector<CoeffCheck> coefficient_checks;
    std::vector<std::string> mismatches;
    std::vector<std::string> notes;

    bool ok() const { return mismatches.empty(); }
};

/// 0 when the report is clean, 2 on any mismatch (usage errors are the
/// caller's exit code 1).
inline int verify_exit_code(const VerifyReport& report) { return report.ok() ? 0 : 2; }

inline std::string published_c3_note() {
    return "c(d,d-3): the published closed form 2^(d-2)*d/(d-3)! disagrees with the matrix and "
           "symmetric-sum routes (d=4: 16 vs 8/3); the implemented form 2^(d-2)*d/(6*(d-3)!) "
           "matches both and is used here";
}

/// Runs the full grid: every analytic engine on every cell (brute force only
/// where the guard allows), plus the three-route coefficient reconciliation
/// for j = 0..min(4, d-1). Deterministic order: by dimension, then steps,
/// then engine name.
inline VerifyReport run_verification(int d_max, long long n_max, const BruteLimits& limits = {}) {
    if (d_max < 1) throw std::domain_error("run_verification: d_max must be >= 1");
    if (n_max < 0) throw std::domain_error("run_verification: n_max must be >= 0");

    VerifyReport report;
    report.d_max = d_max;
    report.n_max = n_max;

    const std::vector<CoeffVector> chain = coeff_vectors(d_max);

    for (int d = 1; d <= d_max; ++d) {
        const SeriesTable series = series_counts(d, n_max);
        const CoeffVector& coeffs = chain[static_cast<size_t>(d) - 1];
        for (long long n = 0; n <= n_max; ++n) {
            const WalkSpec spec(d, n);
            VerifyCell cell;
            cell.dimension = d;
            cell.steps = n;
            if (n == 0 || (d <= limits.max_dimension && n <= limits.max_steps))
                cell.counts.emplace_back("brute", to_decimal(count_bruteforce(spec, limits)));
            cell.counts.emplace_back("closed", to_decimal(count_closed_form(spec)));
            cell.counts.emplace_back("parity", to_decimal(count_parity_ball(spec)));
            cell.counts.emplace_back("poly", to_decimal(count_polynomial(spec, coeffs)));
            cell.counts.emplace_back("recurrence", to_decimal(count_recurrence(spec)));
            cell.counts.emplace_back("series", to_decimal(series.counts[static_cast<size_t>(n)]));

            bool agree = true;
            for (const auto& [name, value] : cell.counts)
                agree = agree && value == cell.counts.front().second;
            if (!agree)
                report.mismatches.push_back("count d=" + std::to_string(d) +
                                            " n=" + std::to_string(n));
            report.grid.push_back(std::move(cell));
        }
    }

    bool offset3_checked = false;
    for (int d = 1; d <= d_max; ++d) {
        const CoeffVector& coeffs = chain[static_cast<size_t>(d) - 1];
        for (int j = 0; j <= std::min(4, d - 1); ++j) {
            CoeffCheck check;
            check.degree = d;
            check.offset = j;
            check.matrix_route = coeffs.entries[static_cast<size_t>(j)].to_string();
            check.closed_form = coeff_closed_form(d, j).to_string();
            check.symmetric_sums = coeff_via_symmetric_sums(d, j).to_string();
            if (!check.consistent())
                report.mismatches.push_back("coeff d=" + std::to_string(d) +
                                            " j=" + std::to_string(j));
            offset3_checked = offset3_checked || j == 3;
            report.coefficient_checks.push_back(std::move(check));
        }
    }
    if (offset3_checked) report.notes.push_back(published_c3_note());

    return report;
}

}  // namespace latcount
