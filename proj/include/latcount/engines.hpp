#pragma once

#include "latcount/bigint.hpp"
#include "latcount/coefficients.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcount {

/// One counting problem: endpoints of walks of exactly `steps` axis-unit
/// steps from the origin of the integer lattice of the given dimension.
struct WalkSpec {
    int dimension;
    long long steps;

    WalkSpec(int dimension_, long long steps_) : dimension(dimension_), steps(steps_) {
        if (dimension < 1) throw std::domain_error("WalkSpec: dimension must be >= 1");
        if (steps < 0) throw std::domain_error("WalkSpec: step count must be >= 0");
    }
};

using Position = std::vector<int>;

/// Resource guard for the exhaustive enumerator; endpoint sets grow like
/// n^d, so both knobs are configuration rather than constants.
struct BruteLimits {
    int max_dimension = 4;
    long long max_steps = 12;
};

class brute_limit_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class corrupted_coefficients_error : public std::logic_error {
    using std::logic_error::logic_error;
};

/// Every endpoint reachable in exactly `steps` steps, in lexicographic
/// order, found by iterated frontier expansion. Zero steps cost nothing and
/// bypass the guard; anything else must fit the limits.
inline std::vector<Position> enumerate_endpoints(const WalkSpec& spec, const BruteLimits& limits = {}) {
    if (spec.steps == 0) return {Position(static_cast<size_t>(spec.dimension), 0)};
    if (spec.dimension > limits.max_dimension || spec.steps > limits.max_steps)
        throw brute_limit_error("brute-force guard exceeded (limits: dimension <= " +
                                std::to_string(limits.max_dimension) + ", steps <= " +
                                std::to_string(limits.max_steps) +
                                "); use an analytic engine or raise the limit");
    std::set<Position> frontier{Position(static_cast<size_t>(spec.dimension), 0)};
    for (long long step = 0; step < spec.steps; ++step) {
        std::set<Position> next;
        for (const Position& p : frontier) {
            Position q = p;
            for (int axis = 0; axis < spec.dimension; ++axis) {
                ++q[axis];
                next.insert(q);
                q[axis] -= 2;
                next.insert(q);
                ++q[axis];
            }
        }
        frontier = std::move(next);
    }
    return {frontier.begin(), frontier.end()};
}

inline BigInt count_bruteforce(const WalkSpec& spec, const BruteLimits& limits = {}) {
    return BigInt(enumerate_endpoints(spec, limits).size());
}

/// Counts lattice points with L1 norm <= n and L1 norm = n (mod 2), via the
/// dimension-by-dimension recurrence on sphere sizes
///   N_d(r) = N_{d-1}(r) + 2 * sum_{s < r} N_{d-1}(s),
/// starting from N_0 = (1, 0, 0, ...).
inline BigInt count_parity_ball(const WalkSpec& spec) {
    const long long n = spec.steps;
    std::vector<BigInt> sphere(static_cast<size_t>(n) + 1, BigInt(0));
    sphere[0] = 1;
    for (int dim = 1; dim <= spec.dimension; ++dim) {
        std::vector<BigInt> next(static_cast<size_t>(n) + 1);
        BigInt below = 0;  // sum of the previous dimension's spheres of smaller radius
        for (long long r = 0; r <= n; ++r) {
            next[static_cast<size_t>(r)] = sphere[static_cast<size_t>(r)] + 2 * below;
            below += sphere[static_cast<size_t>(r)];
        }
        sphere = std::move(next);
    }
    BigInt total = 0;
    for (long long r = n % 2; r <= n; r += 2) total += sphere[static_cast<size_t>(r)];
    return total;
}

/// Applies the slicing recurrence |P_n^{d+1}| = 2 * sum_{k<=n} |P_k^d| - |P_n^d|
/// dimension by dimension over a single row of counts, with a running
/// prefix sum (O(d*n) overall).
inline BigInt count_recurrence(const WalkSpec& spec) {
    const long long n = spec.steps;
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    for (long long i = 0; i <= n; ++i) row[static_cast<size_t>(i)] = i + 1;
    for (int dim = 1; dim < spec.dimension; ++dim) {
        BigInt prefix = 0;
        for (long long i = 0; i <= n; ++i) {
            prefix += row[static_cast<size_t>(i)];
            row[static_cast<size_t>(i)] = 2 * prefix - row[static_cast<size_t>(i)];
        }
    }
    return row[static_cast<size_t>(n)];
}

/// sum_{k=0}^{d-1} C(d-1, k) * C(d+n-k, d); out-of-range binomials vanish.
inline BigInt count_closed_form(const WalkSpec& spec) {
    const int d = spec.dimension;
    BigInt total = 0;
    for (int k = 0; k < d; ++k)
        total += binomial(d - 1, k) * binomial(static_cast<long long>(d) + spec.steps - k, d);
    return total;
}

/// Exact counts for one dimension, indexed by step count 0..n_max.
struct SeriesTable {
    int dimension = 1;
    std::vector<BigInt> counts;
};

/// First n_max+1 power-series coefficients of (1+x)^{d-1} / (1-x)^{d+1}: the
/// binomial numerator convolved against the denominator series, whose m-th
/// coefficient C(d+m, d) is built by the multiplicative recurrence
/// (exact division at every step).
inline SeriesTable series_counts(int dimension, long long n_max) {
    if (dimension < 1) throw std::domain_error("series_counts: dimension must be >= 1");
    if (n_max < 0) throw std::domain_error("series_counts: n_max must be >= 0");
    const int d = dimension;

    const long long numerator_terms = std::min<long long>(d - 1, n_max) + 1;
    std::vector<BigInt> numerator(static_cast<size_t>(numerator_terms));
    for (long long l = 0; l < numerator_terms; ++l)
        numerator[static_cast<size_t>(l)] = binomial(d - 1, l);

    std::vector<BigInt> denominator(static_cast<size_t>(n_max) + 1);
    denominator[0] = 1;
    for (long long m = 1; m <= n_max; ++m)
        denominator[static_cast<size_t>(m)] = denominator[static_cast<size_t>(m - 1)] * (d + m) / m;

    SeriesTable table;
    table.dimension = d;
    table.counts.assign(static_cast<size_t>(n_max) + 1, BigInt(0));
    for (long long l = 0; l < numerator_terms; ++l)
        for (long long m = 0; l + m <= n_max; ++m)
            table.counts[static_cast<size_t>(l + m)] +=
                numerator[static_cast<size_t>(l)] * denominator[static_cast<size_t>(m)];
    return table;
}

/// Evaluates the degree-d counting polynomial at the step count. The exact
/// rational value must collapse to an integer; anything else means the
/// supplied coefficients are corrupt.
inline BigInt count_polynomial(const WalkSpec& spec, const CoeffVector& coeffs) {
    if (coeffs.degree != spec.dimension)
        throw std::invalid_argument("count_polynomial: coefficient vector has wrong degree");
    const Rational value = coeffs.eval(BigInt(spec.steps));
    if (!value.is_integer())
        throw corrupted_coefficients_error("count_polynomial: non-integer evaluation");
    return value.num();
}

}  // namespace latcount
