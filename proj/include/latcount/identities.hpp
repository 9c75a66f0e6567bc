#pragma once

#include "latcount/bigint.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace latcount {

/// Inclusive integer range {lo, lo+1, ..., hi}; singleton ranges allowed.
struct IntRange {
    long long lo = 0;
    long long hi = 0;

    IntRange(long long lo_, long long hi_) : lo(lo_), hi(hi_) {
        if (lo > hi) throw std::invalid_argument("IntRange: lo > hi");
    }

    long long width() const { return hi - lo + 1; }

    std::vector<BigInt> values() const {
        std::vector<BigInt> out;
        out.reserve(static_cast<size_t>(width()));
        for (long long v = lo; v <= hi; ++v) out.emplace_back(v);
        return out;
    }
};

/// sum_{k=1}^{n} k^power * C(n, k) for power 1 or 2, summed directly. The
/// result is checked against the closed form (n*2^{n-1}, resp.
/// n*(n+1)*2^{n-2}) before returning, so a violation surfaces immediately.
inline BigInt weighted_binom_sum(int n, int power) {
    if (n < 1) throw std::invalid_argument("weighted_binom_sum: n must be >= 1");
    if (power != 1 && power != 2) throw std::invalid_argument("weighted_binom_sum: power must be 1 or 2");
    BigInt direct = 0;
    for (int k = 1; k <= n; ++k) {
        BigInt weight = k;
        if (power == 2) weight *= k;
        direct += weight * binomial(n, k);
    }
    // closed forms scaled to stay integral at n = 1
    const BigInt closed = power == 1 ? (BigInt(n) << n) / 2 : ((BigInt(n) * (n + 1)) << n) / 4;
    if (direct != closed) throw std::logic_error("weighted_binom_sum: identity violated");
    return direct;
}

/// sum of (i + j) over 1 <= i < j <= n; checked against n(n+1)(n-1)/2.
inline BigInt pair_sum(int n) {
    if (n < 2) throw std::invalid_argument("pair_sum: n must be >= 2");
    BigInt direct = 0;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) direct += i + j;
    const BigInt closed = BigInt(n) * (n + 1) * (n - 1) / 2;
    if (direct != closed) throw std::logic_error("pair_sum: identity violated");
    return direct;
}

/// sum of i*j over 1 <= i < j <= n; checked against n(n+1)(3n+2)(n-1)/24.
inline BigInt pair_product_sum(int n) {
    if (n < 2) throw std::invalid_argument("pair_product_sum: n must be >= 2");
    BigInt direct = 0;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) direct += BigInt(i) * j;
    const BigInt closed = BigInt(n) * (n + 1) * (3LL * n + 2) * (n - 1) / 24;
    if (direct != closed) throw std::logic_error("pair_product_sum: identity violated");
    return direct;
}

/// Elementary symmetric sum e_j: the sum of all j-fold products of distinct
/// elements. One pass, e_t += v * e_{t-1} from high t down.
inline BigInt elementary_symmetric(const std::vector<BigInt>& values, int j) {
    if (j < 0 || static_cast<size_t>(j) > values.size())
        throw std::invalid_argument("elementary_symmetric: order out of range");
    std::vector<BigInt> e(static_cast<size_t>(j) + 1, BigInt(0));
    e[0] = 1;
    size_t seen = 0;
    for (const BigInt& v : values) {
        ++seen;
        for (size_t t = std::min(static_cast<size_t>(j), seen); t >= 1; --t) e[t] += v * e[t - 1];
    }
    return e[static_cast<size_t>(j)];
}

/// sum of i_1*...*i_j over lo <= i_1 < ... < i_j <= hi.
inline BigInt range_symmetric_sum(const IntRange& range, int j) {
    if (j < 0 || j > range.width())
        throw std::invalid_argument("range_symmetric_sum: order exceeds range width");
    return elementary_symmetric(range.values(), j);
}

}  // namespace latcount
