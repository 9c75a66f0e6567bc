#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace latcount {

/// Unbounded signed integer. Every count and integer sum in the library is
/// one of these; arithmetic is exact.
using BigInt = boost::multiprecision::cpp_int;

/// Decimal string is the canonical external representation (JSON and CSV
/// carry counts as decimal strings, never as native numbers).
inline std::string to_decimal(const BigInt& value) { return value.str(); }

inline BigInt bigint_from_decimal(std::string_view text) {
    return BigInt(std::string(text));
}

inline BigInt pow2(long long exponent) {
    if (exponent < 0) throw std::domain_error("pow2: negative exponent");
    return BigInt(1) << exponent;
}

inline BigInt factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

/// C(n, k); zero when k lies outside 0..n.
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: result holds C(n, i+1) after this step
    }
    return result;
}

}  // namespace latcount
