#pragma once

#include "latcount/bernoulli.hpp"
#include "latcount/bigint.hpp"
#include "latcount/rational.hpp"

#include <stdexcept>
#include <vector>

namespace latcount {

/// Closed-form polynomial for sum_{k=0}^{n} k^power, coefficients ordered
/// from n^{power+1} down to the constant term (which is always zero).
struct FaulhaberPoly {
    int power = 1;
    std::vector<Rational> coeffs;  // size power + 2

    Rational eval(const BigInt& n) const {
        Rational acc;
        for (const Rational& c : coeffs) acc = acc * Rational(n) + c;
        return acc;
    }

    /// Denominators cancel at every integer argument; a non-integer value
    /// means the coefficients are corrupt.
    BigInt eval_integer(const BigInt& n) const {
        const Rational value = eval(n);
        if (!value.is_integer())
            throw std::logic_error("FaulhaberPoly: non-integer value at integer argument");
        return value.num();
    }
};

/// Power-sum polynomial: n^{d+1}/(d+1) + n^d/2 + Bernoulli-weighted lower
/// terms B_k * C(d+1, k) / (d+1) on n^{d-k+1} for k = 2..d.
inline FaulhaberPoly faulhaber_poly(int power) {
    if (power < 1) throw std::domain_error("faulhaber_poly: power must be >= 1");
    const int d = power;
    BernoulliTable bernoulli_table(d);
    FaulhaberPoly poly;
    poly.power = d;
    poly.coeffs.assign(static_cast<size_t>(d) + 2, Rational());
    poly.coeffs[0] = Rational(1, d + 1);
    poly.coeffs[1] = Rational(1, 2);
    for (int k = 2; k <= d; ++k)  // the n^{d-k+1} coefficient sits at index k
        poly.coeffs[static_cast<size_t>(k)] =
            Rational(binomial(d + 1, k)) * bernoulli_table.at(k) / Rational(d + 1);
    return poly;
}

/// sum_{k=0}^{n} k^power. The power = 0 sum counts the k = 0 term, so it is
/// n + 1 (in particular power_sum(0, 0) = 1).
inline BigInt power_sum(const BigInt& n, int power) {
    if (n < 0) throw std::domain_error("power_sum: negative n");
    if (power < 0) throw std::domain_error("power_sum: negative power");
    if (power == 0) return n + 1;
    return faulhaber_poly(power).eval_integer(n);
}

}  // namespace latcount
