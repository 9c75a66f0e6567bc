#pragma once

#include "latcount/bernoulli.hpp"
#include "latcount/bigint.hpp"
#include "latcount/identities.hpp"
#include "latcount/rational.hpp"

#include <stdexcept>
#include <vector>

namespace latcount {

/// Coefficients of the degree-d counting polynomial, ordered
/// c(d,d), c(d,d-1), ..., c(d,0). All entries are positive and the
/// polynomial takes integer values at integer arguments.
struct CoeffVector {
    int degree = 1;
    std::vector<Rational> entries;  // size degree + 1

    Rational eval(const BigInt& n) const {
        Rational acc;
        for (const Rational& c : entries) acc = acc * Rational(n) + c;
        return acc;
    }
};

/// The (d+2) x (d+1) rational matrix mapping the degree-d coefficient
/// vector to the degree-(d+1) one. Row r produces the coefficient of
/// n^{d+1-r} in the image.
struct TransferMatrix {
    int source_degree = 1;
    std::vector<std::vector<Rational>> rows;  // (d+2) rows of (d+1) entries

    CoeffVector apply(const CoeffVector& c) const {
        if (c.degree != source_degree)
            throw std::invalid_argument("TransferMatrix: coefficient vector has wrong degree");
        CoeffVector out;
        out.degree = source_degree + 1;
        out.entries.assign(rows.size(), Rational());
        for (size_t r = 0; r < rows.size(); ++r) {
            Rational acc;
            for (size_t q = 0; q < rows[r].size(); ++q)
                if (!rows[r][q].is_zero()) acc += rows[r][q] * c.entries[q];
            out.entries[r] = acc;
        }
        return out;
    }
};

/// Exact transfer matrix for one dimension step. The structure, with
/// j = r - 1 for rows 1..d:
///   row 0:    2/(d+1) in column 0;
///   row r:    2/(d-j) on the sub-diagonal (column r), plus the Bernoulli
///             band 2*B_{r-q}*C(d+1-q, r-q)/(d+1-q) in columns q = 0..r-2
///             (odd Bernoulli indices >= 3 make those entries zero);
///   row d+1:  1 in the last column.
inline TransferMatrix transfer_matrix(int d) {
    if (d < 1) throw std::domain_error("transfer_matrix: dimension must be >= 1");
    BernoulliTable bernoulli_table(d);
    TransferMatrix m;
    m.source_degree = d;
    m.rows.assign(static_cast<size_t>(d) + 2,
                  std::vector<Rational>(static_cast<size_t>(d) + 1, Rational()));
    m.rows[0][0] = Rational(2, d + 1);
    m.rows[static_cast<size_t>(d) + 1][static_cast<size_t>(d)] = Rational(1);
    for (int r = 1; r <= d; ++r) {
        m.rows[static_cast<size_t>(r)][static_cast<size_t>(r)] = Rational(2, d + 1 - r);
        for (int q = 0; q <= r - 2; ++q)
            m.rows[static_cast<size_t>(r)][static_cast<size_t>(q)] =
                Rational(2) * bernoulli_table.at(r - q) * Rational(binomial(d + 1 - q, r - q)) /
                Rational(d + 1 - q);
    }
    return m;
}

/// The whole chain c_1, c_2, ..., c_{d_max} in one pass; one matrix
/// application per dimension step.
inline std::vector<CoeffVector> coeff_vectors(int d_max) {
    if (d_max < 1) throw std::domain_error("coeff_vectors: dimension must be >= 1");
    std::vector<CoeffVector> chain;
    chain.reserve(static_cast<size_t>(d_max));
    chain.push_back(CoeffVector{1, {Rational(1), Rational(1)}});
    for (int d = 1; d < d_max; ++d) chain.push_back(transfer_matrix(d).apply(chain.back()));
    return chain;
}

inline CoeffVector coeff_vector(int d) { return coeff_vectors(d).back(); }

namespace detail {
inline Rational pow2_rational(long long exponent) {
    return exponent >= 0 ? Rational(pow2(exponent)) : Rational(BigInt(1), pow2(-exponent));
}
}  // namespace detail

/// Closed form for c(d, d-j), available for j = 0..4 only.
/// The j = 3 constant includes the factor 1/6 required for consistency with
/// the matrix route (d = 4 must give 8/3).
inline Rational coeff_closed_form(int d, int j) {
    if (j < 0 || j > 4)
        throw std::domain_error("coeff_closed_form: only the top five coefficients have closed forms");
    if (d < 1 || d < j) throw std::domain_error("coeff_closed_form: requires d >= max(1, j)");
    using detail::pow2_rational;
    switch (j) {
        case 0: return pow2_rational(d - 1) / Rational(factorial(d));
        case 1: return pow2_rational(d - 1) / Rational(factorial(d - 1));
        case 2: return pow2_rational(d - 2) * Rational(d + 4) / Rational(6 * factorial(d - 2));
        case 3: return pow2_rational(d - 2) * Rational(d) / Rational(6 * factorial(d - 3));
        default:
            return pow2_rational(d - 6) * Rational(5LL * d * d + 33LL * d - 32) /
                   Rational(45 * factorial(d - 4));
    }
}

/// c(d, d-j) by expanding the falling-factorial form of the count:
/// (1/d!) * sum_{k=0}^{d-1} C(d-1,k) * (-1)^j * e_j({k-1, ..., k-d}).
inline Rational coeff_via_symmetric_sums(int d, int j) {
    if (d < 1) throw std::domain_error("coeff_via_symmetric_sums: dimension must be >= 1");
    if (j < 0 || j > d - 1)
        throw std::domain_error("coeff_via_symmetric_sums: index must lie in 0..d-1");
    BigInt total = 0;
    for (int k = 0; k < d; ++k) {
        std::vector<BigInt> shifted;
        shifted.reserve(static_cast<size_t>(d));
        for (int i = 1; i <= d; ++i) shifted.emplace_back(k - i);
        total += binomial(d - 1, k) * elementary_symmetric(shifted, j);
    }
    if (j % 2 != 0) total = -total;
    return Rational(total) / Rational(factorial(d));
}

}  // namespace latcount
