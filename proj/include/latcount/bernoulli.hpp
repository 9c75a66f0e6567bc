#pragma once

#include "latcount/bigint.hpp"
#include "latcount/rational.hpp"

#include <stdexcept>
#include <vector>

namespace latcount {

/// Table of Bernoulli numbers B_0..B_max under the B_1 = -1/2 convention,
/// filled by the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
///
/// A table is a plain value: grow one with extend_to or copy it per task.
/// There is no shared global cache, so readers of distinct tables never
/// observe a partially filled one.
class BernoulliTable {
public:
    explicit BernoulliTable(int max_index = 0) { extend_to(max_index); }

    void extend_to(int max_index) {
        while (static_cast<int>(values_.size()) <= max_index) {
            const int m = static_cast<int>(values_.size());
            Rational acc;
            for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * values_[j];
            values_.push_back(-acc / Rational(m + 1));
        }
    }

    int max_index() const { return static_cast<int>(values_.size()) - 1; }

    const Rational& at(int k) const {
        if (k < 0 || k > max_index()) throw std::out_of_range("BernoulliTable: index beyond table");
        return values_[static_cast<size_t>(k)];
    }

private:
    std::vector<Rational> values_{Rational(1)};
};

/// B_k computed from scratch.
inline Rational bernoulli(int k) {
    if (k < 0) throw std::domain_error("bernoulli: negative index");
    return BernoulliTable(k).at(k);
}

}  // namespace latcount
