#pragma once

// Test-only reference implementations, kept independent of the library
// code paths they check.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "qmet/dist_matrix.hpp"
#include "qmet/rational.hpp"

namespace qmet::oracle {

// valuation by literal trial division on numerator and denominator
inline long valuation_by_division(long p, long num, long den) {
    long v = 0;
    for (long n = num < 0 ? -num : num; n % p == 0; n /= p) ++v;
    for (long d = den < 0 ? -den : den; d % p == 0; d /= p) --v;
    return v;
}

// minimax cost from x to y as the literal minimum over all simple paths of
// the maximal step; exponential enumeration, fine for n <= 7
inline Magnitude brute_minimax(const DistMatrix& D, size_t x, size_t y) {
    const size_t n = D.size();
    std::optional<Magnitude> best;
    std::vector<size_t> path{x};
    std::vector<bool> used(n, false);
    used[x] = true;
    auto consider = [&](auto&& self, size_t cur, const Magnitude& worst) -> void {
        if (cur == y) {
            if (!best || worst < *best) best = worst;
            return;
        }
        for (size_t next = 0; next < n; ++next) {
            if (used[next]) continue;
            used[next] = true;
            self(self, next, Magnitude::max(worst, D.at(cur, next)));
            used[next] = false;
        }
    };
    consider(consider, x, Magnitude());
    return *best;
}

// uniform random rational with numerator in [-bound, bound] and denominator
// in [1, bound]
inline Rational random_rational(std::mt19937_64& rng, long bound, bool nonnegative = false) {
    std::uniform_int_distribution<long> num(nonnegative ? 0 : -bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng), den(rng));
}

inline Rational random_positive_rational(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(1, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng), den(rng));
}

// random exact symmetric positive matrix
inline DistMatrix random_matrix(std::mt19937_64& rng, size_t n, long bound = 20) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::vector<Magnitude>> d(n, std::vector<Magnitude>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            d[i][j] = Magnitude(random_positive_rational(rng, bound));
            d[j][i] = d[i][j];
        }
    return DistMatrix(std::move(labels), std::move(d));
}

}  // namespace qmet::oracle
