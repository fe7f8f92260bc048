#include "qmet/metric_checks.hpp"

#include <cmath>
#include <stdexcept>

#include "qmet/absolute_value.hpp"

namespace qmet {

namespace {

std::vector<std::vector<Magnitude>> powered_entries(const DistMatrix& D, const Rational& q) {
    const size_t n = D.size();
    std::vector<std::vector<Magnitude>> P(n, std::vector<Magnitude>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) P[i][j] = D.at(i, j).pow(q);
    return P;
}

}  // namespace

std::vector<TripleViolation> verify_qmetric(const DistMatrix& D, const Rational& q) {
    if (q.sign() <= 0) throw std::invalid_argument("verify_qmetric: q must be positive");
    auto P = powered_entries(D, q);
    const size_t n = D.size();
    std::vector<TripleViolation> out;
    // d is symmetric, so (x,y,z) and (z,y,x) carry the same inequality;
    // report each configuration once with x before z in label order
    for (size_t i = 0; i < n; ++i)
        for (size_t k = i + 1; k < n; ++k)
            for (size_t j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                if (Magnitude::compare(P[i][k], P[i][j] + P[j][k]).order == std::strong_ordering::greater)
                    out.push_back({D.labels()[i], D.labels()[j], D.labels()[k]});
            }
    return out;
}

std::vector<TripleViolation> verify_ultrametric(const DistMatrix& D) {
    const size_t n = D.size();
    std::vector<TripleViolation> out;
    for (size_t i = 0; i < n; ++i)
        for (size_t k = i + 1; k < n; ++k)
            for (size_t j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                const Magnitude& m = Magnitude::max(D.at(i, j), D.at(j, k));
                if (Magnitude::compare(D.at(i, k), m).order == std::strong_ordering::greater)
                    out.push_back({D.labels()[i], D.labels()[j], D.labels()[k]});
            }
    return out;
}

MaxExponent max_metric_exponent(const DistMatrix& D) {
    constexpr double kQLo = 1e-3, kQHi = 64.0;
    const size_t n = D.size();
    bool constrained = false;
    bool below = false;
    double qstar = kQHi + 1;  // above-range sentinel until a finite root appears
    bool any_above = false;

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t k = j + 1; k < n; ++k) {
                // sides of the triple, c the largest
                const Magnitude* s[3] = {&D.at(i, j), &D.at(j, k), &D.at(i, k)};
                int cmax = 0;
                for (int t = 1; t < 3; ++t)
                    if (*s[t] > *s[cmax]) cmax = t;
                const Magnitude& c = *s[cmax];
                const Magnitude& a = *s[(cmax + 1) % 3];
                const Magnitude& b = *s[(cmax + 2) % 3];
                if (!(c > Magnitude::max(a, b))) continue;  // isoceles-topped triples never constrain
                constrained = true;
                const double la = magnitude_log(a) - magnitude_log(c);
                const double lb = magnitude_log(b) - magnitude_log(c);
                auto g = [&](double q) { return std::exp(q * la) + std::exp(q * lb) - 1.0; };
                if (g(kQLo) < 0) {
                    below = true;
                    continue;
                }
                if (g(kQHi) > 0) {
                    any_above = true;
                    continue;  // this triple only binds beyond the bracket
                }
                double lo = kQLo, hi = kQHi;
                while (hi - lo > 1e-10 * std::max(1.0, lo)) {
                    double mid = 0.5 * (lo + hi);
                    (g(mid) >= 0 ? lo : hi) = mid;
                }
                qstar = std::min(qstar, 0.5 * (lo + hi));
            }
        }
    }
    if (!constrained) return {MaxExponent::Kind::Ultrametric, 0};
    if (below) return {MaxExponent::Kind::BelowRange, 0};
    if (qstar > kQHi) {
        (void)any_above;
        return {MaxExponent::Kind::AboveRange, 0};
    }
    return {MaxExponent::Kind::Finite, qstar};
}

DistMatrix power_transform(const DistMatrix& D, const Rational& a) {
    if (a.sign() <= 0) throw std::invalid_argument("power_transform: exponent must be positive");
    const size_t n = D.size();
    std::vector<std::vector<Magnitude>> d(n, std::vector<Magnitude>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            d[i][j] = (j > i) ? D.at(i, j).pow(a) : d[j][i];
        }
    }
    return DistMatrix(D.labels(), std::move(d));
}

std::vector<std::array<std::string, 3>> isoceles_audit(const DistMatrix& D) {
    const size_t n = D.size();
    std::vector<std::array<std::string, 3>> out;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                const Magnitude* s[3] = {&D.at(i, j), &D.at(j, k), &D.at(i, k)};
                // two largest must agree
                const Magnitude* lo = s[0];
                const Magnitude* m1 = s[1];
                const Magnitude* m2 = s[2];
                auto order2 = [](const Magnitude*& u, const Magnitude*& v) {
                    if (*u > *v) std::swap(u, v);
                };
                order2(lo, m1);
                order2(m1, m2);
                order2(lo, m1);
                if (!(*m1 == *m2)) out.push_back({D.labels()[i], D.labels()[j], D.labels()[k]});
            }
    return out;
}

std::vector<std::string> ball(const DistMatrix& D, const std::string& center, const Magnitude& radius,
                              bool closed) {
    size_t c = D.index_of(center);
    std::vector<std::string> out;
    for (size_t i = 0; i < D.size(); ++i) {
        auto cmp = Magnitude::compare(D.at(c, i), radius).order;
        bool in = closed ? (cmp != std::strong_ordering::greater) : (cmp == std::strong_ordering::less);
        if (in) out.push_back(D.labels()[i]);
    }
    return out;
}

}  // namespace qmet
