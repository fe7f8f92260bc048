#include "qmet/absolute_value.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qmet {

AbsoluteValue AbsoluteValue::trivial() {
    return AbsoluteValue(Kind::Trivial, 0, Rational(1));
}

AbsoluteValue AbsoluteValue::real_std() {
    return AbsoluteValue(Kind::RealStd, 0, Rational(1));
}

AbsoluteValue AbsoluteValue::padic(long p) {
    if (p < 2 || !is_probable_prime(mpz_class(p)))
        throw std::invalid_argument("absolute value: p must be prime, got " + std::to_string(p));
    return AbsoluteValue(Kind::Padic, p, Rational(1));
}

AbsoluteValue AbsoluteValue::power(const AbsoluteValue& base, const Rational& exponent) {
    if (exponent.sign() <= 0)
        throw std::invalid_argument("absolute value: power exponent must be positive");
    return AbsoluteValue(base.kind_, base.prime_, base.exponent_ * exponent);
}

std::optional<Rational> AbsoluteValue::q_exponent() const {
    if (is_ultrametric()) return std::nullopt;
    // |.|^e over the reals satisfies the q-triangle inequality with q = 1/e
    return Rational(1) / exponent_;
}

std::string AbsoluteValue::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Trivial: os << "trivial"; break;
        case Kind::RealStd: os << "real"; break;
        case Kind::Padic: os << "padic(" << prime_ << ")"; break;
    }
    if (!exponent_.is_one()) os << "^" << exponent_.str();
    return os.str();
}

long mpz_valuation(long p, const mpz_class& n) {
    if (n == 0) throw std::domain_error("valuation of zero integer");
    mpz_class m = n;
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        m /= p;
        ++v;
    }
    return v;
}

Valuation padic_valuation(long p, const Rational& x) {
    if (p < 2 || !is_probable_prime(mpz_class(p)))
        throw std::invalid_argument("padic_valuation: p must be prime, got " + std::to_string(p));
    if (x.is_zero()) return {true, 0};
    return {false, mpz_valuation(p, x.num()) - mpz_valuation(p, x.den())};
}

Magnitude abs_eval(const AbsoluteValue& v, const Rational& x) {
    if (x.is_zero()) return Magnitude();
    switch (v.kind()) {
        case AbsoluteValue::Kind::Trivial:
            return Magnitude(Rational(1));
        case AbsoluteValue::Kind::RealStd:
            return Magnitude(x.abs()).pow(v.exponent());
        case AbsoluteValue::Kind::Padic: {
            Valuation val = padic_valuation(v.prime(), x);
            return Magnitude::prime_power(v.prime(), Rational(-val.value) * v.exponent());
        }
    }
    throw std::logic_error("abs_eval: unreachable");
}

std::vector<std::pair<Rational, Rational>> check_q_subadditive(
    const AbsoluteValue& v, const std::vector<std::pair<Rational, Rational>>& samples,
    const Rational& q) {
    if (q.sign() <= 0) throw std::invalid_argument("check_q_subadditive: q must be positive");
    std::vector<std::pair<Rational, Rational>> violations;
    for (const auto& [x, y] : samples) {
        Magnitude lhs = abs_eval(v, x + y).pow(q);
        Magnitude rhs = abs_eval(v, x).pow(q) + abs_eval(v, y).pow(q);
        if (Magnitude::compare(lhs, rhs).order == std::strong_ordering::greater)
            violations.emplace_back(x, y);
    }
    return violations;
}

ArchimedeanVerdict is_archimedean(const AbsoluteValue& v, unsigned long n_max) {
    if (n_max < 2) throw std::invalid_argument("is_archimedean: n_max must be >= 2");
    const Magnitude one(Rational(1));
    for (unsigned long n = 2; n <= n_max; ++n) {
        if (abs_eval(v, Rational(mpz_class(n), mpz_class(1))) > one) return {true, n};
    }
    return {false, n_max};
}

double magnitude_log(const Magnitude& m) {
    if (m.is_zero()) throw std::domain_error("log of zero magnitude");
    if (!m.is_exact()) return std::log(m.to_double());
    if (m.is_rational()) return log_rational(m.rational());
    return log_rational(m.coefficient()) +
           m.prime_exponent().to_double() * std::log(static_cast<double>(m.prime_factor()));
}

namespace {

// Continued-fraction reconstruction of a nearby rational with bounded
// denominator; used to promote float exponent estimates to exact candidates.
std::optional<Rational> rational_reconstruct(double x, long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    bool neg = x < 0;
    double v = std::fabs(x);
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 1e9) break;  // convergent would overflow 64-bit arithmetic
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::fabs(approx - v) <= tol * std::max(1.0, v)) {
            Rational r(p1, q1);
            return neg ? -r : r;
        }
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    return std::nullopt;
}

}  // namespace

EquivalenceExponent equivalence_exponent(const AbsoluteValue& v1, const AbsoluteValue& v2,
                                         const std::vector<Rational>& samples) {
    if (samples.empty()) throw std::invalid_argument("equivalence_exponent: empty sample list");
    for (const auto& s : samples)
        if (s.is_zero()) throw std::invalid_argument("equivalence_exponent: samples must be nonzero");

    std::vector<std::pair<Magnitude, Magnitude>> mags;
    mags.reserve(samples.size());
    for (const auto& s : samples) mags.emplace_back(abs_eval(v1, s), abs_eval(v2, s));

    const Magnitude one(Rational(1));
    size_t pivot = samples.size();
    for (size_t i = 0; i < mags.size(); ++i) {
        if (!(mags[i].first == one)) {
            pivot = i;
            break;
        }
    }
    EquivalenceExponent out;
    out.status = EquivalenceExponent::Status::Absent;
    if (pivot == samples.size()) {
        out.status = EquivalenceExponent::Status::Underdetermined;
        return out;
    }
    if (mags[pivot].second == one) return out;  // |x|_1 != 1 but |x|_2 = 1: no positive a

    double a_float = magnitude_log(mags[pivot].second) / magnitude_log(mags[pivot].first);
    if (!(a_float > 0)) return out;

    auto verify = [&](const Rational& a) {
        for (const auto& [m1, m2] : mags) {
            auto cmp = Magnitude::compare(m1.pow(a), m2);
            if (cmp.order != std::strong_ordering::equal) return std::pair<bool, bool>{false, false};
            if (!cmp.exact) return std::pair<bool, bool>{true, false};
        }
        return std::pair<bool, bool>{true, true};
    };

    if (auto cand = rational_reconstruct(a_float, 1000000, 1e-9); cand && cand->sign() > 0) {
        auto [ok, exact] = verify(*cand);
        if (ok) {
            out.status = EquivalenceExponent::Status::Found;
            out.exact = exact;
            out.value = *cand;
            out.approx = cand->to_double();
            return out;
        }
    }
    // float fallback: verify within tolerance on every sample
    for (const auto& [m1, m2] : mags) {
        double lhs = magnitude_log(m1) * a_float;
        double rhs = magnitude_log(m2);
        if (std::fabs(lhs - rhs) > 1e-9 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)})) return out;
    }
    out.status = EquivalenceExponent::Status::Found;
    out.exact = false;
    out.approx = a_float;
    return out;
}

}  // namespace qmet
