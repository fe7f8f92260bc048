#pragma once

#include <compare>
#include <string>

#include "qmet/rational.hpp"

namespace qmet {

/// Result of a magnitude comparison: the ordering plus whether it was
/// decided by exact arithmetic or within a floating tolerance.
struct MagnitudeOrder {
    std::strong_ordering order;
    bool exact;
};

/// Nonnegative magnitude value.  Exact values have the form
/// coeff * p^exp with a nonnegative rational coeff away from a prime-power
/// factor with rational exponent; pure rationals have no prime factor.
/// Values outside that family degrade to a double carrying a stated
/// relative tolerance.
class Magnitude {
public:
    static constexpr double kDefaultRelTol = 1e-12;

    Magnitude() : Magnitude(Rational()) {}
    explicit Magnitude(const Rational& r);
    Magnitude(long n) : Magnitude(Rational(n)) {}

    static Magnitude prime_power(long p, const Rational& exp);
    static Magnitude scaled_prime_power(const Rational& coeff, long p, const Rational& exp);
    static Magnitude approximate(double value, double rel_tol = kDefaultRelTol);

    bool is_exact() const { return exact_; }
    bool is_zero() const;
    bool is_rational() const { return exact_ && prime_ == 0; }

    /// Only valid when is_rational().
    const Rational& rational() const;

    /// Exact-form accessors; prime_factor() == 0 means no prime-power part.
    const Rational& coefficient() const { return coeff_; }
    long prime_factor() const { return prime_; }
    const Rational& prime_exponent() const { return exp_; }

    double to_double() const;
    double rel_tol() const { return exact_ ? 0.0 : tol_; }

    Magnitude operator*(const Magnitude& o) const;
    Magnitude operator+(const Magnitude& o) const;

    /// Raise to a rational power; exponent may be negative only on a
    /// nonzero magnitude.
    Magnitude pow(const Rational& e) const;

    static MagnitudeOrder compare(const Magnitude& a, const Magnitude& b);
    static const Magnitude& max(const Magnitude& a, const Magnitude& b);
    static const Magnitude& min(const Magnitude& a, const Magnitude& b);

    friend bool operator==(const Magnitude& a, const Magnitude& b) {
        return compare(a, b).order == std::strong_ordering::equal;
    }
    friend bool operator<(const Magnitude& a, const Magnitude& b) {
        return compare(a, b).order == std::strong_ordering::less;
    }
    friend bool operator<=(const Magnitude& a, const Magnitude& b) {
        return compare(a, b).order != std::strong_ordering::greater;
    }
    friend bool operator>(const Magnitude& a, const Magnitude& b) { return b < a; }
    friend bool operator>=(const Magnitude& a, const Magnitude& b) { return b <= a; }

    std::string str() const;

private:
    void normalize();

    bool exact_ = true;
    Rational coeff_;     // >= 0
    long prime_ = 0;     // 0: no prime-power factor
    Rational exp_;       // nonzero, non-integer when prime_ != 0
    double approx_ = 0;  // exact_ == false
    double tol_ = 0;
};

/// Exact comparison of c1 * b1^e1 against c2 * b2^e2 for positive rational
/// bases and coefficients; decides by clearing the exponent denominators.
std::strong_ordering compare_scaled_powers(const Rational& c1, const Rational& b1, const Rational& e1,
                                           const Rational& c2, const Rational& b2, const Rational& e2);

}  // namespace qmet
