#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qmet {

/// Arbitrary-precision signed rational in canonical form:
/// denominator > 0 and gcd(|num|, den) = 1.  Equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q);

    /// Accepts "a", "a/b", and decimal literals like "-1.25" (parsed exactly).
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Rational reciprocal() const;

    /// Integer power; negative exponents require a nonzero value.
    Rational pow_int(long e) const;

    /// Exact n-th root when both numerator and denominator are perfect
    /// n-th powers; nullopt otherwise.  Requires a nonnegative value.
    std::optional<Rational> nth_root(unsigned long n) const;

    double to_double() const { return v_.get_d(); }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

/// log of a positive rational, stable for values far outside double range.
double log_rational(const Rational& r);

/// floor(log_base(x)) companion: smallest integer k with base^k >= x,
/// for x > 0 and base > 1.  Exact integer search.
long ceil_log(const Rational& x, const Rational& base);

mpz_class pow_mpz(const mpz_class& base, unsigned long e);

bool is_probable_prime(const mpz_class& n);

}  // namespace qmet
