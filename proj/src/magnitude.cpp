#include "qmet/magnitude.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qmet {

namespace {

// r = p^k for a prime p and nonzero integer k, if such a form exists.
// Trial division keeps this cheap; magnitudes in this library carry
// small primes (they originate from p-adic absolute values).
std::optional<std::pair<long, long>> detect_prime_power(const Rational& r) {
    if (r.sign() <= 0 || r.is_one()) return std::nullopt;
    bool inverted = false;
    mpz_class n;
    if (r.den() == 1) {
        n = r.num();
    } else if (r.num() == 1) {
        n = r.den();
        inverted = true;
    } else {
        return std::nullopt;
    }
    long p = 0;
    for (long c = 2; c <= 10000 && mpz_class(c * c) <= n; c = (c == 2 ? 3 : c + 2)) {
        if (n % c == 0) {
            p = c;
            break;
        }
    }
    if (p == 0) {
        if (!n.fits_slong_p() || !is_probable_prime(n)) return std::nullopt;
        p = n.get_si();
    }
    long k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    if (n != 1) return std::nullopt;
    return std::make_pair(p, inverted ? -k : k);
}

long to_long_checked(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw std::overflow_error(std::string("magnitude: ") + what + " exponent too large");
    return z.get_si();
}

}  // namespace

Magnitude::Magnitude(const Rational& r) : coeff_(r) {
    if (r.is_negative()) throw std::domain_error("magnitude: negative value");
}

Magnitude Magnitude::prime_power(long p, const Rational& exp) {
    return scaled_prime_power(Rational(1), p, exp);
}

Magnitude Magnitude::scaled_prime_power(const Rational& coeff, long p, const Rational& exp) {
    if (p < 2) throw std::invalid_argument("magnitude: prime must be >= 2");
    if (coeff.is_negative()) throw std::domain_error("magnitude: negative coefficient");
    Magnitude m;
    m.coeff_ = coeff;
    m.prime_ = p;
    m.exp_ = exp;
    m.normalize();
    return m;
}

Magnitude Magnitude::approximate(double value, double rel_tol) {
    if (value < 0) throw std::domain_error("magnitude: negative value");
    Magnitude m;
    m.exact_ = false;
    m.approx_ = value;
    m.tol_ = rel_tol;
    return m;
}

void Magnitude::normalize() {
    if (!exact_) return;
    if (coeff_.is_zero()) {
        prime_ = 0;
        exp_ = Rational();
        return;
    }
    if (prime_ != 0 && (exp_.is_zero() || exp_.is_integer())) {
        coeff_ *= Rational(prime_).pow_int(to_long_checked(exp_.num(), "prime-power"));
        prime_ = 0;
        exp_ = Rational();
    }
}

bool Magnitude::is_zero() const {
    return exact_ ? coeff_.is_zero() : approx_ == 0.0;
}

const Rational& Magnitude::rational() const {
    if (!is_rational()) throw std::logic_error("magnitude: not an exact rational");
    return coeff_;
}

double Magnitude::to_double() const {
    if (!exact_) return approx_;
    if (coeff_.is_zero()) return 0.0;
    double c = coeff_.to_double();
    if (prime_ == 0) return c;
    double pp = std::pow(static_cast<double>(prime_), exp_.to_double());
    double direct = c * pp;
    if (std::isfinite(direct) && direct != 0.0) return direct;
    return std::exp(log_rational(coeff_) + exp_.to_double() * std::log(static_cast<double>(prime_)));
}

Magnitude Magnitude::operator*(const Magnitude& o) const {
    if (is_zero() || o.is_zero()) return Magnitude();
    if (!exact_ || !o.exact_) {
        return approximate(to_double() * o.to_double(), rel_tol() + o.rel_tol() + 1e-15);
    }
    Magnitude r;
    r.coeff_ = coeff_ * o.coeff_;
    if (prime_ == 0 || o.prime_ == 0 || prime_ == o.prime_) {
        r.prime_ = prime_ != 0 ? prime_ : o.prime_;
        r.exp_ = (prime_ == o.prime_) ? exp_ + o.exp_ : (prime_ != 0 ? exp_ : o.exp_);
        r.normalize();
        return r;
    }
    // distinct primes with fractional exponents: no exact closed form here
    return approximate(to_double() * o.to_double(), 1e-14);
}

Magnitude Magnitude::operator+(const Magnitude& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (is_rational() && o.is_rational()) return Magnitude(coeff_ + o.coeff_);
    if (exact_ && o.exact_ && prime_ != 0 && prime_ == o.prime_ && exp_ == o.exp_) {
        return scaled_prime_power(coeff_ + o.coeff_, prime_, exp_);
    }
    double tol = std::max(rel_tol(), o.rel_tol());
    if (exact_ || o.exact_) tol = std::max(tol, kDefaultRelTol);
    return approximate(to_double() + o.to_double(), tol + 1e-15);
}

Magnitude Magnitude::pow(const Rational& e) const {
    if (e.is_zero()) return Magnitude(Rational(1));
    if (is_zero()) {
        if (e.is_negative()) throw std::domain_error("magnitude: negative power of zero");
        return Magnitude();
    }
    if (!exact_) {
        return approximate(std::pow(approx_, e.to_double()),
                           tol_ * std::fabs(e.to_double()) + 1e-15);
    }
    Rational pexp = prime_ != 0 ? exp_ * e : Rational();
    // coefficient part
    if (coeff_.is_one()) {
        return prime_ != 0 ? scaled_prime_power(Rational(1), prime_, pexp) : Magnitude(Rational(1));
    }
    if (e.is_integer()) {
        Rational c = coeff_.pow_int(to_long_checked(e.num(), "power"));
        return prime_ != 0 ? scaled_prime_power(c, prime_, pexp) : Magnitude(c);
    }
    long v = to_long_checked(e.den(), "root");
    long u = to_long_checked(e.num(), "power");
    if (auto root = coeff_.nth_root(static_cast<unsigned long>(v))) {
        Rational c = root->pow_int(u);
        return prime_ != 0 ? scaled_prime_power(c, prime_, pexp) : Magnitude(c);
    }
    if (auto pk = detect_prime_power(coeff_)) {
        auto [q, k] = *pk;
        Rational extra = Rational(k) * e;
        if (prime_ == 0) return scaled_prime_power(Rational(1), q, extra);
        if (prime_ == q) return scaled_prime_power(Rational(1), q, pexp + extra);
    }
    return approximate(std::pow(to_double(), e.to_double()), kDefaultRelTol);
}

MagnitudeOrder Magnitude::compare(const Magnitude& a, const Magnitude& b) {
    if (a.exact_ && b.exact_) {
        if (a.is_zero() || b.is_zero()) {
            if (a.is_zero() && b.is_zero()) return {std::strong_ordering::equal, true};
            return {a.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater, true};
        }
        if (a.is_rational() && b.is_rational()) {
            if (a.coeff_ < b.coeff_) return {std::strong_ordering::less, true};
            if (a.coeff_ > b.coeff_) return {std::strong_ordering::greater, true};
            return {std::strong_ordering::equal, true};
        }
        Rational b1 = a.prime_ != 0 ? Rational(a.prime_) : Rational(1);
        Rational b2 = b.prime_ != 0 ? Rational(b.prime_) : Rational(1);
        return {compare_scaled_powers(a.coeff_, b1, a.exp_, b.coeff_, b2, b.exp_), true};
    }
    double x = a.to_double(), y = b.to_double();
    double tol = (a.rel_tol() + b.rel_tol() + 4e-16) * std::max({1.0, std::fabs(x), std::fabs(y)});
    if (std::fabs(x - y) <= tol) return {std::strong_ordering::equal, false};
    return {x < y ? std::strong_ordering::less : std::strong_ordering::greater, false};
}

const Magnitude& Magnitude::max(const Magnitude& a, const Magnitude& b) {
    return compare(a, b).order == std::strong_ordering::less ? b : a;
}

const Magnitude& Magnitude::min(const Magnitude& a, const Magnitude& b) {
    return compare(a, b).order == std::strong_ordering::greater ? b : a;
}

std::string Magnitude::str() const {
    if (!exact_) {
        std::ostringstream os;
        os.precision(12);
        os << approx_;
        return os.str();
    }
    if (prime_ == 0) return coeff_.str();
    std::ostringstream os;
    if (!coeff_.is_one()) os << coeff_.str() << "*";
    os << prime_ << "^(" << exp_.str() << ")";
    return os.str();
}

std::strong_ordering compare_scaled_powers(const Rational& c1, const Rational& b1, const Rational& e1,
                                           const Rational& c2, const Rational& b2, const Rational& e2) {
    if (c1.is_negative() || c2.is_negative() || b1.sign() <= 0 || b2.sign() <= 0)
        throw std::domain_error("compare_scaled_powers: needs nonnegative coefficients, positive bases");
    if (c1.is_zero() || c2.is_zero()) {
        if (c1.is_zero() && c2.is_zero()) return std::strong_ordering::equal;
        return c1.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    mpz_class m;
    mpz_lcm(m.get_mpz_t(), e1.den().get_mpz_t(), e2.den().get_mpz_t());
    long ml = to_long_checked(m, "lcm");
    Rational lhs = c1.pow_int(ml) * b1.pow_int(to_long_checked(mpz_class(e1.num() * (m / e1.den())), "lhs"));
    Rational rhs = c2.pow_int(ml) * b2.pow_int(to_long_checked(mpz_class(e2.num() * (m / e2.den())), "rhs"));
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace qmet
