#include "qmet/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qmet/errors.hpp"

namespace qmet {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    // trim
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("rational: empty literal");
    s = s.substr(b, e - b + 1);

    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!is_int(ns) || !is_int(ds) || ds[0] == '-' || ds[0] == '+')
            throw ParseError("rational: bad fraction literal '" + text + "'");
        mpz_class n(ns), d(ds);
        if (d == 0) throw ParseError("rational: zero denominator in '" + text + "'");
        return Rational(n, d);
    }
    size_t dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
        if (ip.empty() && fp.empty())
            throw ParseError("rational: bad decimal literal '" + text + "'");
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("rational: bad decimal literal '" + text + "'");
        mpz_class n(ip.empty() ? std::string("0") : ip);
        mpz_class d(1);
        for (char c : fp) {
            n = n * 10 + (c - '0');
            d *= 10;
        }
        if (neg) n = -n;
        return Rational(n, d);
    }
    if (!is_int(s)) throw ParseError("rational: bad literal '" + text + "'");
    return Rational(mpz_class(s), mpz_class(1));
}

Rational Rational::abs() const {
    return is_negative() ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("rational: reciprocal of zero");
    return Rational(den(), num());
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("rational: negative power of zero");
        return Rational();
    }
    Rational base = e < 0 ? reciprocal() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rational(n, d);
}

std::optional<Rational> Rational::nth_root(unsigned long n) const {
    if (n == 0) throw std::invalid_argument("rational: 0th root");
    if (is_negative()) throw std::domain_error("rational: root of negative value");
    if (n == 1) return *this;
    mpz_class rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num().get_mpz_t(), n);
    if (!exact_n) return std::nullopt;
    int exact_d = mpz_root(rd.get_mpz_t(), den().get_mpz_t(), n);
    if (!exact_d) return std::nullopt;
    return Rational(rn, rd);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

double log_mpz(const mpz_class& z) {
    // mantissa in [0.5, 1), z = m * 2^e
    long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

double log_rational(const Rational& r) {
    if (r.sign() <= 0) throw std::domain_error("log of non-positive rational");
    return log_mpz(r.num()) - log_mpz(r.den());
}

long ceil_log(const Rational& x, const Rational& base) {
    if (x.sign() <= 0) throw std::domain_error("ceil_log: non-positive argument");
    if (base <= Rational(1)) throw std::domain_error("ceil_log: base must exceed 1");
    // start near the answer to keep the exact adjustment loops short
    double guess = log_rational(x) / log_rational(base);
    long k = static_cast<long>(std::ceil(guess - 1e-9));
    Rational v = base.pow_int(k);
    while (v < x) {
        v *= base;
        ++k;
    }
    while (k > std::numeric_limits<long>::min() && base.pow_int(k - 1) >= x) {
        --k;
        v = base.pow_int(k);
    }
    return k;
}

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

}  // namespace qmet
