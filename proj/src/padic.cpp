#include "qmet/padic.hpp"

#include <sstream>
#include <stdexcept>

namespace qmet {

namespace {

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

PadicApprox::PadicApprox(long p, unsigned precision, const mpz_class& residue) : p_(p), precision_(precision) {
    if (p < 2 || !is_probable_prime(mpz_class(p)))
        throw std::invalid_argument("padic: p must be prime, got " + std::to_string(p));
    if (precision == 0) throw std::invalid_argument("padic: precision must be positive");
    modulus_ = pow_mpz(mpz_class(p), precision);
    residue_ = mod_pos(residue, modulus_);
}

PadicApprox PadicApprox::from_rational(const Rational& w, long p, unsigned precision) {
    PadicApprox out(p, precision, 0);
    if (w.is_zero()) return out;
    if (mpz_divisible_ui_p(w.den().get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("padic: |w|_p > 1, b is divisible by p in w = a/b");
    mpz_class binv;
    if (!mpz_invert(binv.get_mpz_t(), w.den().get_mpz_t(), out.modulus_.get_mpz_t()))
        throw std::domain_error("padic: denominator not invertible mod p^j");
    out.residue_ = mod_pos(w.num() * binv, out.modulus_);
    return out;
}

void PadicApprox::check_compatible(const PadicApprox& o) const {
    if (p_ != o.p_ || precision_ != o.precision_)
        throw std::invalid_argument("padic: mismatched prime or precision");
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
    check_compatible(o);
    return PadicApprox(p_, precision_, residue_ + o.residue_);
}

PadicApprox PadicApprox::operator-(const PadicApprox& o) const {
    check_compatible(o);
    return PadicApprox(p_, precision_, residue_ - o.residue_);
}

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
    check_compatible(o);
    return PadicApprox(p_, precision_, residue_ * o.residue_);
}

PadicApprox PadicApprox::operator-() const {
    return PadicApprox(p_, precision_, -residue_);
}

PadicApprox PadicApprox::invert() const {
    if (mpz_divisible_ui_p(residue_.get_mpz_t(), static_cast<unsigned long>(p_)))
        throw std::domain_error("padic: residue divisible by p is not a unit at this precision");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
    return PadicApprox(p_, precision_, inv);
}

std::optional<unsigned> PadicApprox::valuation() const {
    if (residue_ == 0) return std::nullopt;
    mpz_class m = residue_;
    unsigned v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p_))) {
        m /= p_;
        ++v;
    }
    return v;
}

PadicApprox::Abs PadicApprox::abs() const {
    auto v = valuation();
    if (!v) return {Magnitude::prime_power(p_, Rational(-static_cast<long>(precision_))), false};
    return {Magnitude::prime_power(p_, Rational(-static_cast<long>(*v))), true};
}

std::vector<long> PadicApprox::digits() const {
    std::vector<long> out(precision_, 0);
    mpz_class m = residue_;
    for (unsigned i = 0; i < precision_; ++i) {
        mpz_class d = mod_pos(m, mpz_class(p_));
        out[i] = d.get_si();
        m = (m - d) / p_;
    }
    return out;
}

PadicApprox PadicApprox::geometric_sum(const PadicApprox& x, unsigned long n) {
    if (!mpz_divisible_ui_p(x.residue_.get_mpz_t(), static_cast<unsigned long>(x.p_)))
        throw std::domain_error("padic: geometric series requires |x|_p < 1 (unit rejected)");
    mpz_class sum = 0, power = 1;
    for (unsigned long i = 0; i <= n; ++i) {
        sum = mod_pos(sum + power, x.modulus_);
        if (i == n) break;
        power = mod_pos(power * x.residue_, x.modulus_);
        if (power == 0) break;  // every remaining term vanishes mod p^j
    }
    return PadicApprox(x.p_, x.precision_, sum);
}

PadicApprox PadicApprox::geometric_limit(const PadicApprox& x) {
    if (!mpz_divisible_ui_p(x.residue_.get_mpz_t(), static_cast<unsigned long>(x.p_)))
        throw std::domain_error("padic: geometric series requires |x|_p < 1 (unit rejected)");
    PadicApprox one_minus_x(x.p_, x.precision_, 1 - x.residue_);
    return one_minus_x.invert();
}

std::string PadicApprox::str() const {
    std::ostringstream os;
    os << residue_.get_str() << " (mod " << p_ << "^" << precision_ << ")";
    return os.str();
}

std::vector<mpz_class> coset_decomposition(long p, unsigned precision, unsigned level) {
    if (level > precision)
        throw std::invalid_argument("coset_decomposition: level must not exceed precision");
    mpz_class count = pow_mpz(mpz_class(p), level);
    if (count > 1048576)
        throw std::invalid_argument("coset_decomposition: p^level too large to enumerate");
    std::vector<mpz_class> reps;
    reps.reserve(count.get_ui());
    for (mpz_class r = 0; r < count; ++r) reps.push_back(r);
    return reps;
}

mpz_class coset_of(const PadicApprox& x, unsigned level) {
    if (level > x.precision())
        throw std::invalid_argument("coset_of: level must not exceed precision");
    mpz_class m = pow_mpz(mpz_class(x.p()), level);
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.residue().get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace qmet
