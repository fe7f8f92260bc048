#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmet/magnitude.hpp"
#include "qmet/rational.hpp"

namespace qmet {

/// A coset x + p^j Z_p at finite precision: prime p, precision j, residue
/// in [0, p^j).  Residue arithmetic mod p^j stands in for Z_p arithmetic.
class PadicApprox {
public:
    PadicApprox(long p, unsigned precision, const mpz_class& residue);

    /// Embed w = a/b with |w|_p <= 1 (p must not divide b) as the residue
    /// a * b^{-1} mod p^j, within p^{-j} of w in the p-adic metric.
    static PadicApprox from_rational(const Rational& w, long p, unsigned precision);

    long p() const { return p_; }
    unsigned precision() const { return precision_; }
    const mpz_class& residue() const { return residue_; }
    const mpz_class& modulus() const { return modulus_; }

    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-(const PadicApprox& o) const;
    PadicApprox operator*(const PadicApprox& o) const;
    PadicApprox operator-() const;
    PadicApprox invert() const;  // residue must be a unit (not divisible by p)

    friend bool operator==(const PadicApprox& a, const PadicApprox& b) {
        return a.p_ == b.p_ && a.precision_ == b.precision_ && a.residue_ == b.residue_;
    }

    /// Largest l with p^l dividing the residue; nullopt when the residue is
    /// 0, where only "valuation >= precision" is known.
    std::optional<unsigned> valuation() const;

    /// p-adic magnitude.  A zero residue cannot be told from small nonzero
    /// elements, so it reports the bound p^{-j} with exact == false.
    struct Abs {
        Magnitude value;
        bool exact;
    };
    Abs abs() const;

    /// Exactly `precision` base-p digits, least significant first.
    std::vector<long> digits() const;

    /// Sum_{i=0}^{n} x^i mod p^j, computed term by term; requires |x|_p < 1
    /// (p divides the residue).
    static PadicApprox geometric_sum(const PadicApprox& x, unsigned long n);

    /// (1 - x)^{-1} mod p^j; requires |x|_p < 1.
    static PadicApprox geometric_limit(const PadicApprox& x);

    std::string str() const;

private:
    void check_compatible(const PadicApprox& o) const;

    long p_;
    unsigned precision_;
    mpz_class modulus_;
    mpz_class residue_;
};

/// Representatives {0, ..., p^level - 1} of Z_p / p^level Z_p viewed at
/// precision j >= level; every residue mod p^j lies in exactly one translate.
std::vector<mpz_class> coset_decomposition(long p, unsigned precision, unsigned level);

/// The representative of the translate of p^level Z_p containing x.
mpz_class coset_of(const PadicApprox& x, unsigned level);

}  // namespace qmet
