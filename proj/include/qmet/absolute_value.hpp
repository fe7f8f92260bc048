#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmet/magnitude.hpp"
#include "qmet/rational.hpp"

namespace qmet {

/// Descriptor of a multiplicative absolute-value function on the rationals:
/// trivial, the standard real one, or p-adic, each optionally raised to a
/// positive rational power.  Powers of powers collapse into the single
/// exponent field.
class AbsoluteValue {
public:
    enum class Kind { Trivial, RealStd, Padic };

    static AbsoluteValue trivial();
    static AbsoluteValue real_std();
    static AbsoluteValue padic(long p);
    static AbsoluteValue power(const AbsoluteValue& base, const Rational& exponent);

    Kind kind() const { return kind_; }
    long prime() const { return prime_; }
    const Rational& exponent() const { return exponent_; }

    bool is_trivial() const { return kind_ == Kind::Trivial; }
    bool is_ultrametric() const { return kind_ != Kind::RealStd; }

    /// Declared triangle exponent: |x+y|^q <= |x|^q + |y|^q holds with this
    /// q; nullopt encodes q = infinity (the ultrametric inequality).
    std::optional<Rational> q_exponent() const;

    std::string str() const;

    friend bool operator==(const AbsoluteValue& a, const AbsoluteValue& b) {
        return a.kind_ == b.kind_ && a.prime_ == b.prime_ && a.exponent_ == b.exponent_;
    }

private:
    AbsoluteValue(Kind k, long p, Rational e) : kind_(k), prime_(p), exponent_(std::move(e)) {}

    Kind kind_;
    long prime_ = 0;
    Rational exponent_ = Rational(1);
};

Magnitude abs_eval(const AbsoluteValue& v, const Rational& x);

/// Valuation j with x = p^j (a/b), p dividing neither a nor b; x = 0 maps
/// to the infinity sentinel (infinite == true).
struct Valuation {
    bool infinite;
    long value;
};
Valuation padic_valuation(long p, const Rational& x);

long mpz_valuation(long p, const mpz_class& n);  // n != 0

/// Pairs (x, y) from the sample list with |x+y|^q > |x|^q + |y|^q.
std::vector<std::pair<Rational, Rational>> check_q_subadditive(
    const AbsoluteValue& v, const std::vector<std::pair<Rational, Rational>>& samples,
    const Rational& q);

struct ArchimedeanVerdict {
    bool archimedean;
    unsigned long n;  // witness when archimedean, else the searched bound
};
ArchimedeanVerdict is_archimedean(const AbsoluteValue& v, unsigned long n_max);

struct EquivalenceExponent {
    enum class Status { Found, Absent, Underdetermined };
    Status status = Status::Absent;
    bool exact = false;           // Found with exact verification on all samples
    Rational value;               // when exact
    double approx = 0.0;          // always set when Found
};
EquivalenceExponent equivalence_exponent(const AbsoluteValue& v1, const AbsoluteValue& v2,
                                         const std::vector<Rational>& samples);

/// log of a positive magnitude.
double magnitude_log(const Magnitude& m);

}  // namespace qmet
