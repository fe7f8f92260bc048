#pragma once

#include <optional>
#include <vector>

#include "qmet/absolute_value.hpp"
#include "qmet/magnitude.hpp"
#include "qmet/rational.hpp"

namespace qmet {

using Vec = std::vector<Rational>;

/// Coordinate space k^m under the max norm N(v) = max_i |v_i|; an ultranorm
/// when the scalar absolute value is ultrametric, a q-norm otherwise (q
/// declared by the scalar).
class NormedSpace {
public:
    NormedSpace(AbsoluteValue scalar, unsigned dim);

    const AbsoluteValue& scalar() const { return scalar_; }
    unsigned dim() const { return dim_; }

    /// nullopt encodes q = infinity (ultranorm).
    std::optional<Rational> q_exponent() const { return scalar_.q_exponent(); }
    bool is_ultranorm() const { return scalar_.is_ultrametric(); }

    Magnitude norm(const Vec& v) const;

    Vec zero() const { return Vec(dim_, Rational()); }
    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec scale(const Rational& t, const Vec& v) const;
    void check_dim(const Vec& v) const;

private:
    AbsoluteValue scalar_;
    unsigned dim_;
};

bool is_zero_vec(const Vec& v);

}  // namespace qmet
