#pragma once

#include <array>
#include <vector>

#include "qmet/dist_matrix.hpp"
#include "qmet/rational.hpp"

namespace qmet {

/// A triple (x, y, z) with d(x,z)^q > d(x,y)^q + d(y,z)^q (or the max form).
struct TripleViolation {
    std::string x, y, z;
};

std::vector<TripleViolation> verify_qmetric(const DistMatrix& D, const Rational& q);
std::vector<TripleViolation> verify_ultrametric(const DistMatrix& D);

/// q* = sup{q > 0 : D is a q-metric}.  Finite roots are located by
/// bisection in [1e-3, 64] to relative tolerance 1e-9; a root falling
/// outside that bracket is reported as out of range, never clamped.
struct MaxExponent {
    enum class Kind { Finite, Ultrametric, BelowRange, AboveRange };
    Kind kind;
    double value = 0;  // set when Finite
};
MaxExponent max_metric_exponent(const DistMatrix& D);

DistMatrix power_transform(const DistMatrix& D, const Rational& a);

/// Triples whose two largest distances differ; empty for every ultrametric.
std::vector<std::array<std::string, 3>> isoceles_audit(const DistMatrix& D);

/// Open (strict) or closed sublevel set of d(x, .), in label order.
std::vector<std::string> ball(const DistMatrix& D, const std::string& center, const Magnitude& radius,
                              bool closed);

}  // namespace qmet
