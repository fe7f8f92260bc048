#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "qmet/interval_set.hpp"
#include "qmet/rational.hpp"

namespace qmet {

/// Finitely-additive measure on the interval algebra of [0,1), given by a
/// nondecreasing continuous piecewise-linear distribution function F with
/// F(0) = 0: mu([a,b)) = F(b) - F(a).  Continuity is structural, so points
/// are null and the two one-sided limit conditions hold by construction.
class FAMeasure {
public:
    static FAMeasure lebesgue();

    /// Breakpoints (t, F(t)) with t strictly increasing from 0 to 1,
    /// F nondecreasing, F(0) = 0.
    static FAMeasure from_breakpoints(std::vector<std::pair<Rational, Rational>> bp);

    const std::vector<std::pair<Rational, Rational>>& breakpoints() const { return bp_; }

    Rational cdf(const Rational& t) const;  // t in [0, 1]
    Rational total() const { return bp_.back().second; }
    Rational measure_interval(const Rational& a, const Rational& b) const;
    Rational measure(const IntervalSet& A) const;

    /// Smallest t in [lo, hi] with F(t) >= y; requires F(lo) <= y <= F(hi).
    Rational left_inverse(const Rational& y, const Rational& lo, const Rational& hi) const;

    /// Text format: one "t F(t)" pair per line.
    static FAMeasure parse(std::istream& in);
    void emit(std::ostream& out) const;

private:
    std::vector<std::pair<Rational, Rational>> bp_;
};

}  // namespace qmet
