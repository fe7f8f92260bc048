#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmet/interval_set.hpp"
#include "qmet/measure.hpp"
#include "qmet/normed_space.hpp"

namespace qmet {

/// Piecewise-constant function on [0,1) with finitely many nonzero vector
/// values: canonical parts carry pairwise disjoint interval sets with
/// distinct nonzero values; the function is 0 off their union.
class SimpleFn {
public:
    using Part = std::pair<IntervalSet, Vec>;

    explicit SimpleFn(unsigned dim = 1) : dim_(dim) {}

    /// Parts must be pairwise disjoint; empty sets and zero values drop out,
    /// equal values merge.
    static SimpleFn from_parts(unsigned dim, std::vector<Part> parts);

    unsigned dim() const { return dim_; }
    const std::vector<Part>& parts() const { return parts_; }

    Vec value_at(const Rational& x) const;
    IntervalSet support() const;

    SimpleFn add(const NormedSpace& space, const SimpleFn& o) const;
    SimpleFn sub(const NormedSpace& space, const SimpleFn& o) const;
    SimpleFn scale(const Rational& t) const;
    SimpleFn restrict(const IntervalSet& E) const;

    /// Where the two functions differ, as an interval set.
    IntervalSet disagreement(const SimpleFn& o) const;

    /// Text format: one line per constant piece, "a b<TAB>c_1 ... c_m" for
    /// the value on [a, b).
    static SimpleFn parse(std::istream& in, unsigned dim);
    void emit(std::ostream& out) const;

private:
    unsigned dim_;
    std::vector<Part> parts_;  // canonical
};

/// Integral of a nonnegative real-valued (dim 1) simple function:
/// sum of value * mu(part).
Rational integrate_simple(const FAMeasure& mu, const SimpleFn& f);

/// L^r data of a vector-valued simple function: power_sum is the exact
/// integral of N(f)^r; value its r-th root.  r = nullopt gives the
/// essential maximum (largest norm over parts of positive measure, 0 when
/// every part is null).
struct LrSimpleNorm {
    Magnitude power_sum;
    Magnitude value;
};
LrSimpleNorm lr_norm_simple(const FAMeasure& mu, const NormedSpace& space, const SimpleFn& f,
                            const std::optional<Rational>& r);

/// Pseudometric mu(A symmetric-difference B) on the measure algebra.
Rational sym_diff_metric(const FAMeasure& mu, const IntervalSet& A, const IntervalSet& B);

/// Splits E at F-quantile cuts into pieces of equal measure mu(E)/n with n
/// minimal for mu(piece) < eps; the partial unions then form an eps-chain
/// from the empty set to E under the symmetric-difference metric.
std::vector<IntervalSet> chain_decompose(const FAMeasure& mu, const IntervalSet& E, const Rational& eps);

/// f restricted to [0, t); the endpoints give the zero function and f.
SimpleFn truncate_path(const SimpleFn& f, const Rational& t);

/// ||f_{t2} - f_{t1}||_r^r against mu([t1,t2)) * ||f||_inf^r, compared in
/// the ^r power domain.
struct PathModulus {
    Magnitude diff_power;
    Magnitude bound_power;
    bool within_bound;
};
PathModulus path_modulus(const FAMeasure& mu, const NormedSpace& space, const SimpleFn& f,
                         const Rational& t1, const Rational& t2, const Rational& r);

/// mu{f != g} = 0.
bool ae_equal(const FAMeasure& mu, const SimpleFn& f, const SimpleFn& g);

}  // namespace qmet
