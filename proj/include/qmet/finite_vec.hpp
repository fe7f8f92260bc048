#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qmet/normed_space.hpp"

namespace qmet {

/// Finitely supported map from keys to coordinate vectors; keys carrying the
/// zero vector are never stored, so the key set is the support.
class FiniteVec {
public:
    FiniteVec() = default;
    static FiniteVec from_entries(const NormedSpace& space, std::map<std::string, Vec> entries);

    const std::map<std::string, Vec>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    size_t support_size() const { return entries_.size(); }
    std::vector<std::string> support() const;

    /// Zero vector for keys outside the support.
    Vec at(const NormedSpace& space, const std::string& key) const;

    FiniteVec add(const NormedSpace& space, const FiniteVec& o) const;
    FiniteVec sub(const NormedSpace& space, const FiniteVec& o) const;
    FiniteVec scale(const NormedSpace& space, const Rational& t) const;

    /// Text format: one line per entry, "key<TAB>c_1 c_2 ... c_m".
    static FiniteVec parse(const NormedSpace& space, std::istream& in);
    void emit(std::ostream& out) const;

private:
    std::map<std::string, Vec> entries_;
};

/// power_sum = sum over the support of N(f(x))^r (the exact ^r-domain value
/// when representable); value = its r-th root.  For r = infinity (nullopt)
/// both carry the max norm.
struct LrNorm {
    Magnitude power_sum;
    Magnitude value;
};
LrNorm lr_norm(const NormedSpace& space, const FiniteVec& f, const std::optional<Rational>& r);

/// Which triangle-inequality contract ||.||_r satisfies on this space.
enum class TriangleRegime { RNorm, QNorm, UltranormAllR };
TriangleRegime triangle_regime(const NormedSpace& space, const Rational& r);
const char* regime_name(TriangleRegime regime);

/// Minimal-cardinality key set whose complement tail r-sum is < eps,
/// greedily filled by descending norm (ties by key order).
std::vector<std::string> tail_support(const NormedSpace& space, const FiniteVec& f, const Rational& eps,
                                      const Rational& r);

/// f_0 = 0, f_l places v_eta at keys x_1..x_l: consecutive r-distances all
/// equal N(v_eta) and ||f_l||_r^r = l * N(v_eta)^r exactly.
std::vector<FiniteVec> erdos_chain(const NormedSpace& space, const std::vector<std::string>& keys,
                                   const Vec& v_eta, const Rational& r);

/// Witness that any set containing 0 and eta-separated from its complement
/// reaches r-norm >= target: an eta-chain of the minimal certified length.
/// The chain itself is materialized on demand via erdos_chain; length can be
/// far too large to store.
struct UnboundednessCertificate {
    Vec v_eta;
    Magnitude step_norm;        // N(v_eta), 0 < . < eta
    unsigned long length;       // minimal n with n * N^r >= target^r
    Magnitude final_power_sum;  // n * N^r, exact
};
UnboundednessCertificate unboundedness_certificate(const NormedSpace& space, const Rational& eta,
                                                   const Rational& target, const Rational& r);

/// f_0 .. f_count of the certified chain, keys drawn from the supply;
/// count is explicit because certified lengths can run to millions.
std::vector<FiniteVec> certificate_prefix(const NormedSpace& space, const UnboundednessCertificate& cert,
                                          const std::function<std::string(unsigned long)>& key_at,
                                          unsigned long count, const Rational& r);

/// f lies in the cube E_a: support inside the bound map and N(f(x)) <= a(x)
/// everywhere.  r documents the ambient l^r space; finite bounds are always
/// r-summable.
bool cube_membership(const NormedSpace& space, const FiniteVec& f,
                     const std::map<std::string, Rational>& bounds, const Rational& r);

/// Names the sphere-tail precondition that failed.
struct SphereTailError : std::domain_error {
    enum class Which { NormFNotT, NormGExceedsT, HeadTooSmall };
    Which which;
    SphereTailError(Which w, const std::string& msg) : std::domain_error(msg), which(w) {}
};

/// Given ||f||_r = t, ||g||_r <= t and a head sum of g over A(eps) above
/// t^r - 2 eps, the tail of g outside A(eps) stays below 2 eps.
struct SphereTail {
    Magnitude tail_power;
    bool within_bound;
};
SphereTail sphere_tail_bound(const NormedSpace& space, const FiniteVec& f, const FiniteVec& g,
                             const Rational& t, const Rational& eps, const Rational& r);

}  // namespace qmet
