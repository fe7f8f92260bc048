#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmet/dist_matrix.hpp"
#include "qmet/rational.hpp"

namespace qmet {

/// Blocks of the eta-chain equivalence relation: two labels share a block
/// iff a chain with steps d < eta connects them; distinct blocks are
/// eta-separated.  Blocks keep matrix label order; block list is ordered by
/// first member.
struct Partition {
    std::vector<std::vector<std::string>> blocks;
    Magnitude eta;

    bool same_blocks(const Partition& o) const { return blocks == o.blocks; }

    void emit(std::ostream& out) const;  // one block per line
    static std::vector<std::vector<std::string>> parse_blocks(std::istream& in);
};

Partition eta_partition(const DistMatrix& D, const Magnitude& eta);

/// All cross distances >= eta; A and B must be disjoint label sets.
bool is_eta_separated(const DistMatrix& D, const std::vector<std::string>& A,
                      const std::vector<std::string>& B, const Magnitude& eta);

/// One-block test on the restriction of D to S, cross-checked against the
/// separated-split characterization (the chain-reachable set of the first
/// element either covers S or certifies a separated split).
bool is_eta_connected(const DistMatrix& D, const std::vector<std::string>& S, const Magnitude& eta);

/// Largest ultrametric below D: u(x,y) = min over chains of the maximal
/// step, realized as minimax path weights through ascending edge merges.
DistMatrix subdominant_ultrametric(const DistMatrix& D);

/// Ascending distinct thresholds at which eta_partition changes; the
/// partition is constant on each interval between consecutive values.
std::vector<Magnitude> critical_thresholds(const DistMatrix& D);

struct Chain {
    std::vector<std::string> points;  // nonempty; repetitions allowed
};

/// a-length (sum of step^a)^(1/a), max step for a = infinity (nullopt),
/// 0 for single-point chains.  power_sum carries the exact sum of step^a.
struct ChainLength {
    Magnitude power_sum;
    Magnitude value;
};
ChainLength chain_a_length(const DistMatrix& D, const Chain& c, const std::optional<Rational>& a);

/// Cheapest chain from x to y under edge weights d^a; ties prefer fewer
/// hops, then the lexicographically smaller label sequence.
struct MinLength {
    Magnitude power_cost;
    Magnitude value;
    Chain witness;
};
MinLength min_a_length(const DistMatrix& D, const std::string& x, const std::string& y, const Rational& a);

/// Largest critical threshold eta for which the eta-component U of x fits
/// inside the open ball B(x, r); U and its complement are automatically
/// eta-separated.  Unbounded when the whole space fits.
struct ZeroDimProfile {
    enum class Kind { Absent, Finite, Unbounded };
    Kind kind;
    Magnitude eta;  // set when Finite
};
ZeroDimProfile zero_dim_profile(const DistMatrix& D, const std::string& x, const Magnitude& r);

/// Entrywise h(t) = base^(ceil(log_base t)), the smallest integer power of
/// base at or above t; keeps the ultrametric property and quantizes values
/// to integer powers of base.  Rejects non-ultrametric input.
DistMatrix quantize_metric(const DistMatrix& D, const Rational& base);

}  // namespace qmet
