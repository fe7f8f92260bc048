#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qmet/rational.hpp"

namespace qmet {

/// Canonical finite union of half-open intervals [a, b) inside [0, 1):
/// sorted, pairwise disjoint, adjacency merged (b_i < a_{i+1}).
class IntervalSet {
public:
    using Piece = std::pair<Rational, Rational>;

    IntervalSet() = default;
    static IntervalSet interval(const Rational& a, const Rational& b);
    static IntervalSet from_pieces(std::vector<Piece> pieces);
    static IntervalSet full();

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    bool contains(const Rational& x) const;

    IntervalSet complement() const;  // within [0, 1)

    friend IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet set_symdiff(const IntervalSet& a, const IntervalSet& b);

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.pieces_ == b.pieces_; }

    /// Text format: endpoints "a b" pairs, whitespace separated, any number
    /// per line; parsed sets canonicalize.
    static IntervalSet parse(std::istream& in);
    void emit(std::ostream& out) const;  // one "a b" pair per line

    std::string str() const;

private:
    std::vector<Piece> pieces_;
};

}  // namespace qmet
