#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmet/simple_fn.hpp"

namespace qmet {

/// Finite set with nonnegative atom weights: a finitely-additive measure on
/// all subsets, the domain of pushforward maps into [0,1).
struct AtomicSpace {
    std::vector<std::pair<std::string, Rational>> atoms;  // (label, weight >= 0)

    static AtomicSpace from_atoms(std::vector<std::pair<std::string, Rational>> atoms);
    Rational total_weight() const;
};

/// nu(E) = mu(phi^{-1}(E)): total weight of atoms mapped into E.  Every
/// phi value must land in [0, 1).
Rational pushforward_measure(const AtomicSpace& X, const std::map<std::string, Rational>& phi,
                             const IntervalSet& E);

/// Both sides of the change-of-variables identity for a nonnegative
/// real-valued simple f on [0,1): integral of f(phi(.)) against the atom
/// weights, and integral of f against the pushforward.
struct PushforwardCheck {
    Rational lhs;  // sum over atoms of weight * f(phi(atom))
    Rational rhs;  // sum over parts of value * nu(part)
    bool equal;
};
PushforwardCheck pushforward_check(const AtomicSpace& X, const std::map<std::string, Rational>& phi,
                                   const SimpleFn& f);

/// Text format: one "label weight point" line per atom.
struct AtomsFile {
    AtomicSpace space;
    std::map<std::string, Rational> phi;
};
AtomsFile parse_atoms(std::istream& in);

}  // namespace qmet
