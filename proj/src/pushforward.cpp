#include "qmet/pushforward.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "qmet/errors.hpp"

namespace qmet {

AtomicSpace AtomicSpace::from_atoms(std::vector<std::pair<std::string, Rational>> atoms) {
    for (const auto& [label, w] : atoms) {
        if (label.empty()) throw std::invalid_argument("atomic space: empty label");
        if (w.is_negative()) throw std::invalid_argument("atomic space: negative weight at '" + label + "'");
    }
    return AtomicSpace{std::move(atoms)};
}

Rational AtomicSpace::total_weight() const {
    Rational t(0);
    for (const auto& [label, w] : atoms) t += w;
    return t;
}

namespace {

const Rational& phi_at(const std::map<std::string, Rational>& phi, const std::string& label) {
    auto it = phi.find(label);
    if (it == phi.end()) throw std::invalid_argument("pushforward: phi undefined at '" + label + "'");
    if (it->second.is_negative() || it->second >= Rational(1))
        throw std::domain_error("pushforward: phi('" + label + "') outside [0, 1)");
    return it->second;
}

}  // namespace

Rational pushforward_measure(const AtomicSpace& X, const std::map<std::string, Rational>& phi,
                             const IntervalSet& E) {
    Rational total(0);
    for (const auto& [label, w] : X.atoms)
        if (E.contains(phi_at(phi, label))) total += w;
    return total;
}

AtomsFile parse_atoms(std::istream& in) {
    AtomsFile out;
    std::string line;
    size_t lineno = 0;
    std::vector<std::pair<std::string, Rational>> atoms;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string label, ws, ps;
        if (!(ls >> label)) continue;
        if (!(ls >> ws >> ps)) throw ParseError("atoms: expected 'label weight point' on line " + std::to_string(lineno));
        if (out.phi.count(label)) throw ParseError("atoms: duplicate label '" + label + "'");
        atoms.push_back({label, Rational::parse(ws)});
        out.phi[label] = Rational::parse(ps);
    }
    try {
        out.space = AtomicSpace::from_atoms(std::move(atoms));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return out;
}

PushforwardCheck pushforward_check(const AtomicSpace& X, const std::map<std::string, Rational>& phi,
                                   const SimpleFn& f) {
    if (f.dim() != 1) throw std::invalid_argument("pushforward_check: needs a real-valued (dim 1) function");
    for (const auto& [E, v] : f.parts())
        if (v[0].is_negative()) throw std::invalid_argument("pushforward_check: negative value rejected");
    Rational lhs(0);
    for (const auto& [label, w] : X.atoms) lhs += w * f.value_at(phi_at(phi, label))[0];
    Rational rhs(0);
    for (const auto& [E, v] : f.parts()) rhs += v[0] * pushforward_measure(X, phi, E);
    return {lhs, rhs, lhs == rhs};
}

}  // namespace qmet
