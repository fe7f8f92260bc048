#include "qmet/interval_set.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qmet/errors.hpp"

namespace qmet {

IntervalSet IntervalSet::interval(const Rational& a, const Rational& b) {
    return from_pieces({{a, b}});
}

IntervalSet IntervalSet::from_pieces(std::vector<Piece> pieces) {
    const Rational zero(0), one(1);
    for (auto& [a, b] : pieces) {
        if (a.is_negative() || b > one || a > b)
            throw std::invalid_argument("interval set: need 0 <= a <= b <= 1, got [" + a.str() + "," + b.str() +
                                        ")");
    }
    std::erase_if(pieces, [](const Piece& p) { return p.first == p.second; });
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& x, const Piece& y) { return x.first < y.first; });
    IntervalSet out;
    for (auto& p : pieces) {
        if (!out.pieces_.empty() && p.first <= out.pieces_.back().second) {
            // overlap or adjacency merges
            if (p.second > out.pieces_.back().second) out.pieces_.back().second = p.second;
        } else {
            out.pieces_.push_back(std::move(p));
        }
    }
    return out;
}

IntervalSet IntervalSet::full() {
    return interval(Rational(0), Rational(1));
}

bool IntervalSet::contains(const Rational& x) const {
    for (const auto& [a, b] : pieces_) {
        if (x < a) return false;
        if (x < b) return true;
    }
    return false;
}

IntervalSet IntervalSet::complement() const {
    std::vector<Piece> out;
    Rational cursor(0);
    for (const auto& [a, b] : pieces_) {
        if (cursor < a) out.push_back({cursor, a});
        cursor = b;
    }
    if (cursor < Rational(1)) out.push_back({cursor, Rational(1)});
    return from_pieces(std::move(out));
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<IntervalSet::Piece> all = a.pieces_;
    all.insert(all.end(), b.pieces_.begin(), b.pieces_.end());
    return IntervalSet::from_pieces(std::move(all));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<IntervalSet::Piece> out;
    size_t i = 0, j = 0;
    while (i < a.pieces_.size() && j < b.pieces_.size()) {
        const auto& [la, ra] = a.pieces_[i];
        const auto& [lb, rb] = b.pieces_[j];
        Rational lo = std::max(la, lb);
        Rational hi = std::min(ra, rb);
        if (lo < hi) out.push_back({lo, hi});
        if (ra < rb) {
            ++i;
        } else {
            ++j;
        }
    }
    return IntervalSet::from_pieces(std::move(out));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
    return set_intersect(a, b.complement());
}

IntervalSet set_symdiff(const IntervalSet& a, const IntervalSet& b) {
    return set_union(set_difference(a, b), set_difference(b, a));
}

IntervalSet IntervalSet::parse(std::istream& in) {
    std::vector<Piece> pieces;
    std::string a, b;
    while (in >> a) {
        if (!(in >> b)) throw ParseError("interval set: dangling endpoint '" + a + "'");
        pieces.push_back({Rational::parse(a), Rational::parse(b)});
    }
    try {
        return from_pieces(std::move(pieces));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void IntervalSet::emit(std::ostream& out) const {
    for (const auto& [a, b] : pieces_) out << a.str() << " " << b.str() << "\n";
}

std::string IntervalSet::str() const {
    if (pieces_.empty()) return "{}";
    std::ostringstream os;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        if (i) os << " ";
        os << "[" << pieces_[i].first.str() << "," << pieces_[i].second.str() << ")";
    }
    return os.str();
}

}  // namespace qmet
