#include "qmet/measure.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qmet/errors.hpp"

namespace qmet {

FAMeasure FAMeasure::lebesgue() {
    return from_breakpoints({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

FAMeasure FAMeasure::from_breakpoints(std::vector<std::pair<Rational, Rational>> bp) {
    if (bp.size() < 2) throw std::invalid_argument("measure: needs breakpoints at 0 and 1");
    if (!bp.front().first.is_zero() || !bp.front().second.is_zero())
        throw std::invalid_argument("measure: first breakpoint must be (0, 0)");
    if (!(bp.back().first == Rational(1))) throw std::invalid_argument("measure: last breakpoint must be at t = 1");
    for (size_t i = 1; i < bp.size(); ++i) {
        if (!(bp[i - 1].first < bp[i].first))
            throw std::invalid_argument("measure: breakpoints must increase strictly in t");
        if (bp[i].second < bp[i - 1].second)
            throw std::invalid_argument("measure: distribution function must be nondecreasing");
    }
    FAMeasure m;
    m.bp_ = std::move(bp);
    return m;
}

Rational FAMeasure::cdf(const Rational& t) const {
    if (t.is_negative() || t > Rational(1)) throw std::domain_error("measure: cdf argument outside [0, 1]");
    size_t i = 1;
    while (i < bp_.size() && bp_[i].first < t) ++i;
    if (i == bp_.size()) return bp_.back().second;
    const auto& [t0, f0] = bp_[i - 1];
    const auto& [t1, f1] = bp_[i];
    if (t == t1) return f1;
    return f0 + (f1 - f0) * (t - t0) / (t1 - t0);
}

Rational FAMeasure::measure_interval(const Rational& a, const Rational& b) const {
    if (a > b) throw std::invalid_argument("measure: interval with a > b");
    return cdf(b) - cdf(a);
}

Rational FAMeasure::measure(const IntervalSet& A) const {
    Rational total(0);
    for (const auto& [a, b] : A.pieces()) total += measure_interval(a, b);
    return total;
}

Rational FAMeasure::left_inverse(const Rational& y, const Rational& lo, const Rational& hi) const {
    if (lo > hi) throw std::invalid_argument("measure: left_inverse with lo > hi");
    Rational flo = cdf(lo);
    if (y < flo || cdf(hi) < y) throw std::domain_error("measure: left_inverse target outside [F(lo), F(hi)]");
    if (flo >= y) return lo;
    Rational prev_t = lo, prev_f = flo;
    for (const auto& [t, f] : bp_) {
        if (t <= lo) continue;
        Rational seg_t = std::min(t, hi);
        Rational seg_f = cdf(seg_t);
        if (seg_f >= y) {
            // F is linear on [prev_t, seg_t] with positive slope here
            Rational slope = (seg_f - prev_f) / (seg_t - prev_t);
            return prev_t + (y - prev_f) / slope;
        }
        prev_t = seg_t;
        prev_f = seg_f;
        if (seg_t == hi) break;
    }
    return hi;
}

FAMeasure FAMeasure::parse(std::istream& in) {
    std::vector<std::pair<Rational, Rational>> bp;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string ts, fs;
        if (!(ls >> ts)) continue;
        if (!(ls >> fs)) throw ParseError("measure: missing F(t) on line " + std::to_string(lineno));
        std::string extra;
        if (ls >> extra) throw ParseError("measure: trailing tokens on line " + std::to_string(lineno));
        bp.emplace_back(Rational::parse(ts), Rational::parse(fs));
    }
    try {
        return from_breakpoints(std::move(bp));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void FAMeasure::emit(std::ostream& out) const {
    for (const auto& [t, f] : bp_) out << t.str() << " " << f.str() << "\n";
}

}  // namespace qmet
