#include "qmet/simple_fn.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qmet/errors.hpp"

namespace qmet {

namespace {

// all part boundaries plus 0 and 1, sorted and deduplicated; the functions
// involved are constant on every cell between consecutive cuts
std::vector<Rational> cut_points(std::initializer_list<const SimpleFn*> fns) {
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    for (const SimpleFn* f : fns)
        for (const auto& [E, v] : f->parts())
            for (const auto& [a, b] : E.pieces()) {
                cuts.push_back(a);
                cuts.push_back(b);
            }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

std::vector<SimpleFn::Part> parts_from_cells(unsigned dim,
                                             const std::vector<std::pair<IntervalSet::Piece, Vec>>& cells) {
    // group cells by value
    std::vector<std::pair<Vec, std::vector<IntervalSet::Piece>>> groups;
    for (const auto& [piece, v] : cells) {
        if (is_zero_vec(v)) continue;
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == v; });
        if (it == groups.end()) {
            groups.push_back({v, {piece}});
        } else {
            it->second.push_back(piece);
        }
    }
    std::vector<SimpleFn::Part> parts;
    parts.reserve(groups.size());
    for (auto& [v, pieces] : groups) parts.push_back({IntervalSet::from_pieces(std::move(pieces)), v});
    (void)dim;
    return parts;
}

}  // namespace

SimpleFn SimpleFn::from_parts(unsigned dim, std::vector<Part> parts) {
    if (dim == 0) throw std::invalid_argument("simple fn: dimension must be positive");
    std::erase_if(parts, [](const Part& p) { return p.first.empty() || is_zero_vec(p.second); });
    for (const auto& [E, v] : parts)
        if (v.size() != dim) throw std::invalid_argument("simple fn: value dimension mismatch");
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (!set_intersect(parts[i].first, parts[j].first).empty())
                throw std::invalid_argument("simple fn: parts must be pairwise disjoint");
    // merge equal values
    std::vector<Part> merged;
    for (auto& p : parts) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const Part& m) { return m.second == p.second; });
        if (it == merged.end()) {
            merged.push_back(std::move(p));
        } else {
            it->first = set_union(it->first, p.first);
        }
    }
    std::sort(merged.begin(), merged.end(), [](const Part& a, const Part& b) {
        return a.first.pieces().front().first < b.first.pieces().front().first;
    });
    SimpleFn f(dim);
    f.parts_ = std::move(merged);
    return f;
}

Vec SimpleFn::value_at(const Rational& x) const {
    for (const auto& [E, v] : parts_)
        if (E.contains(x)) return v;
    return Vec(dim_, Rational());
}

IntervalSet SimpleFn::support() const {
    IntervalSet s;
    for (const auto& [E, v] : parts_) s = set_union(s, E);
    return s;
}

SimpleFn SimpleFn::add(const NormedSpace& space, const SimpleFn& o) const {
    if (dim_ != o.dim_ || space.dim() != dim_) throw std::invalid_argument("simple fn: dimension mismatch");
    auto cuts = cut_points({this, &o});
    std::vector<std::pair<IntervalSet::Piece, Vec>> cells;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Vec v = space.add(value_at(cuts[i]), o.value_at(cuts[i]));
        cells.push_back({{cuts[i], cuts[i + 1]}, std::move(v)});
    }
    return from_parts(dim_, parts_from_cells(dim_, cells));
}

SimpleFn SimpleFn::sub(const NormedSpace& space, const SimpleFn& o) const {
    return add(space, o.scale(Rational(-1)));
}

SimpleFn SimpleFn::scale(const Rational& t) const {
    std::vector<Part> parts;
    parts.reserve(parts_.size());
    for (const auto& [E, v] : parts_) {
        Vec w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = t * v[i];
        parts.push_back({E, std::move(w)});
    }
    return from_parts(dim_, std::move(parts));
}

SimpleFn SimpleFn::restrict(const IntervalSet& E) const {
    std::vector<Part> parts;
    parts.reserve(parts_.size());
    for (const auto& [F, v] : parts_) parts.push_back({set_intersect(F, E), v});
    return from_parts(dim_, std::move(parts));
}

IntervalSet SimpleFn::disagreement(const SimpleFn& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("simple fn: dimension mismatch");
    auto cuts = cut_points({this, &o});
    std::vector<IntervalSet::Piece> pieces;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(value_at(cuts[i]) == o.value_at(cuts[i]))) pieces.push_back({cuts[i], cuts[i + 1]});
    }
    return IntervalSet::from_pieces(std::move(pieces));
}

SimpleFn SimpleFn::parse(std::istream& in, unsigned dim) {
    std::vector<Part> parts;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("simple fn: missing TAB on line " + std::to_string(lineno));
        std::istringstream hs(line.substr(0, tab));
        std::string as, bs;
        if (!(hs >> as >> bs)) throw ParseError("simple fn: bad interval on line " + std::to_string(lineno));
        std::istringstream cs(line.substr(tab + 1));
        Vec v;
        std::string tok;
        while (cs >> tok) v.push_back(Rational::parse(tok));
        if (v.size() != dim)
            throw ParseError("simple fn: expected " + std::to_string(dim) + " coordinates on line " +
                             std::to_string(lineno));
        try {
            parts.push_back({IntervalSet::interval(Rational::parse(as), Rational::parse(bs)), std::move(v)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    try {
        return from_parts(dim, std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void SimpleFn::emit(std::ostream& out) const {
    for (const auto& [E, v] : parts_) {
        for (const auto& [a, b] : E.pieces()) {
            out << a.str() << " " << b.str() << "\t";
            for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].str();
            out << "\n";
        }
    }
}

Rational integrate_simple(const FAMeasure& mu, const SimpleFn& f) {
    if (f.dim() != 1) throw std::invalid_argument("integrate_simple: needs a real-valued (dim 1) function");
    Rational total(0);
    for (const auto& [E, v] : f.parts()) {
        if (v[0].is_negative()) throw std::invalid_argument("integrate_simple: negative value rejected");
        total += v[0] * mu.measure(E);
    }
    return total;
}

LrSimpleNorm lr_norm_simple(const FAMeasure& mu, const NormedSpace& space, const SimpleFn& f,
                            const std::optional<Rational>& r) {
    if (f.dim() != space.dim()) throw std::invalid_argument("lr_norm_simple: dimension mismatch");
    if (r && r->sign() <= 0) throw std::invalid_argument("lr_norm_simple: r must be positive");
    if (!r) {
        // essential maximum: largest norm among parts of positive measure
        Magnitude ess;
        for (const auto& [E, v] : f.parts())
            if (mu.measure(E).sign() > 0) ess = Magnitude::max(ess, space.norm(v));
        return {ess, ess};
    }
    Magnitude sum;
    for (const auto& [E, v] : f.parts()) sum = sum + space.norm(v).pow(*r) * Magnitude(mu.measure(E));
    return {sum, sum.pow(r->reciprocal())};
}

Rational sym_diff_metric(const FAMeasure& mu, const IntervalSet& A, const IntervalSet& B) {
    return mu.measure(set_symdiff(A, B));
}

std::vector<IntervalSet> chain_decompose(const FAMeasure& mu, const IntervalSet& E, const Rational& eps) {
    if (eps.sign() <= 0) throw std::invalid_argument("chain_decompose: eps must be positive");
    if (E.empty()) return {};
    Rational m = mu.measure(E);
    if (m < eps) return {E};
    // n equal-measure pieces with m/n < eps, i.e. the smallest n > m/eps
    Rational ratio = m / eps;
    mpz_class n_z = ratio.num() / ratio.den() + 1;
    if (!n_z.fits_ulong_p()) throw std::invalid_argument("chain_decompose: piece count overflow");
    unsigned long n = n_z.get_ui();
    Rational share = m / Rational(n_z);

    std::vector<Rational> cuts{Rational(0)};
    Rational acc(0);            // measure of E already swept
    Rational target = share;    // next quantile
    size_t piece_idx = 0;
    unsigned long l = 1;
    Rational pos(0);
    while (l < n) {
        if (piece_idx >= E.pieces().size())
            throw std::logic_error("chain_decompose: ran out of mass before the last quantile");
        const auto& [a, b] = E.pieces()[piece_idx];
        Rational lo = std::max(a, pos);
        Rational contrib = mu.measure_interval(lo, b);
        if (acc + contrib < target) {
            acc += contrib;
            ++piece_idx;
            pos = Rational(0);
            continue;
        }
        Rational t = mu.left_inverse(mu.cdf(lo) + (target - acc), lo, b);
        cuts.push_back(t);
        acc = target;
        target += share;
        pos = t;
        ++l;
    }
    cuts.push_back(Rational(1));
    std::vector<IntervalSet> out;
    out.reserve(n);
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        out.push_back(set_intersect(E, IntervalSet::interval(cuts[i], cuts[i + 1])));
    return out;
}

SimpleFn truncate_path(const SimpleFn& f, const Rational& t) {
    if (t.is_negative() || t > Rational(1)) throw std::invalid_argument("truncate_path: t outside [0, 1]");
    return f.restrict(IntervalSet::interval(Rational(0), t));
}

PathModulus path_modulus(const FAMeasure& mu, const NormedSpace& space, const SimpleFn& f,
                         const Rational& t1, const Rational& t2, const Rational& r) {
    if (t1.is_negative() || t2 > Rational(1) || t1 > t2)
        throw std::invalid_argument("path_modulus: need 0 <= t1 <= t2 <= 1");
    if (r.sign() <= 0) throw std::invalid_argument("path_modulus: r must be positive");
    SimpleFn diff = f.restrict(IntervalSet::interval(t1, t2));
    Magnitude diff_pow = lr_norm_simple(mu, space, diff, r).power_sum;
    Magnitude ess = lr_norm_simple(mu, space, f, std::nullopt).value;
    Magnitude bound = Magnitude(mu.measure_interval(t1, t2)) * ess.pow(r);
    bool ok = Magnitude::compare(diff_pow, bound).order != std::strong_ordering::greater;
    return {diff_pow, bound, ok};
}

bool ae_equal(const FAMeasure& mu, const SimpleFn& f, const SimpleFn& g) {
    return mu.measure(f.disagreement(g)).is_zero();
}

}  // namespace qmet
