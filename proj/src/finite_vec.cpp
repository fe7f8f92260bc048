#include "qmet/finite_vec.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "qmet/errors.hpp"

namespace qmet {

FiniteVec FiniteVec::from_entries(const NormedSpace& space, std::map<std::string, Vec> entries) {
    FiniteVec f;
    for (auto& [k, v] : entries) {
        space.check_dim(v);
        if (k.empty()) throw std::invalid_argument("finite vec: empty key");
        if (!is_zero_vec(v)) f.entries_.emplace(k, std::move(v));
    }
    return f;
}

std::vector<std::string> FiniteVec::support() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

Vec FiniteVec::at(const NormedSpace& space, const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? space.zero() : it->second;
}

FiniteVec FiniteVec::add(const NormedSpace& space, const FiniteVec& o) const {
    std::map<std::string, Vec> out = entries_;
    for (const auto& [k, v] : o.entries_) {
        auto it = out.find(k);
        if (it == out.end()) {
            out.emplace(k, v);
        } else {
            it->second = space.add(it->second, v);
        }
    }
    return from_entries(space, std::move(out));
}

FiniteVec FiniteVec::sub(const NormedSpace& space, const FiniteVec& o) const {
    return add(space, o.scale(space, Rational(-1)));
}

FiniteVec FiniteVec::scale(const NormedSpace& space, const Rational& t) const {
    std::map<std::string, Vec> out;
    for (const auto& [k, v] : entries_) out.emplace(k, space.scale(t, v));
    return from_entries(space, std::move(out));
}

FiniteVec FiniteVec::parse(const NormedSpace& space, std::istream& in) {
    std::map<std::string, Vec> entries;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("finite vec: missing TAB on line " + std::to_string(lineno));
        std::string key = line.substr(0, tab);
        if (key.empty()) throw ParseError("finite vec: empty key on line " + std::to_string(lineno));
        std::istringstream cs(line.substr(tab + 1));
        Vec v;
        std::string tok;
        while (cs >> tok) v.push_back(Rational::parse(tok));
        if (v.size() != space.dim())
            throw ParseError("finite vec: expected " + std::to_string(space.dim()) + " coordinates on line " +
                             std::to_string(lineno));
        if (entries.count(key)) throw ParseError("finite vec: duplicate key '" + key + "'");
        entries.emplace(std::move(key), std::move(v));
    }
    return from_entries(space, std::move(entries));
}

void FiniteVec::emit(std::ostream& out) const {
    for (const auto& [k, v] : entries_) {
        out << k << "\t";
        for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].str();
        out << "\n";
    }
}

LrNorm lr_norm(const NormedSpace& space, const FiniteVec& f, const std::optional<Rational>& r) {
    if (r && r->sign() <= 0) throw std::invalid_argument("lr_norm: r must be positive");
    if (!r) {
        Magnitude mx;
        for (const auto& [k, v] : f.entries()) mx = Magnitude::max(mx, space.norm(v));
        return {mx, mx};
    }
    Magnitude sum;
    for (const auto& [k, v] : f.entries()) sum = sum + space.norm(v).pow(*r);
    return {sum, sum.pow(r->reciprocal())};
}

TriangleRegime triangle_regime(const NormedSpace& space, const Rational& r) {
    if (r.sign() <= 0) throw std::invalid_argument("triangle_regime: r must be positive");
    auto q = space.q_exponent();
    if (!q) return TriangleRegime::UltranormAllR;
    return r <= *q ? TriangleRegime::RNorm : TriangleRegime::QNorm;
}

const char* regime_name(TriangleRegime regime) {
    switch (regime) {
        case TriangleRegime::RNorm: return "r-norm";
        case TriangleRegime::QNorm: return "q-norm";
        case TriangleRegime::UltranormAllR: return "ultranorm-all-r";
    }
    return "?";
}

std::vector<std::string> tail_support(const NormedSpace& space, const FiniteVec& f, const Rational& eps,
                                      const Rational& r) {
    if (eps.sign() <= 0) throw std::invalid_argument("tail_support: eps must be positive");
    if (r.sign() <= 0) throw std::invalid_argument("tail_support: r must be positive");
    struct Item {
        std::string key;
        Magnitude pw;
    };
    std::vector<Item> items;
    for (const auto& [k, v] : f.entries()) items.push_back({k, space.norm(v).pow(r)});
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        auto c = Magnitude::compare(a.pw, b.pw).order;
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
        return a.key < b.key;
    });
    // suffix[i] = sum of pw over items[i..); the set is the shortest prefix
    // whose suffix tail drops below eps
    std::vector<Magnitude> suffix(items.size() + 1);
    for (size_t i = items.size(); i-- > 0;) suffix[i] = suffix[i + 1] + items[i].pw;
    const Magnitude bound{eps};
    size_t take = 0;
    while (!(suffix[take] < bound)) ++take;  // terminates: suffix.back() == 0 < eps
    std::vector<std::string> out;
    for (size_t i = 0; i < take; ++i) out.push_back(items[i].key);
    return out;
}

std::vector<FiniteVec> erdos_chain(const NormedSpace& space, const std::vector<std::string>& keys,
                                   const Vec& v_eta, const Rational& r) {
    if (r.sign() <= 0) throw std::invalid_argument("erdos_chain: r must be positive");
    space.check_dim(v_eta);
    if (is_zero_vec(v_eta)) throw std::invalid_argument("erdos_chain: v_eta must be nonzero");
    std::set<std::string> distinct(keys.begin(), keys.end());
    if (distinct.size() != keys.size()) throw std::invalid_argument("erdos_chain: keys must be distinct");
    std::vector<FiniteVec> chain;
    chain.reserve(keys.size() + 1);
    std::map<std::string, Vec> acc;
    chain.push_back(FiniteVec());
    for (const auto& k : keys) {
        acc.emplace(k, v_eta);
        chain.push_back(FiniteVec::from_entries(space, acc));
    }
    return chain;
}

UnboundednessCertificate unboundedness_certificate(const NormedSpace& space, const Rational& eta,
                                                   const Rational& target, const Rational& r) {
    if (eta.sign() <= 0) throw std::invalid_argument("unboundedness_certificate: eta must be positive");
    if (target.sign() <= 0) throw std::invalid_argument("unboundedness_certificate: target must be positive");
    if (r.sign() <= 0) throw std::invalid_argument("unboundedness_certificate: r must be positive");
    const AbsoluteValue& s = space.scalar();
    if (s.is_trivial())
        throw std::domain_error("unboundedness_certificate: trivial absolute value has no small elements");
    if (!s.is_ultrametric())
        throw std::domain_error("unboundedness_certificate: scalar must be ultrametric");

    // v_eta = (p^k, 0, ..., 0) with the smallest k >= 1 putting N under eta
    const long p = s.prime();
    const Magnitude bound{eta};
    long k = 1;
    auto step_mag = [&](long kk) { return Magnitude::prime_power(p, Rational(-kk) * s.exponent()); };
    while (!(step_mag(k) < bound)) ++k;
    Magnitude N = step_mag(k);

    // minimal n with n * N^r >= target^r, decided exactly:
    // n * p^(-k e r) >= target^r  <=>  n^b * p^(-k e a) >= target^a for r = a/b
    Rational pexp = Rational(-k) * s.exponent() * r;
    auto reaches = [&](unsigned long n) {
        return compare_scaled_powers(Rational(mpz_class(n), mpz_class(1)), Rational(p), pexp, Rational(1),
                                     target, r) != std::strong_ordering::less;
    };
    double est = std::exp(r.to_double() * (std::log(target.to_double()) - magnitude_log(N)));
    if (est > 1e18)
        throw std::invalid_argument("unboundedness_certificate: certified length would exceed 1e18 steps");
    unsigned long n = est < 1 ? 1 : static_cast<unsigned long>(std::ceil(est - 1e-9));
    if (n == 0) n = 1;
    while (!reaches(n)) ++n;
    while (n > 1 && reaches(n - 1)) --n;

    UnboundednessCertificate cert;
    cert.v_eta = space.zero();
    cert.v_eta[0] = Rational(p).pow_int(k);
    cert.step_norm = N;
    cert.length = n;
    cert.final_power_sum = Magnitude(Rational(mpz_class(n), mpz_class(1))) * N.pow(r);
    return cert;
}

std::vector<FiniteVec> certificate_prefix(const NormedSpace& space, const UnboundednessCertificate& cert,
                                          const std::function<std::string(unsigned long)>& key_at,
                                          unsigned long count, const Rational& r) {
    if (count > cert.length) count = cert.length;
    std::vector<std::string> keys;
    keys.reserve(count);
    for (unsigned long i = 0; i < count; ++i) keys.push_back(key_at(i));
    return erdos_chain(space, keys, cert.v_eta, r);
}

bool cube_membership(const NormedSpace& space, const FiniteVec& f,
                     const std::map<std::string, Rational>& bounds, const Rational& r) {
    if (r.sign() <= 0) throw std::invalid_argument("cube_membership: r must be positive");
    for (const auto& [k, b] : bounds)
        if (b.is_negative()) throw std::invalid_argument("cube_membership: bounds must be nonnegative");
    for (const auto& [k, v] : f.entries()) {
        auto it = bounds.find(k);
        if (it == bounds.end()) return false;
        if (space.norm(v) > Magnitude(it->second)) return false;
    }
    return true;
}

SphereTail sphere_tail_bound(const NormedSpace& space, const FiniteVec& f, const FiniteVec& g,
                             const Rational& t, const Rational& eps, const Rational& r) {
    if (t.sign() <= 0) throw std::invalid_argument("sphere_tail_bound: t must be positive");
    if (eps.sign() <= 0) throw std::invalid_argument("sphere_tail_bound: eps must be positive");
    if (r.sign() <= 0) throw std::invalid_argument("sphere_tail_bound: r must be positive");

    const Magnitude t_pow = Magnitude(t).pow(r);
    const Magnitude f_pow = lr_norm(space, f, r).power_sum;
    if (!(f_pow == t_pow))
        throw SphereTailError(SphereTailError::Which::NormFNotT, "sphere_tail_bound: ||f||_r != t");
    const Magnitude g_pow = lr_norm(space, g, r).power_sum;
    if (Magnitude::compare(g_pow, t_pow).order == std::strong_ordering::greater)
        throw SphereTailError(SphereTailError::Which::NormGExceedsT, "sphere_tail_bound: ||g||_r > t");

    auto head_keys = tail_support(space, f, eps, r);
    std::set<std::string> A(head_keys.begin(), head_keys.end());
    Magnitude head, tail;
    for (const auto& [k, v] : g.entries()) {
        Magnitude pw = space.norm(v).pow(r);
        if (A.count(k)) {
            head = head + pw;
        } else {
            tail = tail + pw;
        }
    }
    // head > t^r - 2 eps, compared as head + 2 eps > t^r to stay in
    // nonnegative arithmetic
    const Magnitude two_eps{eps + eps};
    if (!(Magnitude::compare(head + two_eps, t_pow).order == std::strong_ordering::greater))
        throw SphereTailError(SphereTailError::Which::HeadTooSmall,
                              "sphere_tail_bound: head sum of g over A(eps) is not above t^r - 2 eps");
    bool ok = tail < two_eps;
    return {tail, ok};
}

}  // namespace qmet
