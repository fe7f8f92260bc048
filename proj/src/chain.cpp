#include "qmet/chain.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qmet/absolute_value.hpp"
#include "qmet/metric_checks.hpp"

namespace qmet {

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;  // keep the smaller index as root for deterministic blocks
        return true;
    }
};

std::vector<size_t> label_indices(const DistMatrix& D, const std::vector<std::string>& labels,
                                  const char* who) {
    std::vector<size_t> idx;
    idx.reserve(labels.size());
    std::vector<bool> seen(D.size(), false);
    for (const auto& l : labels) {
        size_t i = D.index_of(l);
        if (seen[i]) throw std::invalid_argument(std::string(who) + ": repeated label '" + l + "'");
        seen[i] = true;
        idx.push_back(i);
    }
    return idx;
}

Partition partition_from_uf(const DistMatrix& D, UnionFind& uf, Magnitude eta) {
    const size_t n = D.size();
    std::map<size_t, std::vector<std::string>> by_root;
    for (size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(D.labels()[i]);
    Partition p;
    p.eta = std::move(eta);
    for (auto& [root, members] : by_root) p.blocks.push_back(std::move(members));
    return p;
}

// Ascending edge pass; merge weights are exactly the critical thresholds,
// and assigning the merge weight across newly joined components yields the
// subdominant ultrametric.
struct MergeResult {
    std::vector<std::vector<Magnitude>> u;
    std::vector<Magnitude> merge_weights;  // ascending, deduplicated
};

MergeResult run_merges(const DistMatrix& D) {
    const size_t n = D.size();
    struct Edge {
        size_t i, j;
    };
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
    std::stable_sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
        return D.at(a.i, a.j) < D.at(b.i, b.j);
    });

    std::vector<std::vector<size_t>> members(n);
    for (size_t i = 0; i < n; ++i) members[i] = {i};
    UnionFind uf(n);
    MergeResult out;
    out.u.assign(n, std::vector<Magnitude>(n));
    for (const auto& e : edges) {
        size_t ra = uf.find(e.i), rb = uf.find(e.j);
        if (ra == rb) continue;
        const Magnitude& w = D.at(e.i, e.j);
        for (size_t a : members[ra])
            for (size_t b : members[rb]) {
                out.u[a][b] = w;
                out.u[b][a] = w;
            }
        if (out.merge_weights.empty() || !(out.merge_weights.back() == w)) out.merge_weights.push_back(w);
        uf.unite(ra, rb);
        size_t rnew = uf.find(ra);
        size_t rold = rnew == ra ? rb : ra;
        members[rnew].insert(members[rnew].end(), members[rold].begin(), members[rold].end());
        members[rold].clear();
    }
    return out;
}

}  // namespace

void Partition::emit(std::ostream& out) const {
    for (const auto& block : blocks) {
        for (size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
        out << "\n";
    }
}

std::vector<std::vector<std::string>> Partition::parse_blocks(std::istream& in) {
    std::vector<std::vector<std::string>> blocks;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> block;
        std::string tok;
        while (ls >> tok) block.push_back(tok);
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return blocks;
}

Partition eta_partition(const DistMatrix& D, const Magnitude& eta) {
    if (!(eta > Magnitude())) throw std::invalid_argument("eta_partition: eta must be positive");
    const size_t n = D.size();
    UnionFind uf(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (D.at(i, j) < eta) uf.unite(i, j);
    return partition_from_uf(D, uf, eta);
}

bool is_eta_separated(const DistMatrix& D, const std::vector<std::string>& A,
                      const std::vector<std::string>& B, const Magnitude& eta) {
    if (!(eta > Magnitude())) throw std::invalid_argument("is_eta_separated: eta must be positive");
    auto ia = label_indices(D, A, "is_eta_separated");
    auto ib = label_indices(D, B, "is_eta_separated");
    for (size_t a : ia)
        for (size_t b : ib)
            if (a == b) throw std::invalid_argument("is_eta_separated: sets overlap at '" + D.labels()[a] + "'");
    for (size_t a : ia)
        for (size_t b : ib)
            if (D.at(a, b) < eta) return false;
    return true;
}

bool is_eta_connected(const DistMatrix& D, const std::vector<std::string>& S, const Magnitude& eta) {
    if (S.empty()) throw std::invalid_argument("is_eta_connected: S must be nonempty");
    if (!(eta > Magnitude())) throw std::invalid_argument("is_eta_connected: eta must be positive");
    auto idx = label_indices(D, S, "is_eta_connected");
    const size_t m = idx.size();

    // characterization 1: one block under union-find
    UnionFind uf(m);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b)
            if (D.at(idx[a], idx[b]) < eta) uf.unite(a, b);
    size_t root0 = uf.find(0);
    bool one_block = true;
    for (size_t a = 1; a < m; ++a)
        if (uf.find(a) != root0) {
            one_block = false;
            break;
        }

    // characterization 2: the chain-reachable set of S[0] either covers S or
    // splits it into two eta-separated halves
    std::vector<bool> reach(m, false);
    std::vector<size_t> stack{0};
    reach[0] = true;
    while (!stack.empty()) {
        size_t a = stack.back();
        stack.pop_back();
        for (size_t b = 0; b < m; ++b)
            if (!reach[b] && D.at(idx[a], idx[b]) < eta) {
                reach[b] = true;
                stack.push_back(b);
            }
    }
    bool covers = std::all_of(reach.begin(), reach.end(), [](bool r) { return r; });
    if (!covers) {
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b)
                if (reach[a] && !reach[b] && D.at(idx[a], idx[b]) < eta)
                    throw std::logic_error("is_eta_connected: split certificate is not separated");
    }
    if (one_block != covers) throw std::logic_error("is_eta_connected: characterizations disagree");
    return one_block;
}

DistMatrix subdominant_ultrametric(const DistMatrix& D) {
    if (D.size() == 1) return D;
    return DistMatrix(D.labels(), run_merges(D).u);
}

std::vector<Magnitude> critical_thresholds(const DistMatrix& D) {
    if (D.size() == 1) return {};
    return run_merges(D).merge_weights;
}

ChainLength chain_a_length(const DistMatrix& D, const Chain& c, const std::optional<Rational>& a) {
    if (c.points.empty()) throw std::invalid_argument("chain_a_length: empty chain");
    if (a && a->sign() <= 0) throw std::invalid_argument("chain_a_length: a must be positive");
    std::vector<size_t> idx;
    idx.reserve(c.points.size());
    for (const auto& l : c.points) idx.push_back(D.index_of(l));
    if (idx.size() == 1) return {Magnitude(), Magnitude()};
    if (!a) {
        Magnitude mx;
        for (size_t t = 0; t + 1 < idx.size(); ++t) mx = Magnitude::max(mx, D.at(idx[t], idx[t + 1]));
        return {mx, mx};
    }
    Magnitude sum;
    for (size_t t = 0; t + 1 < idx.size(); ++t) sum = sum + D.at(idx[t], idx[t + 1]).pow(*a);
    return {sum, sum.pow(a->reciprocal())};
}

namespace {

struct PathCandidate {
    Magnitude cost;
    std::vector<size_t> path;
    bool valid = false;
};

// cost, then hops, then label-sequence order
bool better(const PathCandidate& a, const PathCandidate& b, const DistMatrix& D) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    auto c = Magnitude::compare(a.cost, b.cost).order;
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.path.size() != b.path.size()) return a.path.size() < b.path.size();
    for (size_t t = 0; t < a.path.size(); ++t) {
        const auto& la = D.labels()[a.path[t]];
        const auto& lb = D.labels()[b.path[t]];
        if (la != lb) return la < lb;
    }
    return false;
}

}  // namespace

MinLength min_a_length(const DistMatrix& D, const std::string& x, const std::string& y, const Rational& a) {
    if (a.sign() <= 0) throw std::invalid_argument("min_a_length: a must be positive");
    const size_t n = D.size();
    const size_t src = D.index_of(x), dst = D.index_of(y);
    std::vector<std::vector<Magnitude>> W(n, std::vector<Magnitude>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) W[i][j] = D.at(i, j).pow(a);

    std::vector<PathCandidate> best(n);
    best[src] = {Magnitude(), {src}, true};
    // positive edge powers make optima simple paths, so relaxation settles
    // within n rounds; the extra rounds absorb tie-break refinements
    bool changed = true;
    for (size_t round = 0; round < 2 * n + 2 && changed; ++round) {
        changed = false;
        for (size_t u = 0; u < n; ++u) {
            if (!best[u].valid) continue;
            for (size_t v = 0; v < n; ++v) {
                if (v == u) continue;
                PathCandidate cand;
                cand.valid = true;
                cand.cost = best[u].cost + W[u][v];
                cand.path = best[u].path;
                cand.path.push_back(v);
                if (better(cand, best[v], D)) {
                    best[v] = std::move(cand);
                    changed = true;
                }
            }
        }
    }
    if (changed) throw std::logic_error("min_a_length: relaxation failed to settle");
    MinLength out;
    out.power_cost = best[dst].cost;
    out.value = best[dst].cost.pow(a.reciprocal());
    for (size_t i : best[dst].path) out.witness.points.push_back(D.labels()[i]);
    return out;
}

ZeroDimProfile zero_dim_profile(const DistMatrix& D, const std::string& x, const Magnitude& r) {
    if (!(r > Magnitude())) throw std::invalid_argument("zero_dim_profile: r must be positive");
    D.index_of(x);  // validate
    auto in_ball = [&](const std::vector<std::string>& block) {
        auto b = ball(D, x, r, /*closed=*/false);
        for (const auto& l : block)
            if (std::find(b.begin(), b.end(), l) == b.end()) return false;
        return true;
    };
    auto block_of = [&](const Partition& p) -> const std::vector<std::string>& {
        for (const auto& blk : p.blocks)
            if (std::find(blk.begin(), blk.end(), x) != blk.end()) return blk;
        throw std::logic_error("zero_dim_profile: label missing from its partition");
    };

    auto thresholds = critical_thresholds(D);
    // top interval: one block for any eta above the largest threshold
    if (thresholds.empty()) {
        // single point: the whole space is {x}
        return {ZeroDimProfile::Kind::Unbounded, Magnitude()};
    }
    {
        Magnitude above = thresholds.back() + thresholds.back();
        Partition p = eta_partition(D, above);
        if (p.blocks.size() == 1 && in_ball(p.blocks[0])) return {ZeroDimProfile::Kind::Unbounded, Magnitude()};
    }
    // interval (t_{k-1}, t_k] has representative eta = t_k and cap t_k
    for (size_t k = thresholds.size(); k-- > 0;) {
        Partition p = eta_partition(D, thresholds[k]);
        if (in_ball(block_of(p))) return {ZeroDimProfile::Kind::Finite, thresholds[k]};
    }
    return {ZeroDimProfile::Kind::Absent, Magnitude()};
}

namespace {

// smallest integer power of base at or above the exact positive magnitude t
Magnitude quantize_value(const Magnitude& t, const Rational& base) {
    if (t.is_zero()) return Magnitude();
    long k;
    if (t.is_rational()) {
        k = ceil_log(t.rational(), base);
    } else {
        double guess = magnitude_log(t) / log_rational(base);
        k = static_cast<long>(std::ceil(guess - 1e-9));
        while (Magnitude(base.pow_int(k)) < t) ++k;
        while (k > -4096 && !(Magnitude(base.pow_int(k - 1)) < t)) --k;
    }
    return Magnitude(base.pow_int(k));
}

}  // namespace

DistMatrix quantize_metric(const DistMatrix& D, const Rational& base) {
    if (base <= Rational(1)) throw std::invalid_argument("quantize_metric: base must exceed 1");
    if (!verify_ultrametric(D).empty())
        throw std::invalid_argument("quantize_metric: input must be an ultrametric");
    const size_t n = D.size();
    std::vector<std::vector<Magnitude>> d(n, std::vector<Magnitude>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            d[i][j] = quantize_value(D.at(i, j), base);
            d[j][i] = d[i][j];
        }
    return DistMatrix(D.labels(), std::move(d));
}

}  // namespace qmet
