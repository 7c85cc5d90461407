#include "plab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace plab {

namespace {

// sum_{i>=j} i^(-alpha), Euler-Maclaurin form (j >= 1)
double power_tail(double j, double alpha) {
    return std::pow(j, 1.0 - alpha) / (alpha - 1.0) + 0.5 * std::pow(j, -alpha) +
           alpha / 12.0 * std::pow(j, -alpha - 1.0);
}

constexpr uint64_t kCdfTable = 1024;

} // namespace

PowerLawSampler::PowerLawSampler(double alpha) : alpha_(alpha), zeta_(zeta(alpha)) {
    cdf_.resize(kCdfTable);
    double acc = 0;
    for (uint64_t k = 1; k <= kCdfTable; ++k) {
        acc += std::pow(static_cast<double>(k), -alpha_);
        cdf_[k - 1] = acc / zeta_;
    }
}

double PowerLawSampler::cdf(uint64_t k) const {
    if (k == 0) return 0;
    if (k <= kCdfTable) return cdf_[k - 1];
    return 1.0 - power_tail(static_cast<double>(k) + 1.0, alpha_) / zeta_;
}

uint64_t PowerLawSampler::draw_at(double u, uint64_t maxval) const {
    if (maxval < 1) return maxval;
    if (cdf(1) >= u) return 1;
    if (maxval == 1) return 1;
    uint64_t lo = 1, hi = 1;
    while (hi < maxval) {
        hi = std::min(hi * 2, maxval);
        if (cdf(hi) >= u) break;
        lo = hi;
    }
    if (cdf(hi) < u) return maxval; // mass beyond the cap collapses onto it
    while (hi - lo > 1) {
        uint64_t mid = lo + (hi - lo) / 2;
        if (cdf(mid) >= u)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::vector<uint32_t> sample_powerlaw_degrees(uint32_t n, double alpha, uint64_t seed) {
    if (n < 1) throw DomainError("sample_powerlaw_degrees requires n >= 1");
    PowerLawSampler sampler(alpha);
    std::mt19937_64 rng(seed);
    std::vector<uint32_t> d(n);
    uint64_t maxval = n - 1;
    for (auto& x : d) x = static_cast<uint32_t>(sampler.draw(rng, maxval));
    return d;
}

void repair_degree_sequence(std::vector<uint32_t>& degrees) {
    if (degrees.empty()) return;
    uint64_t sum = std::accumulate(degrees.begin(), degrees.end(), uint64_t{0});
    if (sum % 2 != 0) ++*std::min_element(degrees.begin(), degrees.end());
    while (!is_graphical(degrees)) --*std::max_element(degrees.begin(), degrees.end());
}

Graph generate_powerlaw_graph(uint32_t n, double alpha, uint64_t seed) {
    if (n < 2) throw DomainError("generate_powerlaw_graph requires n >= 2");
    auto d = sample_powerlaw_degrees(n, alpha, seed);
    repair_degree_sequence(d);
    return havel_hakimi(d);
}

BaResult generate_ba(uint32_t n, uint32_t m, uint64_t seed, const Graph* seed_graph) {
    if (m < 1) throw DomainError("generate_ba requires m >= 1");
    Graph seedg;
    if (seed_graph) {
        seedg = *seed_graph;
    } else {
        std::vector<std::pair<uint32_t, uint32_t>> es;
        for (uint32_t i = 0; i + 1 <= m; ++i)
            for (uint32_t j = i + 1; j <= m; ++j) es.emplace_back(i, j);
        seedg = Graph::from_edges(m + 1, std::move(es));
    }
    const uint32_t n0 = seedg.num_vertices();
    if (n0 < m) throw DomainError("seed graph needs at least m vertices");
    if (seedg.num_edges() < 1) throw DomainError("seed graph needs at least one edge");
    uint32_t attachable = 0;
    for (uint32_t v = 0; v < n0; ++v)
        if (seedg.degree(v) > 0) ++attachable;
    if (attachable < m) throw DomainError("seed graph has fewer than m attachable vertices");
    if (n <= n0) throw DomainError("n must exceed the seed graph size");

    std::mt19937_64 rng(seed);
    auto edges = seedg.edge_list();
    std::vector<uint32_t> stubs;
    stubs.reserve(2 * (seedg.num_edges() + static_cast<uint64_t>(m) * (n - n0)));
    for (auto [u, v] : edges) {
        stubs.push_back(u);
        stubs.push_back(v);
    }

    BaResult r;
    r.log.m = m;
    r.log.n0 = n0;
    r.log.seed_graph = seedg;
    r.log.attach.reserve(n - n0);
    std::vector<uint32_t> targets;
    for (uint32_t v = n0; v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            uint32_t t = stubs[rand_below(rng, stubs.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (uint32_t t : targets) {
            edges.emplace_back(t, v);
            stubs.push_back(t);
        }
        stubs.insert(stubs.end(), m, v);
        r.log.attach.push_back(targets);
    }
    r.g = Graph::from_edges(n, std::move(edges));
    return r;
}

BaLabelSet ba_online_labels(const AttachmentLog& log, uint32_t n) {
    if (log.attach.size() != n - log.n0) throw DomainError("attachment log does not cover n vertices");
    BaLabelSet out;
    out.scheme.n = n;
    out.scheme.m = log.m;
    out.scheme.n0 = log.n0;
    out.scheme.idbits = idbits_for(n);
    out.scheme.cntbits = idbits_for(log.n0);
    out.labels.resize(n);
    for (uint32_t v = 0; v < n; ++v) {
        BitWriter w;
        w.push_bits(v + 1, out.scheme.idbits);
        if (v < log.n0) {
            auto nb = log.seed_graph.neighbors(v);
            w.push_bits(nb.size(), out.scheme.cntbits);
            for (uint32_t u : nb) w.push_bits(u + 1, out.scheme.idbits);
        } else {
            if (log.attach[v - log.n0].size() != log.m)
                throw DomainError("attachment list with wrong arity");
            for (uint32_t u : log.attach[v - log.n0]) w.push_bits(u + 1, out.scheme.idbits);
        }
        out.labels[v].nbits = w.size_bits();
        out.labels[v].bytes = w.take();
    }
    return out;
}

namespace {

struct BaParsed {
    uint32_t id;
    uint32_t list_off;
    uint32_t count;
};

BaParsed ba_parse(const Label& l, const BaLabelScheme& s) {
    if (l.nbits < s.idbits) throw MalformedLabel("label shorter than an identifier");
    BaParsed p;
    p.id = static_cast<uint32_t>(get_bits(l.bytes, 0, s.idbits));
    if (p.id < 1 || p.id > s.n) throw MalformedLabel("identifier out of range");
    if (p.id <= s.n0) {
        if (l.nbits < s.idbits + s.cntbits) throw MalformedLabel("seed label missing count field");
        p.count = static_cast<uint32_t>(get_bits(l.bytes, s.idbits, s.cntbits));
        p.list_off = s.idbits + s.cntbits;
        if (p.count >= s.n0 || l.nbits != p.list_off + p.count * s.idbits)
            throw MalformedLabel("seed label length inconsistent with its count");
    } else {
        p.count = s.m;
        p.list_off = s.idbits;
        if (l.nbits != s.idbits * (s.m + 1)) throw MalformedLabel("label length != (m+1)*idbits");
    }
    return p;
}

bool ba_list_contains(const Label& l, const BaParsed& p, uint32_t idbits, uint32_t want) {
    for (uint32_t i = 0; i < p.count; ++i)
        if (get_bits(l.bytes, p.list_off + i * idbits, idbits) == want) return true;
    return false;
}

} // namespace

bool ba_decode(const Label& a, const Label& b, const BaLabelScheme& s) {
    BaParsed pa = ba_parse(a, s);
    BaParsed pb = ba_parse(b, s);
    return ba_list_contains(a, pa, s.idbits, pb.id) || ba_list_contains(b, pb, s.idbits, pa.id);
}

namespace {

// lazy max-heap keyed (residual desc, index asc); entries staled by res[]
struct ResHeap {
    using Entry = std::pair<uint32_t, uint32_t>;
    struct Cmp {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.first != b.first) return a.first < b.first;
            return a.second > b.second;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, Cmp> q;

    void push(const std::vector<uint32_t>& res, uint32_t v) {
        if (res[v] > 0) q.emplace(res[v], v);
    }
    bool pop(const std::vector<uint32_t>& res, uint32_t& out) {
        while (!q.empty()) {
            auto [r, v] = q.top();
            q.pop();
            if (r != res[v]) continue;
            out = v;
            return true;
        }
        return false;
    }
};

} // namespace

Embedding embed_lower_bound(const Graph& h, uint32_t n, double alpha, uint64_t seed) {
    if (!(alpha > 2.0)) throw DomainError("embed_lower_bound requires alpha > 2");
    PlConstants consts = constants(n, alpha);
    const uint64_t i1 = consts.i1;
    if (h.num_vertices() != i1)
        throw DomainError("H must have exactly i1 = " + std::to_string(i1) + " vertices");

    const double cn = consts.C * static_cast<double>(n);
    int64_t s1 = static_cast<int64_t>(std::floor(cn)) - static_cast<int64_t>(i1);
    if (s1 < 0) throw Infeasible("floor(C*n) - i1 >= 0 violated: n too small");

    // block sizes and per-vertex target degrees: V_1 first, then V_2..V_{i1-1},
    // then the size-1 sets
    std::vector<uint32_t> target(n, 0);
    uint64_t cursor = 0;
    for (uint64_t j = 0; j < static_cast<uint64_t>(s1); ++j) target[cursor++] = 1;
    for (uint64_t i = 2; i + 1 <= i1; ++i) {
        uint64_t si = static_cast<uint64_t>(std::floor(cn / std::pow(static_cast<double>(i), alpha)));
        if (cursor + si > n) throw Infeasible("sum of block sizes exceeds n");
        for (uint64_t j = 0; j < si; ++j) target[cursor++] = static_cast<uint32_t>(i);
    }
    const uint64_t nprime = cursor;
    const uint64_t singles = n - nprime;
    if (singles < i1) throw Infeasible("n - n' >= i1 violated: too few size-1 sets");
    for (uint64_t j = 0; j < singles; ++j) target[cursor++] = static_cast<uint32_t>(i1 + j);

    // H occupies i1 seeded distinct size-1 sets (ascending positions)
    std::mt19937_64 rng(seed);
    std::vector<uint32_t> pool(singles);
    std::iota(pool.begin(), pool.end(), 0u);
    for (uint64_t t = 0; t < i1; ++t) {
        uint64_t r = t + rand_below(rng, singles - t);
        std::swap(pool[t], pool[r]);
    }
    std::vector<uint32_t> hosts(pool.begin(), pool.begin() + static_cast<int64_t>(i1));
    std::sort(hosts.begin(), hosts.end());
    std::vector<uint32_t> h_to_g(i1);
    for (uint64_t j = 0; j < i1; ++j) h_to_g[j] = static_cast<uint32_t>(nprime + hosts[j]);

    std::vector<uint32_t> deg(n, 0);
    std::vector<std::vector<uint32_t>> adj(n);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    auto is_adjacent = [&](uint32_t a, uint32_t b) {
        const auto& la = adj[a].size() <= adj[b].size() ? adj[a] : adj[b];
        uint32_t want = adj[a].size() <= adj[b].size() ? b : a;
        return std::find(la.begin(), la.end(), want) != la.end();
    };
    auto add_edge = [&](uint32_t a, uint32_t b) {
        edges.emplace_back(a, b);
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++deg[a];
        ++deg[b];
    };

    for (uint32_t a = 0; a < h.num_vertices(); ++a)
        for (uint32_t b : h.neighbors(a))
            if (a < b) add_edge(h_to_g[a], h_to_g[b]);

    std::vector<uint32_t> res(n);
    for (uint32_t v = 0; v < n; ++v) {
        if (deg[v] > target[v]) throw Error("embed: H already exceeds a host target");
        res[v] = target[v] - deg[v];
    }

    std::vector<bool> in_vh(n, false);
    for (uint32_t g : h_to_g) in_vh[g] = true;

    // Phase 1: hosts x V' until every host reaches its target
    ResHeap hheap, vheap;
    for (uint32_t g : h_to_g) hheap.push(res, g);
    for (uint32_t v = static_cast<uint32_t>(s1); v < n; ++v)
        if (!in_vh[v]) vheap.push(res, v);

    std::vector<uint32_t> stash;
    uint32_t hv;
    while (hheap.pop(res, hv)) {
        stash.clear();
        uint32_t u = UINT32_MAX;
        uint32_t cand;
        while (vheap.pop(res, cand)) {
            if (is_adjacent(hv, cand)) {
                stash.push_back(cand);
                continue;
            }
            u = cand;
            break;
        }
        for (uint32_t s : stash) vheap.push(res, s);
        if (u == UINT32_MAX)
            throw Infeasible("phase 1: demand of H hosts exceeds V' capacity");
        add_edge(hv, u);
        --res[hv];
        --res[u];
        hheap.push(res, hv);
        vheap.push(res, u);
    }

    // Phase 2: V' x V'; vertices that cannot pair become leftovers
    ResHeap pheap;
    for (uint32_t v = static_cast<uint32_t>(s1); v < n; ++v)
        if (!in_vh[v]) pheap.push(res, v);
    std::vector<uint32_t> leftovers;
    uint32_t u;
    while (pheap.pop(res, u)) {
        stash.clear();
        uint32_t partner = UINT32_MAX;
        uint32_t cand;
        while (pheap.pop(res, cand)) {
            if (is_adjacent(u, cand)) {
                stash.push_back(cand);
                continue;
            }
            partner = cand;
            break;
        }
        for (uint32_t s : stash) pheap.push(res, s);
        if (partner == UINT32_MAX) {
            leftovers.push_back(u);
            continue;
        }
        add_edge(u, partner);
        --res[u];
        --res[partner];
        pheap.push(res, u);
        pheap.push(res, partner);
    }
    // wire leftovers to degree-0 vertices of V_1 (each becomes processed)
    uint32_t v1cursor = 0;
    for (uint32_t w : leftovers) {
        while (res[w] > 0) {
            while (v1cursor < static_cast<uint32_t>(s1) && deg[v1cursor] != 0) ++v1cursor;
            if (v1cursor >= static_cast<uint32_t>(s1))
                throw Infeasible("phase 2: leftover demand exceeds V_1 capacity");
            add_edge(w, v1cursor);
            --res[w];
            res[v1cursor] = 0;
        }
    }

    // Phase 3: pair the remaining degree-0 vertices of V_1; an odd last one
    // takes a second edge into a processed V_1 vertex, which moves to V_2
    std::vector<uint32_t> zero;
    for (uint32_t v = 0; v < static_cast<uint32_t>(s1); ++v)
        if (deg[v] == 0) zero.push_back(v);
    for (size_t i = 0; i + 1 < zero.size(); i += 2) {
        add_edge(zero[i], zero[i + 1]);
        res[zero[i]] = 0;
        res[zero[i + 1]] = 0;
    }
    if (zero.size() % 2 == 1) {
        uint32_t w = zero.back();
        uint32_t wprime = UINT32_MAX;
        for (uint32_t v = 0; v < static_cast<uint32_t>(s1); ++v)
            if (v != w && deg[v] == 1) {
                wprime = v;
                break;
            }
        if (wprime == UINT32_MAX)
            throw Infeasible("phase 3: no degree-1 partner available in V_1");
        add_edge(w, wprime);
        res[w] = 0;
        target[wprime] = 2;
    }

    Embedding em;
    em.consts = consts;
    em.h_to_g = std::move(h_to_g);
    em.g = Graph::from_edges(n, std::move(edges));
    em.target = std::move(target);
    for (uint32_t v = 0; v < n; ++v)
        if (em.g.degree(v) != em.target[v])
            throw Error("embed: vertex missed its target degree");
    if (!is_induced_subgraph(em.g, h, em.h_to_g))
        throw Error("embed: H not induced in the result");
    auto hist = degree_histogram(em.g);
    if (!verify_proper(hist, consts).member)
        throw Error("embed: result rejected by the exact-degree-count verifier");
    if (!verify_palpha(hist, consts).member)
        throw Error("embed: result rejected by the degree-tail verifier");
    return em;
}

} // namespace plab
