#include "plab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace plab {

Graph Graph::from_edges(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> edges) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    std::vector<uint32_t> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.off_.assign(n + 1, 0);
    for (uint32_t v = 0; v < n; ++v) g.off_[v + 1] = g.off_[v] + deg[v];
    g.adj_.resize(2 * edges.size());
    std::vector<uint64_t> pos(g.off_.begin(), g.off_.end() - 1);
    for (auto [u, v] : edges) {
        g.adj_[pos[u]++] = v;
        g.adj_[pos[v]++] = u;
    }
    for (uint32_t v = 0; v < n; ++v) {
        auto nb = g.adj_.begin() + static_cast<int64_t>(g.off_[v]);
        auto ne = g.adj_.begin() + static_cast<int64_t>(g.off_[v + 1]);
        std::sort(nb, ne);
        g.maxdeg_ = std::max(g.maxdeg_, deg[v]);
    }
    return g;
}

bool Graph::adjacent(uint32_t a, uint32_t b) const {
    if (a == b) return false;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edge_list() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(m_);
    for (uint32_t u = 0; u < n_; ++u)
        for (uint32_t v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

LoadedGraph load_edge_list(std::istream& in) {
    std::unordered_map<uint64_t, uint32_t> remap;
    std::vector<uint64_t> external;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    auto intern = [&](uint64_t ext) {
        auto [it, fresh] = remap.try_emplace(ext, static_cast<uint32_t>(external.size()));
        if (fresh) external.push_back(ext);
        return it->second;
    };

    std::string line;
    uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        uint64_t a, b;
        if (!(ls >> a >> b)) throw ParseError("line " + std::to_string(lineno) + ": expected two integer tokens");
        std::string extra;
        if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        uint32_t ia = intern(a), ib = intern(b);
        if (ia != ib) edges.emplace_back(ia, ib);
    }
    LoadedGraph out;
    out.external_id = std::move(external);
    out.g = Graph::from_edges(static_cast<uint32_t>(out.external_id.size()), std::move(edges));
    return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return load_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_edge_list_file(const Graph& g, const std::string& path, const std::string& header) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    if (!header.empty()) out << "# " << header << "\n";
    for (auto [u, v] : g.edge_list()) out << u << " " << v << "\n";
    if (!out) throw Error("write failed for '" + path + "'");
}

DegreeHistogram degree_histogram(const Graph& g) {
    std::vector<uint32_t> deg(g.num_vertices());
    for (uint32_t v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
    return degree_histogram(deg);
}

DegreeHistogram degree_histogram(const std::vector<uint32_t>& degrees) {
    DegreeHistogram h;
    h.n = degrees.size();
    for (uint32_t d : degrees) h.max_degree = std::max(h.max_degree, d);
    h.count.assign(static_cast<size_t>(h.max_degree) + 1, 0);
    for (uint32_t d : degrees) ++h.count[d];
    if (h.n == 0) {
        h.count.clear();
        h.max_degree = 0;
    }
    return h;
}

bool is_graphical(const std::vector<uint32_t>& degrees) {
    const size_t n = degrees.size();
    uint64_t sum = 0;
    for (uint32_t d : degrees) {
        if (d >= n) return false;
        sum += d;
    }
    if (sum % 2 != 0) return false;

    std::vector<uint32_t> d(degrees);
    std::sort(d.begin(), d.end(), std::greater<>());
    std::vector<uint64_t> pref(n + 1, 0);
    for (size_t i = 0; i < n; ++i) pref[i + 1] = pref[i] + d[i];

    for (size_t k = 1; k <= n; ++k) {
        // first index (0-based) past k-1 whose entry is <= k
        auto split = std::lower_bound(d.begin() + static_cast<int64_t>(k), d.end(), k, std::greater<>());
        size_t j = static_cast<size_t>(split - d.begin());
        uint64_t rhs = k * (k - 1) + (j - k) * k + (pref[n] - pref[j]);
        if (pref[k] > rhs) return false;
    }
    return true;
}

Graph havel_hakimi(const std::vector<uint32_t>& degrees) {
    if (!is_graphical(degrees)) throw DomainError("degree sequence is not graphical");
    const uint32_t n = static_cast<uint32_t>(degrees.size());
    std::vector<uint32_t> res(degrees);
    // max-heap on (residual, then lower index first); entries go stale when
    // res[] moves under them
    using Entry = std::pair<uint32_t, uint32_t>; // (residual, index)
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    for (uint32_t v = 0; v < n; ++v)
        if (res[v] > 0) heap.emplace(res[v], v);

    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<Entry> partners;
    while (!heap.empty()) {
        auto [r, v] = heap.top();
        heap.pop();
        if (r != res[v]) continue; // stale
        partners.clear();
        while (partners.size() < r) {
            if (heap.empty()) throw Error("havel_hakimi: ran out of partners on a graphical sequence");
            auto [ru, u] = heap.top();
            heap.pop();
            if (ru != res[u] || u == v) continue;
            partners.emplace_back(ru, u);
        }
        for (auto [ru, u] : partners) {
            edges.emplace_back(v, u);
            res[u] = ru - 1;
            if (res[u] > 0) heap.emplace(res[u], u);
        }
        res[v] = 0;
    }
    return Graph::from_edges(n, std::move(edges));
}

bool is_induced_subgraph(const Graph& g, const Graph& h, const std::vector<uint32_t>& mapping) {
    const uint32_t nh = h.num_vertices();
    if (mapping.size() != nh) throw DomainError("mapping size differs from |V(h)|");
    constexpr uint32_t NONE = UINT32_MAX;
    std::vector<uint32_t> inv(g.num_vertices(), NONE);
    for (uint32_t a = 0; a < nh; ++a) {
        uint32_t w = mapping[a];
        if (w >= g.num_vertices()) throw DomainError("mapping target out of range");
        if (inv[w] != NONE) throw DomainError("mapping is not injective");
        inv[w] = a;
    }
    // every g-edge inside the image must be an h-edge...
    for (uint32_t a = 0; a < nh; ++a)
        for (uint32_t w : g.neighbors(mapping[a])) {
            uint32_t b = inv[w];
            if (b != NONE && !h.adjacent(a, b)) return false;
        }
    // ...and every h-edge must be realized
    for (uint32_t a = 0; a < nh; ++a)
        for (uint32_t b : h.neighbors(a))
            if (a < b && !g.adjacent(mapping[a], mapping[b])) return false;
    return true;
}

} // namespace plab
