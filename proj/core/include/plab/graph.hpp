#pragma once
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plab/errors.hpp"

namespace plab {

// Simple undirected graph in CSR form. Neighbor lists are strictly ascending;
// no loops, no parallel edges.
class Graph {
  public:
    Graph() = default;

    // Normalizes the edge set: drops self-loops, collapses duplicates
    // (including reversed copies). Endpoints must be < n.
    static Graph from_edges(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> edges);

    uint32_t num_vertices() const { return n_; }
    uint64_t num_edges() const { return m_; }
    uint32_t degree(uint32_t v) const { return static_cast<uint32_t>(off_[v + 1] - off_[v]); }
    uint32_t max_degree() const { return maxdeg_; }

    std::span<const uint32_t> neighbors(uint32_t v) const {
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }
    bool adjacent(uint32_t a, uint32_t b) const;

    // edges as (u,v) with u < v, lexicographic order
    std::vector<std::pair<uint32_t, uint32_t>> edge_list() const;

  private:
    uint32_t n_ = 0;
    uint64_t m_ = 0;
    uint32_t maxdeg_ = 0;
    std::vector<uint64_t> off_ = {0};
    std::vector<uint32_t> adj_;
};

// Graph plus the external ids seen in the input file (internal index ->
// external id, first-seen order).
struct LoadedGraph {
    Graph g;
    std::vector<uint64_t> external_id;
};

// Text edge lists: two integer tokens per line, '#' starts a comment line,
// blank lines ignored. Self-loops register the vertex but add no edge.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

void write_edge_list_file(const Graph& g, const std::string& path, const std::string& header);

struct DegreeHistogram {
    uint64_t n = 0;
    uint32_t max_degree = 0;
    std::vector<uint64_t> count; // count[k] = #vertices of degree k, k in [0, max_degree]

    uint64_t at(uint32_t k) const { return k < count.size() ? count[k] : 0; }
};

DegreeHistogram degree_histogram(const Graph& g);
DegreeHistogram degree_histogram(const std::vector<uint32_t>& degrees);

// Erdos-Gallai: true iff some simple graph realizes d.
bool is_graphical(const std::vector<uint32_t>& degrees);

// Greedy realization: repeatedly satisfy the highest-residual vertex,
// connecting it to the next-highest residual vertices (ties: lower index
// first). Throws DomainError if the sequence is not graphical.
Graph havel_hakimi(const std::vector<uint32_t>& degrees);

// True iff mapping embeds h into g as an induced subgraph (edges and
// non-edges both preserved). mapping[i] = image of h-vertex i; must be
// injective and in range, else DomainError.
bool is_induced_subgraph(const Graph& g, const Graph& h, const std::vector<uint32_t>& mapping);

} // namespace plab
