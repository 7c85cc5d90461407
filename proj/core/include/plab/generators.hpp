#pragma once
#include <cstdint>
#include <random>
#include <vector>

#include "plab/graph.hpp"
#include "plab/labeling.hpp"
#include "plab/powerlaw.hpp"

namespace plab {

// uniform in [0, 1), 53-bit resolution
inline double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// uniform integer in [0, bound), rejection sampled; bound >= 1
inline uint64_t rand_below(std::mt19937_64& rng, uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Discrete power law P(k) = k^(-alpha)/zeta(alpha), k >= 1. Inverse-CDF
// draws: exact prefix table for small k, exponential doubling plus bisection
// on the complementary CDF beyond it.
class PowerLawSampler {
  public:
    explicit PowerLawSampler(double alpha);

    // smallest k with CDF(k) >= u, clamped to maxval
    uint64_t draw_at(double u, uint64_t maxval) const;

    uint64_t draw(std::mt19937_64& rng, uint64_t maxval) const {
        return draw_at(rand_unit(rng), maxval);
    }

    double cdf(uint64_t k) const;

  private:
    double alpha_;
    double zeta_;
    std::vector<double> cdf_; // cdf_[i] = CDF(i+1)
};

// n draws with entries clamped to n-1 (keeps the sequence inside the simple
// graph degree range)
std::vector<uint32_t> sample_powerlaw_degrees(uint32_t n, double alpha, uint64_t seed);

// Make a sequence graphical in place: odd sum -> increment the first minimum
// entry once; then while the Erdos-Gallai test fails, decrement the first
// maximum entry and re-check.
void repair_degree_sequence(std::vector<uint32_t>& degrees);

// sample + repair + Havel-Hakimi
Graph generate_powerlaw_graph(uint32_t n, double alpha, uint64_t seed);

struct AttachmentLog {
    uint32_t m = 0;
    uint32_t n0 = 0;
    Graph seed_graph;
    std::vector<std::vector<uint32_t>> attach; // per vertex n0..n-1, draw order
};

struct BaResult {
    Graph g;
    AttachmentLog log;
};

// Preferential attachment: each new vertex draws degree-proportional targets
// (redrawing duplicates) until m distinct ones are found. Default seed graph
// is the complete graph on m+1 vertices.
BaResult generate_ba(uint32_t n, uint32_t m, uint64_t seed, const Graph* seed_graph = nullptr);

struct BaLabelScheme {
    uint32_t n = 0;
    uint32_t idbits = 0;  // identifiers 1..n (internal index + 1)
    uint32_t m = 0;
    uint32_t n0 = 0;
    uint32_t cntbits = 0; // ceil(log2(n0+1))
};

struct BaLabelSet {
    BaLabelScheme scheme;
    std::vector<Label> labels;
};

// Online labels: [idbits id][m attachment ids] for inserted vertices;
// seed-graph vertices (id <= n0) store [idbits id][cntbits count][count
// ascending seed-neighbor ids]. Adjacency holds iff either list contains the
// other vertex's identifier.
BaLabelSet ba_online_labels(const AttachmentLog& log, uint32_t n);

bool ba_decode(const Label& a, const Label& b, const BaLabelScheme& s);

struct Embedding {
    Graph g;
    std::vector<uint32_t> h_to_g;  // injective map, H index -> G index
    std::vector<uint32_t> target;  // per G-vertex target degree (the V_i assignment)
    PlConstants consts;
};

// Builds an n-vertex graph that the exact-degree-count verifier accepts and
// that contains H induced, by filling degree targets in three phases (H's
// hosts first, then the bulk, then the degree-1 block). Requires |V(H)| =
// i1(n, alpha) and alpha > 2; throws Infeasible naming the failed inequality
// when n is too small for the phase arguments.
Embedding embed_lower_bound(const Graph& h, uint32_t n, double alpha, uint64_t seed);

} // namespace plab
