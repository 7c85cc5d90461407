#pragma once
#include <cstdint>
#include <vector>

#include "plab/bits.hpp"
#include "plab/graph.hpp"

namespace plab {

// Fat payloads: BITSTRING stores a k-bit incidence vector over fat
// identifiers; CONCAT stores the fat-neighbor identifier list instead.
enum class PayloadMode { BITSTRING, CONCAT };

struct Label {
    std::vector<uint8_t> bytes;
    uint32_t nbits = 0;
};

struct LabelScheme {
    uint32_t n = 0;
    uint32_t idbits = 0;    // ceil(log2(n+1)): identifiers 1..n
    uint32_t threshold = 1; // minimum fat degree
    PayloadMode mode = PayloadMode::CONCAT;
    uint32_t fat_count = 0; // k
};

struct LabelSet {
    LabelScheme scheme;
    std::vector<Label> labels;   // by internal vertex index
    std::vector<uint32_t> id_of; // identifier per vertex
};

// ids 1..k to fat vertices (deg >= threshold) by decreasing degree then
// ascending index; k+1..n to thin vertices by ascending index
std::vector<uint32_t> assign_identifiers(const Graph& g, uint32_t threshold,
                                         uint32_t* fat_count_out = nullptr);

// Layout: [1 flag bit: 0=thin 1=fat][idbits-bit identifier][payload].
// Thin payload: all neighbor ids ascending, idbits each. Fat payload: see
// PayloadMode. Requires threshold >= 1.
LabelSet encode(const Graph& g, uint32_t threshold, PayloadMode mode);

// Adjacency from the two labels alone plus the shared scheme parameters.
// Throws MalformedLabel on structurally impossible input.
bool decode(const Label& a, const Label& b, const LabelScheme& s);

uint32_t sparse_threshold(uint64_t n, double c);            // ceil(sqrt(2cn/log2 n)), >= 1
uint32_t predicted_threshold(uint64_t n, double alpha);     // ceil((Cn/(alpha-1))^(1/alpha)), >= 1
uint32_t powerlaw_threshold(uint64_t n, double alpha, double cprime);

uint64_t sparse_label_bound(uint64_t n, double c);          // ceil(sqrt(2cn log2 n) + 2 log2 n + 1)
uint64_t powerlaw_label_bound(uint64_t n, double alpha, double cprime);
uint64_t bd_label_bound(uint64_t n, uint64_t maxdeg);       // ceil(maxdeg/2) * ceil(log2 n)
uint64_t aktz_label_bound(uint64_t n);                      // n/2 + 6

struct BoundsReport {
    uint64_t n = 0;
    uint64_t maxdeg = 0;
    double c = 0;
    double alpha = 0;
    double cprime = 0;
    uint64_t sparse_bound = 0;
    uint64_t powerlaw_bound = 0;
    uint64_t bd_bound = 0;
    uint64_t aktz_bound = 0;
};
BoundsReport theoretical_bounds(uint64_t n, uint64_t maxdeg, double c, double alpha, double cprime);

// Max label bit lengths per threshold t in [1, maxdeg+1], computed from the
// degree profile without materializing labels. A side with no vertices
// scores 0.
struct ThresholdSweep {
    std::vector<uint64_t> max_thin_bits; // index t-1
    std::vector<uint64_t> max_fat_bits;
    std::vector<uint64_t> max_bits;
    uint32_t empirical_threshold = 1; // smallest minimizer of max_bits
    uint64_t empirical_max_bits = 0;
};
ThresholdSweep sweep_thresholds(const Graph& g, PayloadMode mode);

// single-threshold analogue (threshold may exceed maxdeg+1: all thin)
uint64_t max_label_bits_at(const Graph& g, uint32_t threshold, PayloadMode mode);

} // namespace plab
