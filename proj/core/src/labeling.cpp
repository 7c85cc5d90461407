#include "plab/labeling.hpp"

#include <algorithm>
#include <cmath>

#include "plab/powerlaw.hpp"

namespace plab {

std::vector<uint32_t> assign_identifiers(const Graph& g, uint32_t threshold, uint32_t* fat_count_out) {
    if (threshold < 1) throw DomainError("threshold must be >= 1");
    const uint32_t n = g.num_vertices();
    std::vector<uint32_t> fat;
    for (uint32_t v = 0; v < n; ++v)
        if (g.degree(v) >= threshold) fat.push_back(v);
    std::sort(fat.begin(), fat.end(), [&](uint32_t a, uint32_t b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<uint32_t> id(n, 0);
    uint32_t next = 1;
    for (uint32_t v : fat) id[v] = next++;
    for (uint32_t v = 0; v < n; ++v)
        if (id[v] == 0) id[v] = next++;
    if (fat_count_out) *fat_count_out = static_cast<uint32_t>(fat.size());
    return id;
}

static void push_zeros(BitWriter& w, uint32_t count) {
    while (count > 64) {
        w.push_bits(0, 64);
        count -= 64;
    }
    w.push_bits(0, count);
}

LabelSet encode(const Graph& g, uint32_t threshold, PayloadMode mode) {
    const uint32_t n = g.num_vertices();
    LabelSet out;
    out.scheme.n = n;
    out.scheme.idbits = idbits_for(n);
    out.scheme.threshold = threshold;
    out.scheme.mode = mode;
    out.id_of = assign_identifiers(g, threshold, &out.scheme.fat_count);
    const uint32_t idbits = out.scheme.idbits;
    const uint32_t k = out.scheme.fat_count;

    out.labels.resize(n);
    std::vector<uint32_t> ids;
    for (uint32_t v = 0; v < n; ++v) {
        bool fat = g.degree(v) >= threshold;
        BitWriter w;
        w.push_bit(fat);
        w.push_bits(out.id_of[v], idbits);
        ids.clear();
        if (!fat) {
            for (uint32_t u : g.neighbors(v)) ids.push_back(out.id_of[u]);
        } else {
            for (uint32_t u : g.neighbors(v))
                if (out.id_of[u] <= k) ids.push_back(out.id_of[u]); // fat neighbors only
        }
        std::sort(ids.begin(), ids.end());
        if (fat && mode == PayloadMode::BITSTRING) {
            uint32_t done = 0; // incidence vector over fat ids 1..k
            for (uint32_t i : ids) {
                push_zeros(w, i - 1 - done);
                w.push_bit(true);
                done = i;
            }
            push_zeros(w, k - done);
        } else {
            for (uint32_t i : ids) w.push_bits(i, idbits);
        }
        out.labels[v].nbits = w.size_bits();
        out.labels[v].bytes = w.take();
    }
    return out;
}

namespace {

struct Parsed {
    bool fat;
    uint32_t id;
    uint32_t payload_off;
    uint32_t payload_bits;
};

Parsed parse_header(const Label& l, const LabelScheme& s) {
    if (l.nbits < 1 + s.idbits) throw MalformedLabel("label shorter than flag + identifier");
    Parsed p;
    p.fat = get_bit(l.bytes, 0);
    p.id = static_cast<uint32_t>(get_bits(l.bytes, 1, s.idbits));
    if (p.id < 1 || p.id > s.n) throw MalformedLabel("identifier out of range");
    p.payload_off = 1 + s.idbits;
    p.payload_bits = l.nbits - p.payload_off;
    return p;
}

// binary search an ascending idbits-wide list for `want`
bool list_contains(const Label& l, const Parsed& p, uint32_t idbits, uint32_t want) {
    if (p.payload_bits % idbits != 0) throw MalformedLabel("list payload not a multiple of idbits");
    uint32_t cnt = p.payload_bits / idbits;
    uint32_t lo = 0, hi = cnt;
    while (lo < hi) {
        uint32_t mid = (lo + hi) / 2;
        uint64_t got = get_bits(l.bytes, p.payload_off + mid * idbits, idbits);
        if (got == want) return true;
        if (got < want)
            lo = mid + 1;
        else
            hi = mid;
    }
    return false;
}

} // namespace

bool decode(const Label& a, const Label& b, const LabelScheme& s) {
    if (s.idbits == 0) throw MalformedLabel("scheme with zero idbits");
    Parsed pa = parse_header(a, s);
    Parsed pb = parse_header(b, s);
    if (!pa.fat) return list_contains(a, pa, s.idbits, pb.id);
    if (!pb.fat) return list_contains(b, pb, s.idbits, pa.id);
    if (s.mode == PayloadMode::BITSTRING) {
        if (pa.payload_bits != pb.payload_bits)
            throw MalformedLabel("fat bit strings of differing length");
        if (pa.id > pb.payload_bits || pb.id > pa.payload_bits)
            throw MalformedLabel("fat identifier beyond bit-string length");
        return get_bit(a.bytes, pa.payload_off + pb.id - 1);
    }
    // CONCAT: an edge between fat vertices is recorded in both lists
    const Label* l = &a;
    const Parsed* p = &pa;
    uint32_t want = pb.id;
    if (pb.payload_bits < pa.payload_bits) {
        l = &b;
        p = &pb;
        want = pa.id;
    }
    return list_contains(*l, *p, s.idbits, want);
}

uint32_t sparse_threshold(uint64_t n, double c) {
    if (n < 3) throw DomainError("sparse_threshold requires n >= 3");
    if (!(c > 0)) throw DomainError("sparse_threshold requires c > 0");
    double x = std::sqrt(2.0 * c * static_cast<double>(n) / std::log2(static_cast<double>(n)));
    return static_cast<uint32_t>(std::max(1.0, std::ceil(x)));
}

uint32_t predicted_threshold(uint64_t n, double alpha) {
    if (n < 2) throw DomainError("predicted_threshold requires n >= 2");
    if (!(alpha > 1.0)) throw DomainError("predicted_threshold requires alpha > 1");
    double C = 1.0 / zeta(alpha);
    double x = std::pow(C * static_cast<double>(n) / (alpha - 1.0), 1.0 / alpha);
    return static_cast<uint32_t>(std::max(1.0, std::ceil(x)));
}

uint32_t powerlaw_threshold(uint64_t n, double alpha, double cprime) {
    if (n < 3) throw DomainError("powerlaw_threshold requires n >= 3");
    if (!(alpha > 1.0)) throw DomainError("powerlaw_threshold requires alpha > 1");
    if (!(cprime > 0)) throw DomainError("powerlaw_threshold requires cprime > 0");
    double l = std::log2(static_cast<double>(n));
    double a = std::ceil(std::pow(cprime * static_cast<double>(n) / l, 1.0 / alpha));
    double b = std::ceil(std::pow(static_cast<double>(n) / l, 1.0 / alpha));
    return static_cast<uint32_t>(std::max(1.0, std::max(a, b)));
}

uint64_t sparse_label_bound(uint64_t n, double c) {
    if (n < 3) throw DomainError("sparse_label_bound requires n >= 3");
    double l = std::log2(static_cast<double>(n));
    return static_cast<uint64_t>(std::ceil(std::sqrt(2.0 * c * static_cast<double>(n) * l) + 2.0 * l + 1.0));
}

uint64_t powerlaw_label_bound(uint64_t n, double alpha, double cprime) {
    if (n < 3) throw DomainError("powerlaw_label_bound requires n >= 3");
    if (!(alpha > 1.0)) throw DomainError("powerlaw_label_bound requires alpha > 1");
    double l = std::log2(static_cast<double>(n));
    double v = std::pow(cprime * static_cast<double>(n), 1.0 / alpha) * std::pow(l, 1.0 - 1.0 / alpha);
    return static_cast<uint64_t>(std::ceil(v + 2.0 * l + 1.0));
}

uint64_t bd_label_bound(uint64_t n, uint64_t maxdeg) {
    uint64_t logceil = n <= 1 ? 0 : std::bit_width(n - 1);
    return (maxdeg + 1) / 2 * logceil;
}

uint64_t aktz_label_bound(uint64_t n) { return n / 2 + 6; }

BoundsReport theoretical_bounds(uint64_t n, uint64_t maxdeg, double c, double alpha, double cprime) {
    if (n < 3) throw DomainError("theoretical_bounds requires n >= 3");
    BoundsReport r;
    r.n = n;
    r.maxdeg = maxdeg;
    r.c = c;
    r.alpha = alpha;
    r.cprime = cprime;
    r.sparse_bound = sparse_label_bound(n, c);
    r.powerlaw_bound = powerlaw_label_bound(n, alpha, cprime);
    r.bd_bound = bd_label_bound(n, maxdeg);
    r.aktz_bound = aktz_label_bound(n);
    return r;
}

namespace {

// max fat-neighbor count per threshold, by joining vertices into the fat set
// as t sweeps downward from maxdeg to 1; O(n + m + maxdeg)
std::vector<uint64_t> concat_fat_profile(const Graph& g) {
    const uint32_t D = g.max_degree();
    std::vector<std::vector<uint32_t>> by_deg(D + 1);
    for (uint32_t v = 0; v < g.num_vertices(); ++v) by_deg[g.degree(v)].push_back(v);
    std::vector<uint32_t> fd(g.num_vertices(), 0);
    std::vector<uint64_t> F(D + 2, 0); // F[t], t in [1, D+1]
    uint64_t fmax = 0;
    for (uint32_t t = D; t >= 1; --t) {
        for (uint32_t v : by_deg[t]) {
            uint32_t direct = 0;
            for (uint32_t u : g.neighbors(v)) {
                uint32_t du = g.degree(u);
                if (du >= t) ++direct;
                if (du > t) {
                    ++fd[u];
                    fmax = std::max<uint64_t>(fmax, fd[u]);
                }
            }
            fd[v] = direct;
            fmax = std::max<uint64_t>(fmax, direct);
        }
        F[t] = fmax;
        if (t == 1) break;
    }
    return F;
}

} // namespace

ThresholdSweep sweep_thresholds(const Graph& g, PayloadMode mode) {
    const uint32_t n = g.num_vertices();
    const uint32_t D = g.max_degree();
    const uint64_t idbits = idbits_for(n);
    std::vector<uint64_t> cnt(D + 1, 0);
    for (uint32_t v = 0; v < n; ++v) ++cnt[g.degree(v)];
    std::vector<uint64_t> suffix(D + 2, 0); // k(t) = #vertices with deg >= t
    for (uint32_t d = D + 1; d-- > 0;) suffix[d] = suffix[d + 1] + cnt[d];

    std::vector<uint64_t> F;
    if (mode == PayloadMode::CONCAT) F = concat_fat_profile(g);

    ThresholdSweep s;
    s.max_thin_bits.resize(D + 1);
    s.max_fat_bits.resize(D + 1);
    s.max_bits.resize(D + 1);
    bool thin_any = false;
    uint64_t thin_best = 0;
    for (uint32_t t = 1; t <= D + 1; ++t) {
        if (cnt[t - 1] > 0) {
            thin_any = true;
            thin_best = t - 1;
        }
        uint64_t mt = thin_any ? 1 + idbits * (1 + thin_best) : 0;
        uint64_t k = suffix[t];
        uint64_t mf = 0;
        if (k > 0)
            mf = mode == PayloadMode::BITSTRING ? 1 + idbits + k : 1 + idbits + idbits * F[t];
        s.max_thin_bits[t - 1] = mt;
        s.max_fat_bits[t - 1] = mf;
        s.max_bits[t - 1] = std::max(mt, mf);
    }
    s.empirical_threshold = 1;
    s.empirical_max_bits = s.max_bits[0];
    for (uint32_t t = 2; t <= D + 1; ++t)
        if (s.max_bits[t - 1] < s.empirical_max_bits) {
            s.empirical_max_bits = s.max_bits[t - 1];
            s.empirical_threshold = t;
        }
    return s;
}

uint64_t max_label_bits_at(const Graph& g, uint32_t threshold, PayloadMode mode) {
    if (threshold < 1) throw DomainError("threshold must be >= 1");
    const uint32_t n = g.num_vertices();
    const uint64_t idbits = idbits_for(n);
    bool thin_any = false, fat_any = false;
    uint64_t thin_best = 0, k = 0;
    for (uint32_t v = 0; v < n; ++v) {
        uint32_t d = g.degree(v);
        if (d >= threshold) {
            fat_any = true;
            ++k;
        } else {
            thin_any = true;
            thin_best = std::max<uint64_t>(thin_best, d);
        }
    }
    uint64_t mt = thin_any ? 1 + idbits * (1 + thin_best) : 0;
    uint64_t mf = 0;
    if (fat_any) {
        if (mode == PayloadMode::BITSTRING) {
            mf = 1 + idbits + k;
        } else {
            uint64_t fbest = 0;
            for (uint32_t v = 0; v < n; ++v) {
                if (g.degree(v) < threshold) continue;
                uint64_t fd = 0;
                for (uint32_t u : g.neighbors(v))
                    if (g.degree(u) >= threshold) ++fd;
                fbest = std::max(fbest, fd);
            }
            mf = 1 + idbits + idbits * fbest;
        }
    }
    return std::max(mt, mf);
}

} // namespace plab
