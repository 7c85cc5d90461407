#include "plab/powerlaw.hpp"

#include <algorithm>
#include <cmath>

namespace plab {

double zeta(double alpha) {
    if (!(alpha > 1.0)) throw DomainError("zeta requires alpha > 1");
    // partial sum plus Euler-Maclaurin tail; error ~ K^(-alpha-3), far below
    // the 1e-9 contract even as alpha -> 1
    constexpr int K = 32768;
    double s = 0;
    for (int i = K - 1; i >= 1; --i) s += std::pow(i, -alpha);
    double kd = K;
    s += std::pow(kd, 1.0 - alpha) / (alpha - 1.0);
    s += 0.5 * std::pow(kd, -alpha);
    s += alpha / 12.0 * std::pow(kd, -alpha - 1.0);
    return s;
}

PlConstants constants(uint64_t n, double alpha) {
    if (n < 1) throw DomainError("constants requires n >= 1");
    if (!(alpha > 1.0)) throw DomainError("constants requires alpha > 1");
    PlConstants c;
    c.n = n;
    c.alpha = alpha;
    c.C = 1.0 / zeta(alpha);
    double cn = c.C * static_cast<double>(n);
    uint64_t i1 = 1;
    while (std::floor(cn / std::pow(static_cast<double>(i1), alpha)) > 1.0) ++i1;
    c.i1 = i1;
    double root = std::pow(static_cast<double>(n), 1.0 / alpha);
    double base = c.C / (alpha - 1.0);
    c.Cprime = std::pow(base + static_cast<double>(i1) / root + 5.0, alpha) + base;
    c.maxdeg_bound = (base + 2.0) * root + static_cast<double>(i1) + 3.0;
    return c;
}

double fit_alpha_mle(const DegreeHistogram& h, uint32_t xmin) {
    if (xmin < 1) throw DomainError("fit_alpha_mle requires xmin >= 1");
    uint64_t tail = 0;
    double lsum = 0;
    double shift = static_cast<double>(xmin) - 0.5;
    for (uint32_t k = xmin; k <= h.max_degree; ++k) {
        uint64_t c = h.at(k);
        if (c == 0) continue;
        tail += c;
        lsum += static_cast<double>(c) * std::log(static_cast<double>(k) / shift);
    }
    if (tail == 0) throw DomainError("fit_alpha_mle: no vertices of degree >= xmin");
    return 1.0 + static_cast<double>(tail) / lsum;
}

MembershipReport verify_palpha(const DegreeHistogram& h, const PlConstants& c) {
    MembershipReport r;
    uint64_t n = h.n;
    if (n <= 2) return r; // degenerate range: member
    double lo = std::pow(static_cast<double>(n) / std::log2(static_cast<double>(n)), 1.0 / c.alpha);
    uint64_t k0 = static_cast<uint64_t>(std::ceil(lo));
    if (k0 < 1) k0 = 1;
    uint64_t kmax = std::min<uint64_t>(n - 1, h.max_degree);
    // suffix[k] = #vertices of degree >= k; zero beyond max_degree, where the
    // inequality is vacuous
    if (k0 <= kmax) {
        std::vector<uint64_t> suffix(h.max_degree + 2, 0);
        for (uint32_t k = h.max_degree + 1; k-- > 0;) suffix[k] = suffix[k + 1] + h.at(k);
        double cn = c.Cprime * static_cast<double>(n);
        for (uint64_t k = k0; k <= kmax; ++k) {
            double allowed = cn / std::pow(static_cast<double>(k), c.alpha - 1.0);
            double observed = static_cast<double>(suffix[k]);
            if (observed > allowed)
                r.violations.push_back({"tail", k, observed, allowed});
        }
    }
    r.member = r.violations.empty();
    return r;
}

MembershipReport verify_proper(const DegreeHistogram& h, const PlConstants& c) {
    MembershipReport r;
    uint64_t n = h.n;
    if (n == 0) return r; // vacuous
    double cn = c.C * static_cast<double>(n);

    auto v = [&](uint64_t i) { return h.at(static_cast<uint32_t>(std::min<uint64_t>(i, UINT32_MAX))); };

    double v1 = static_cast<double>(v(1));
    double lo1 = std::floor(cn) - static_cast<double>(c.i1) - 1.0;
    double hi1 = std::ceil(cn);
    if (v1 < lo1) r.violations.push_back({"cond1", 1, v1, lo1});
    if (v1 > hi1) r.violations.push_back({"cond1", 1, v1, hi1});

    if (n >= 2) {
        double q2 = cn / std::pow(2.0, c.alpha);
        double v2 = static_cast<double>(v(2));
        if (v2 < std::floor(q2)) r.violations.push_back({"cond2", 2, v2, std::floor(q2)});
        if (v2 > std::ceil(q2) + 1.0) r.violations.push_back({"cond2", 2, v2, std::ceil(q2) + 1.0});
    }

    // counts must vanish once Cn/i^alpha < 1, so scanning to where both the
    // histogram and the ideal law are exhausted covers all i up to n
    uint64_t izero = static_cast<uint64_t>(std::ceil(std::pow(cn, 1.0 / c.alpha))) + 1;
    uint64_t itop = std::min<uint64_t>(n, std::max<uint64_t>(h.max_degree, izero));
    for (uint64_t i = 3; i <= itop; ++i) {
        double q = cn / std::pow(static_cast<double>(i), c.alpha);
        double vi = static_cast<double>(v(i));
        if (vi < std::floor(q)) r.violations.push_back({"cond3", i, vi, std::floor(q)});
        if (vi > std::ceil(q)) r.violations.push_back({"cond3", i, vi, std::ceil(q)});
    }

    uint64_t mono_top = std::min<uint64_t>(n - 1, h.max_degree);
    for (uint64_t i = 2; i <= mono_top; ++i) {
        if (v(i) < v(i + 1))
            r.violations.push_back({"cond4", i, static_cast<double>(v(i)), static_cast<double>(v(i + 1))});
    }

    r.member = r.violations.empty();
    return r;
}

} // namespace plab
