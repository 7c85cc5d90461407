#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "plab/graph.hpp"

namespace plab {

// Riemann zeta, relative error <= 1e-9 (alpha > 1; DomainError otherwise).
double zeta(double alpha);

// Constants attached to an (n, alpha) pair. C normalizes the ideal degree
// law to Cn/k^alpha expected vertices of degree k; i1 is the smallest i with
// floor(Cn/i^alpha) <= 1; Cprime is the tail constant used by the
// degree-tail verifier, set to its smallest permitted value.
struct PlConstants {
    double alpha = 0;
    double C = 0;
    double Cprime = 0;
    double maxdeg_bound = 0;
    uint64_t i1 = 0;
    uint64_t n = 0;
};

PlConstants constants(uint64_t n, double alpha);

// Discrete MLE closed form: alpha_hat = 1 + n_tail / sum ln(deg/(xmin-1/2))
// over vertices of degree >= xmin. Throws DomainError on an empty tail.
double fit_alpha_mle(const DegreeHistogram& h, uint32_t xmin = 1);

struct Violation {
    std::string condition;
    uint64_t k = 0;
    double observed = 0;
    double allowed = 0;
};

struct MembershipReport {
    bool member = true;
    std::vector<Violation> violations;
};

// Degree-tail family test: for every k in [ceil((n/log2 n)^(1/alpha)), n-1]
// the number of vertices of degree >= k must be <= Cprime * n / k^(alpha-1).
// n <= 2 degenerates the range; trivially member.
MembershipReport verify_palpha(const DegreeHistogram& h, const PlConstants& c);

// Exact-degree-count family test, conditions over |V_i| = #vertices of
// degree i:
//   1. floor(Cn) - i1 - 1 <= |V_1| <= ceil(Cn)
//   2. floor(Cn/2^a) <= |V_2| <= ceil(Cn/2^a) + 1
//   3. |V_i| in {floor(Cn/i^a), ceil(Cn/i^a)} for 3 <= i <= n
//   4. |V_i| >= |V_{i+1}| for 2 <= i <= n-1
MembershipReport verify_proper(const DegreeHistogram& h, const PlConstants& c);

} // namespace plab
