#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "detlocus/degree_spec.hpp"

namespace detlocus {

// Binomial coefficient with the convention bin(a, n) = 0 whenever a < n.
// Exact big-integer arithmetic inside; the result must fit in int64.
int64_t binom(int64_t a, int64_t n);

struct FormulaReport {
    int64_t lambda = 0;
    std::map<int, int64_t> K;  // i -> K_i for i = 3..c
    int64_t conjectured_dim = 0;
    // per-term audit: the four signed sums of lambda, then one entry per K_i
    std::vector<int64_t> lambda_terms;  // {S_ab, S_ba, -S_aa, -S_bb, +1}
};

// Principal closed-form term of the conjectured stratum dimension.
int64_t lambda_term(const DegreeSpec& s);

// Correction term K_i (3 <= i <= c) from the general signed binomial sum;
// the i = 3, 4 closed forms are cross-validated against it in k3_closed /
// k4_closed below.
int64_t K_term(const DegreeSpec& s, int i);
int64_t k3_closed(const DegreeSpec& s);
int64_t k4_closed(const DegreeSpec& s);

FormulaReport conjectured_dim(const DegreeSpec& s);

// Uniform-degree stratum dimension t(t+c-1) bin(d+n,n) - t^2 - (t+c-1)^2 + 1.
int64_t uniform_dim(int t, int c, int n, int d);

// dim M_B(a_{t+c-2})_0 = sum_i bin(a_max-b_i+n,n) - sum_j bin(a_max-a_j+n,n)
// + K_c + 1, for c >= 3; breakdown returned for audit.
struct MbDim0Report {
    int64_t value = 0;
    int64_t first_sum = 0, second_sum = 0, k_c = 0;
};
MbDim0Report mb_dim0(const DegreeSpec& s);

// Right-hand side of the key Hom bound: sum_{j<=t+c-3} bin(a_j - a_{t+c-2} + n, n).
int64_t maineq_rhs(const DegreeSpec& s);
bool maineq_holds(const DegreeSpec& s, int64_t hom_value);

// Inductive dimension step: dim W(a) = dim W(a') + dim M_B(a_max)_0 - 1 - hom.
struct InductiveDim {
    int64_t value = 0;
    bool consistent = true;  // false when the solved value is blatantly off
};
InductiveDim inductive_dim(const DegreeSpec& s, int64_t dim_w_prime, int64_t mb_dim0_value,
                           int64_t hom_value);

}  // namespace detlocus
