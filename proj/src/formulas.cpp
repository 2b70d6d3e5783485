#include "detlocus/formulas.hpp"

#include <functional>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace detlocus {

using boost::multiprecision::cpp_int;

int64_t binom(int64_t a, int64_t n) {
    if (n < 0) throw ValidationError("binom: n must be >= 0");
    if (a < n) return 0;
    cpp_int num = 1;
    for (int64_t k = 1; k <= n; ++k) {
        num *= (a - n + k);
        num /= k;
    }
    if (num > std::numeric_limits<int64_t>::max()) {
        throw std::overflow_error("binom: value exceeds int64 range");
    }
    return static_cast<int64_t>(num);
}

int64_t lambda_term(const DegreeSpec& s) {
    int64_t s_ab = 0, s_ba = 0, s_aa = 0, s_bb = 0;
    for (int ai : s.a) {
        for (int bj : s.b) {
            s_ab += binom(static_cast<int64_t>(ai) - bj + s.n, s.n);
            s_ba += binom(static_cast<int64_t>(bj) - ai + s.n, s.n);
        }
    }
    for (int ai : s.a)
        for (int aj : s.a) s_aa += binom(static_cast<int64_t>(ai) - aj + s.n, s.n);
    for (int bi : s.b)
        for (int bj : s.b) s_bb += binom(static_cast<int64_t>(bi) - bj + s.n, s.n);
    return s_ab + s_ba - s_aa - s_bb + 1;
}

namespace {

// subsets {i_1 < ... < i_r} of {0..max_idx}
void for_each_subset(int max_idx, int r, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& fn, int start = 0) {
    if (static_cast<int>(cur.size()) == r) {
        fn(cur);
        return;
    }
    for (int v = start; v <= max_idx; ++v) {
        cur.push_back(v);
        for_each_subset(max_idx, r, cur, fn, v + 1);
        cur.pop_back();
    }
}

// weakly increasing tuples (j_1 <= ... <= j_s) from {1..t}
void for_each_multiset(int t, int s, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& fn, int start = 1) {
    if (static_cast<int>(cur.size()) == s) {
        fn(cur);
        return;
    }
    for (int v = start; v <= t; ++v) {
        cur.push_back(v);
        for_each_multiset(t, s, cur, fn, v);
        cur.pop_back();
    }
}

}  // namespace

int64_t K_term(const DegreeSpec& s, int k) {
    if (k < 3 || k > s.c) throw ValidationError("K_term: index must satisfy 3 <= i <= c");
    const int i = k - 3;
    const int64_t h = h_invariant(s, k);
    int64_t total = 0;
    for (int r = 0; r <= i; ++r) {
        const int sb = i - r;
        const int64_t sign = ((i - r) % 2 == 0) ? 1 : -1;
        std::vector<int> asel, bsel;
        for_each_subset(s.t + i, r, asel, [&](const std::vector<int>& av) {
            int64_t asum = 0;
            for (int idx : av) asum += s.a[idx];
            for_each_multiset(s.t, sb, bsel, [&](const std::vector<int>& bv) {
                int64_t bsum = 0;
                for (int idx : bv) bsum += s.b[idx - 1];
                total += sign * binom(h + asum + bsum, s.n);
            });
        });
    }
    return total;
}

int64_t k3_closed(const DegreeSpec& s) {
    if (s.c < 3) throw ValidationError("k3_closed requires c >= 3");
    return binom(h_invariant(s, 3), s.n);
}

int64_t k4_closed(const DegreeSpec& s) {
    if (s.c < 4) throw ValidationError("k4_closed requires c >= 4");
    const int64_t h = h_invariant(s, 4);
    int64_t total = 0;
    for (int j = 0; j <= s.t + 1; ++j) total += binom(h + s.a[j], s.n);
    for (int i = 1; i <= s.t; ++i) total -= binom(h + s.b[i - 1], s.n);
    return total;
}

FormulaReport conjectured_dim(const DegreeSpec& s) {
    FormulaReport rep;
    int64_t s_ab = 0, s_ba = 0, s_aa = 0, s_bb = 0;
    for (int ai : s.a) {
        for (int bj : s.b) {
            s_ab += binom(static_cast<int64_t>(ai) - bj + s.n, s.n);
            s_ba += binom(static_cast<int64_t>(bj) - ai + s.n, s.n);
        }
    }
    for (int ai : s.a)
        for (int aj : s.a) s_aa += binom(static_cast<int64_t>(ai) - aj + s.n, s.n);
    for (int bi : s.b)
        for (int bj : s.b) s_bb += binom(static_cast<int64_t>(bi) - bj + s.n, s.n);
    rep.lambda = s_ab + s_ba - s_aa - s_bb + 1;
    rep.lambda_terms = {s_ab, s_ba, -s_aa, -s_bb, 1};
    rep.conjectured_dim = rep.lambda;
    for (int i = 3; i <= s.c; ++i) {
        rep.K[i] = K_term(s, i);
        rep.conjectured_dim += rep.K[i];
    }
    return rep;
}

int64_t uniform_dim(int t, int c, int n, int d) {
    if (d < 1) throw ValidationError("uniform_dim requires d >= 1");
    return static_cast<int64_t>(t) * (t + c - 1) * binom(static_cast<int64_t>(d) + n, n) -
           static_cast<int64_t>(t) * t - static_cast<int64_t>(t + c - 1) * (t + c - 1) + 1;
}

MbDim0Report mb_dim0(const DegreeSpec& s) {
    if (s.c < 3) throw ValidationError("mb_dim0 requires c >= 3");
    MbDim0Report rep;
    const int64_t amax = s.a[s.t + s.c - 2];
    for (int i = 0; i < s.t; ++i) rep.first_sum += binom(amax - s.b[i] + s.n, s.n);
    for (int j = 0; j <= s.t + s.c - 2; ++j) rep.second_sum += binom(amax - s.a[j] + s.n, s.n);
    rep.k_c = K_term(s, s.c);
    rep.value = rep.first_sum - rep.second_sum + rep.k_c + 1;
    return rep;
}

int64_t maineq_rhs(const DegreeSpec& s) {
    if (s.c < 3) throw ValidationError("maineq_rhs requires c >= 3");
    const int64_t amax = s.a[s.t + s.c - 2];
    int64_t total = 0;
    for (int j = 0; j <= s.t + s.c - 3; ++j) total += binom(s.a[j] - amax + s.n, s.n);
    return total;
}

bool maineq_holds(const DegreeSpec& s, int64_t hom_value) {
    if (hom_value < 0) throw ValidationError("maineq_holds: hom value must be >= 0");
    return hom_value <= maineq_rhs(s);
}

InductiveDim inductive_dim(const DegreeSpec& s, int64_t dim_w_prime, int64_t mb_dim0_value,
                           int64_t hom_value) {
    if (s.c < 3) throw ValidationError("inductive_dim requires c >= 3 (no deleted column)");
    InductiveDim out;
    out.value = dim_w_prime + mb_dim0_value - 1 - hom_value;
    out.consistent = out.value >= 0 && mb_dim0_value - 1 - hom_value >= 0;
    return out;
}

}  // namespace detlocus
