#include "detlocus/complexes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "detlocus/formulas.hpp"

namespace detlocus {

namespace {

void subsets(int max_idx, int r, std::vector<int>& cur,
             const std::function<void(const std::vector<int>&)>& fn, int start = 0) {
    if (static_cast<int>(cur.size()) == r) {
        fn(cur);
        return;
    }
    for (int v = start; v <= max_idx; ++v) {
        cur.push_back(v);
        subsets(max_idx, r, cur, fn, v + 1);
        cur.pop_back();
    }
}

void multisets(int t, int s, std::vector<int>& cur,
               const std::function<void(const std::vector<int>&)>& fn, int start = 0) {
    if (static_cast<int>(cur.size()) == s) {
        fn(cur);
        return;
    }
    for (int v = start; v < t; ++v) {
        cur.push_back(v);
        multisets(t, s, cur, fn, v);
        cur.pop_back();
    }
}

std::vector<int64_t> tensor_step_twists(const DegreeSpec& s, int wedge, int sym) {
    const int64_t bsum = std::accumulate(s.b.begin(), s.b.end(), int64_t{0});
    std::vector<int64_t> out;
    std::vector<int> asel, bsel;
    subsets(s.num_cols() - 1, wedge, asel, [&](const std::vector<int>& av) {
        int64_t asum = 0;
        for (int idx : av) asum += s.a[idx];
        multisets(s.t, sym, bsel, [&](const std::vector<int>& bv) {
            int64_t bs = 0;
            for (int idx : bv) bs += s.b[idx];
            out.push_back(-asum + bs + bsum);
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

GradedFreeComplex en_complex(const DegreeSpec& s) {
    GradedFreeComplex c{GradedFreeComplex::Kind::EagonNorthcott, s, {}};
    c.steps.push_back({0});
    for (int k = 1; k <= s.c; ++k) c.steps.push_back(tensor_step_twists(s, s.t + k - 1, k - 1));
    return c;
}

GradedFreeComplex br_complex(const DegreeSpec& s) {
    GradedFreeComplex c{GradedFreeComplex::Kind::BuchsbaumRim, s, {}};
    std::vector<int64_t> f_star, g_star;
    for (int bi : s.b) f_star.push_back(-bi);
    for (int aj : s.a) g_star.push_back(-aj);
    std::sort(f_star.begin(), f_star.end());
    std::sort(g_star.begin(), g_star.end());
    c.steps.push_back(f_star);
    c.steps.push_back(g_star);
    for (int k = 2; k <= s.c; ++k) c.steps.push_back(tensor_step_twists(s, s.t + k - 1, k - 2));
    return c;
}

bool complex_is_minimal(const GradedFreeComplex& c) {
    for (size_t k = 0; k + 1 < c.steps.size(); ++k) {
        std::set<int64_t> cur(c.steps[k].begin(), c.steps[k].end());
        for (int64_t e : c.steps[k + 1]) {
            if (cur.count(e)) return false;
        }
    }
    return true;
}

int64_t max_twist_magnitude(const GradedFreeComplex& c) {
    int64_t m = 0;
    for (const auto& step : c.steps) {
        for (int64_t e : step) m = std::max(m, std::abs(e));
    }
    return m;
}

int64_t flag_max_twist_magnitude(const DegreeSpec& s) {
    int64_t m = 0;
    DegreeSpec cur = s;
    while (true) {
        m = std::max(m, max_twist_magnitude(en_complex(cur)));
        m = std::max(m, max_twist_magnitude(br_complex(cur)));
        if (cur.c < 3) break;
        cur = cur.delete_last_column();
    }
    return m;
}

namespace {

int64_t alternating_sum(const GradedFreeComplex& c, int64_t v) {
    int64_t total = 0;
    int64_t sign = 1;
    for (const auto& step : c.steps) {
        for (int64_t e : step) total += sign * binom(v + e + c.spec.n, c.spec.n);
        sign = -sign;
    }
    return total;
}

}  // namespace

int64_t hilbert_function(const DegreeSpec& s, int64_t v) {
    if (v < 0) return 0;
    return alternating_sum(en_complex(s), v);
}

int64_t module_hilbert_function(const DegreeSpec& s, int64_t v) {
    return alternating_sum(br_complex(s), v);
}

HilbertData hilbert_data(const DegreeSpec& s) {
    if (s.n < s.c) throw ValidationError("hilbert_data requires n >= c");
    if (!nonempty(s)) throw ValidationError("hilbert_data requires a nonempty stratum");
    HilbertData h;
    h.dim = s.n - s.c;
    const int64_t max_abs = max_twist_magnitude(en_complex(s));
    h.base = std::max<int64_t>(0, max_abs - s.n);
    // Newton forward differences at the base; beyond the largest twist the
    // alternating sum is an honest polynomial of degree n - c.
    const int samples = s.n + 2;
    std::vector<int64_t> vals(samples);
    for (int i = 0; i < samples; ++i) vals[i] = hilbert_function(s, h.base + i);
    std::vector<std::vector<int64_t>> diff{vals};
    for (int k = 1; k < samples; ++k) {
        std::vector<int64_t> next(diff.back().size() - 1);
        for (size_t i = 0; i + 1 < diff.back().size(); ++i) {
            next[i] = diff.back()[i + 1] - diff.back()[i];
        }
        diff.push_back(std::move(next));
    }
    for (int k = 0; k <= h.dim; ++k) h.newton.push_back(diff[k][0]);
    for (int k = h.dim + 1; k < samples; ++k) {
        if (diff[k][0] != 0) {
            throw ValidationError("hilbert polynomial degree exceeds n - c (unexpected)");
        }
    }
    h.degree = h.newton[h.dim];
    if (h.dim == 1) {
        // hp(v) = d v + (1 - g)
        h.genus = h.degree * h.base + 1 - h.newton[0];
    }
    int64_t v0 = h.base;
    while (v0 > 0 && hilbert_function(s, v0 - 1) == evaluate_hp(h, v0 - 1)) --v0;
    h.stabilization_degree = static_cast<int>(v0);
    return h;
}

int64_t evaluate_hp(const HilbertData& h, int64_t v) {
    int64_t total = 0;
    for (size_t k = 0; k < h.newton.size(); ++k) {
        // C(v - base, k) as a polynomial value (may be negative below base)
        boost::multiprecision::cpp_int term = 1;
        for (size_t j = 0; j < k; ++j) term *= (v - h.base - static_cast<int64_t>(j));
        for (size_t j = 2; j <= k; ++j) term /= static_cast<int64_t>(j);
        total += h.newton[k] * static_cast<int64_t>(term);
    }
    return total;
}

std::vector<std::pair<std::string, std::string>> hp_monomial_coeffs(const HilbertData& h) {
    using boost::multiprecision::cpp_int;
    using Rat = boost::multiprecision::cpp_rational;
    size_t deg = h.newton.size();
    std::vector<Rat> coeff(deg, 0);
    // expand sum_k newton[k]/k! * prod_{j<k} (v - base - j)
    for (size_t k = 0; k < deg; ++k) {
        std::vector<cpp_int> poly{1};  // coefficients of prod, low to high
        for (size_t j = 0; j < k; ++j) {
            std::vector<cpp_int> next(poly.size() + 1, 0);
            cpp_int shift = -(h.base + static_cast<int64_t>(j));
            for (size_t d = 0; d < poly.size(); ++d) {
                next[d] += poly[d] * shift;
                next[d + 1] += poly[d];
            }
            poly = std::move(next);
        }
        cpp_int fact = 1;
        for (size_t j = 2; j <= k; ++j) fact *= static_cast<int64_t>(j);
        for (size_t d = 0; d < poly.size(); ++d) {
            coeff[d] += Rat(poly[d] * h.newton[k], fact);
        }
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (const Rat& r : coeff) {
        out.emplace_back(numerator(r).str(), denominator(r).str());
    }
    return out;
}

std::vector<int64_t> generator_degrees(const DegreeSpec& s) {
    const int64_t bsum = std::accumulate(s.b.begin(), s.b.end(), int64_t{0});
    std::vector<int64_t> out;
    std::vector<int> sel;
    subsets(s.num_cols() - 1, s.t, sel, [&](const std::vector<int>& av) {
        int64_t asum = 0;
        for (int idx : av) asum += s.a[idx];
        out.push_back(asum - bsum);
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool gradalg_iso_check(const DegreeSpec& s) {
    if (s.n != s.c) throw ValidationError("gradalg_iso_check requires n = c");
    HilbertData h = hilbert_data(s);
    std::set<int64_t> degs;
    for (int64_t d : generator_degrees(s)) degs.insert(d);
    for (int64_t d : degs) {
        if (hilbert_function(s, d) != h.degree) return false;
    }
    return true;
}

}  // namespace detlocus
