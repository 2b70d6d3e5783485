#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detlocus/degree_spec.hpp"

namespace detlocus {

// Graded free complex recorded as twist multisets per homological step; the
// differentials are never built symbolically (instances recompute syzygies
// numerically and are checked against these twists).
struct GradedFreeComplex {
    enum class Kind { EagonNorthcott, BuchsbaumRim };
    Kind kind;
    DegreeSpec spec;
    std::vector<std::vector<int64_t>> steps;  // steps[k] = sorted twists e of R(e) summands
};

// Resolution of the coordinate ring: step 0 = R, step k (1..c) from
// wedge^{t+k-1} G* (x) S_{k-1} F (x) wedge^t F.
GradedFreeComplex en_complex(const DegreeSpec& s);
// Resolution of the cokernel of the transposed matrix map: step 0 = F*,
// step 1 = G*, step k >= 2 from wedge^{t+k-1} G* (x) S_{k-2} F (x) wedge^t F.
GradedFreeComplex br_complex(const DegreeSpec& s);

// No twist shared between consecutive steps (minimality witness).
bool complex_is_minimal(const GradedFreeComplex& c);
int64_t max_twist_magnitude(const GradedFreeComplex& c);
// max twist magnitude across the whole column-deletion flag (used for the
// default degree cutoff)
int64_t flag_max_twist_magnitude(const DegreeSpec& s);

// Hilbert function of A = R/I by the alternating sum over the EN steps.
int64_t hilbert_function(const DegreeSpec& s, int64_t v);
// Hilbert function of the cokernel module M by the alternating BR sum.
int64_t module_hilbert_function(const DegreeSpec& s, int64_t v);

struct HilbertData {
    int dim = 0;          // n - c
    int64_t degree = 0;   // leading invariant
    std::optional<int64_t> genus;  // only when n - c = 1
    // exact Hilbert polynomial in Newton form: hp(v) = sum_k newton[k] * C(v - base, k)
    int64_t base = 0;
    std::vector<int64_t> newton;
    int stabilization_degree = 0;  // least v0 >= 0 with hf = hp from v0 on
};

HilbertData hilbert_data(const DegreeSpec& s);
int64_t evaluate_hp(const HilbertData& h, int64_t v);
// exact monomial coefficients of hp as (numerator, denominator) strings
std::vector<std::pair<std::string, std::string>> hp_monomial_coeffs(const HilbertData& h);

// Degrees of the maximal minors: a_{j_1}+...+a_{j_t} - sum b_i over column
// t-subsets, sorted.
std::vector<int64_t> generator_degrees(const DegreeSpec& s);

// Zero-dimensional case only: the Hilbert function equals the degree in every
// generator degree, which makes the graded parameter space agree with the
// Hilbert scheme at the corresponding point.
bool gradalg_iso_check(const DegreeSpec& s);

}  // namespace detlocus
