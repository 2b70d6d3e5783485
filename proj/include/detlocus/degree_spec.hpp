#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace detlocus {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree data (t, c, n, b_1<=...<=b_t, a_0<=...<=a_{t+c-2}) of a stratum of
// determinantal schemes cut out by the maximal minors of a t x (t+c-1)
// homogeneous matrix with entry degrees a_j - b_i.
struct DegreeSpec {
    int t = 0, c = 0, n = 0;
    std::vector<int> a, b;

    int num_cols() const { return t + c - 1; }
    // scheme dimension n - c (negative means no scheme)
    int scheme_dim() const { return n - c; }

    // spec with the last (largest-degree) column removed; requires c >= 3
    DegreeSpec delete_last_column() const;
    // entry (i, j) is forced to zero unless a_j > b_i (minimality mask plus
    // no-negative-degree rule)
    bool entry_allowed(int i, int j) const { return a[j] > b[i]; }

    bool operator==(const DegreeSpec&) const = default;
    std::string to_string() const;
};

struct HypothesisFlags {
    bool nonempty = false;
    int alpha_max = 0;            // largest alpha level that holds (0 = none)
    bool alpha_saturated = false; // condition holds at alpha = t
    std::vector<int> sing_codim_bound;  // bound for j = 2..c (index j-2)
    bool dim0new_ok = false;            // only meaningful when c >= 3
    bool no_scheme = false;             // n < c: formulas fine, instances rejected
    std::vector<int> column_delete_chain;  // degrees removed to form a', a'', ...
};

// Normalizes and checks raw degree data; throws ValidationError listing every
// structural violation.
DegreeSpec validate_spec(int t, int c, int n, std::vector<int> a, std::vector<int> b);

// l_i = sum_{j=0}^{t+i-2} a_j - sum_k b_k, for 2 <= i <= c
int64_t ell(const DegreeSpec& s, int i);

// 2 a_{t+i-2} - l_i + n, for 3 <= i <= c
int64_t h_invariant(const DegreeSpec& s, int i);

// stratum non-emptiness: a_{i-1} - b_i > 0 for i = 1..t
bool nonempty(const DegreeSpec& s);

// degree condition at level alpha: a_{i-min(alpha,t)} >= b_i for
// min(alpha,t) <= i <= t
bool alpha_condition(const DegreeSpec& s, int alpha);

HypothesisFlags hypothesis_flags(const DegreeSpec& s);

// Sufficient condition for the key Hom bound on a general member:
// a_0 > b_t and (c <= 5 ? a_{t+c-2} > a_{t-2} : a_{t+3} > a_{t-2}); c >= 3.
bool dim0new_check(const DegreeSpec& s);

}  // namespace detlocus
