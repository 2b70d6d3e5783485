#include "detlocus/degree_spec.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace detlocus {

DegreeSpec DegreeSpec::delete_last_column() const {
    if (c < 3) throw ValidationError("column deletion requires c >= 3");
    DegreeSpec out = *this;
    out.c = c - 1;
    out.a.pop_back();
    return out;
}

std::string DegreeSpec::to_string() const {
    std::ostringstream os;
    os << "t=" << t << " c=" << c << " n=" << n << " a=(";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ") b=(";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ")";
    return os.str();
}

DegreeSpec validate_spec(int t, int c, int n, std::vector<int> a, std::vector<int> b) {
    std::vector<std::string> errs;
    if (t < 2) errs.push_back("t must be >= 2");
    if (c < 2) errs.push_back("c must be >= 2");
    if (n < 0) errs.push_back("n must be >= 0");
    if (static_cast<int>(b.size()) != t) errs.push_back("b must have length t");
    if (static_cast<int>(a.size()) != t + c - 1) errs.push_back("a must have length t+c-1");
    if (!std::is_sorted(a.begin(), a.end())) errs.push_back("a must be sorted ascending");
    if (!std::is_sorted(b.begin(), b.end())) errs.push_back("b must be sorted ascending");
    if (!errs.empty()) {
        std::string msg = "invalid degree data:";
        for (const auto& e : errs) msg += " [" + e + "]";
        throw ValidationError(msg);
    }
    return DegreeSpec{t, c, n, std::move(a), std::move(b)};
}

int64_t ell(const DegreeSpec& s, int i) {
    if (i < 2 || i > s.c) throw ValidationError("ell: index must satisfy 2 <= i <= c");
    int64_t sum = 0;
    for (int j = 0; j <= s.t + i - 2; ++j) sum += s.a[j];
    for (int k = 0; k < s.t; ++k) sum -= s.b[k];
    return sum;
}

int64_t h_invariant(const DegreeSpec& s, int i) {
    if (i < 3 || i > s.c) throw ValidationError("h_invariant: index must satisfy 3 <= i <= c");
    return 2ll * s.a[s.t + i - 2] - ell(s, i) + s.n;
}

bool nonempty(const DegreeSpec& s) {
    for (int i = 1; i <= s.t; ++i) {
        if (s.a[i - 1] - s.b[i - 1] <= 0) return false;
    }
    return true;
}

bool alpha_condition(const DegreeSpec& s, int alpha) {
    int m = std::min(alpha, s.t);
    for (int i = m; i <= s.t; ++i) {
        if (s.a[i - m] < s.b[i - 1]) return false;
    }
    return true;
}

HypothesisFlags hypothesis_flags(const DegreeSpec& s) {
    HypothesisFlags fl;
    fl.nonempty = nonempty(s);
    fl.no_scheme = s.n < s.c;
    for (int alpha = 1; alpha <= s.t; ++alpha) {
        if (alpha_condition(s, alpha)) fl.alpha_max = alpha;
    }
    fl.alpha_saturated = fl.alpha_max == s.t && alpha_condition(s, s.t);
    for (int j = 2; j <= s.c; ++j) {
        if (fl.alpha_saturated) {
            fl.sing_codim_bound.push_back(j + 2);
        } else {
            fl.sing_codim_bound.push_back(std::min(2 * fl.alpha_max - 1, j + 2));
        }
    }
    fl.dim0new_ok = s.c >= 3 && dim0new_check(s);
    DegreeSpec cur = s;
    while (cur.c >= 3) {
        fl.column_delete_chain.push_back(cur.a.back());
        cur = cur.delete_last_column();
    }
    return fl;
}

bool dim0new_check(const DegreeSpec& s) {
    if (s.c < 3) throw ValidationError("dim0new_check requires c >= 3");
    if (s.a[0] <= s.b[s.t - 1]) return false;
    if (s.c <= 5) return s.a[s.t + s.c - 2] > s.a[s.t - 2];
    return s.a[s.t + 3] > s.a[s.t - 2];
}

}  // namespace detlocus
