#include "detlocus/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace detlocus {

int monomial_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

int64_t monomial_count(int nv, int d) {
    if (d < 0) return 0;
    if (nv <= 0) return d == 0 ? 1 : 0;
    // C(d + nv - 1, nv - 1), small enough for int64 at desk scale
    int64_t num = 1;
    for (int k = 1; k <= nv - 1; ++k) num = num * (d + k) / k;
    return num;
}

std::vector<Exponents> monomial_basis(int n, int d) {
    std::vector<Exponents> out;
    out.reserve(static_cast<size_t>(monomial_count(n + 1, d)));
    Exponents cur(n + 1, 0);
    // descending lex: choose e_0 from d down to 0, recurse on the tail
    struct Rec {
        int n;
        std::vector<Exponents>& out;
        Exponents& cur;
        void go(int var, int rem) {
            if (var == n) {
                cur[var] = rem;
                out.push_back(cur);
                return;
            }
            for (int v = rem; v >= 0; --v) {
                cur[var] = v;
                go(var + 1, rem - v);
            }
        }
    } rec{n, out, cur};
    rec.go(0, d);
    return out;
}

size_t monomial_rank(int n, const Exponents& e) {
    int rem = monomial_degree(e);
    size_t r = 0;
    for (int i = 0; i < n; ++i) {
        // monomials with a larger exponent at position i come first
        for (int v = rem; v > e[i]; --v) r += static_cast<size_t>(monomial_count(n - i, rem - v));
        rem -= e[i];
    }
    return r;
}

Exponents monomial_unrank(int n, int d, size_t rank) {
    Exponents e(n + 1, 0);
    int rem = d;
    for (int i = 0; i < n; ++i) {
        int v = rem;
        while (v >= 0) {
            size_t cnt = static_cast<size_t>(monomial_count(n - i, rem - v));
            if (rank < cnt) break;
            rank -= cnt;
            --v;
        }
        if (v < 0) throw std::out_of_range("monomial_unrank: rank out of range");
        e[i] = v;
        rem -= v;
    }
    e[n] = rem;
    return e;
}

size_t monomial_mul_rank(int n, const Exponents& a, const Exponents& b) {
    Exponents s(n + 1);
    for (int i = 0; i <= n; ++i) s[i] = a[i] + b[i];
    return monomial_rank(n, s);
}

}  // namespace detlocus
