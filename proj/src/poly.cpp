#include "detlocus/poly.hpp"

#include <stdexcept>

namespace detlocus {

const std::vector<Exponents>& PolyRing::basis(int d) const {
    auto it = basis_cache_.find(d);
    if (it == basis_cache_.end()) it = basis_cache_.emplace(d, monomial_basis(n_, d)).first;
    return it->second;
}

Poly PolyRing::monomial(const Exponents& e) const {
    int d = monomial_degree(e);
    Poly p = zero(d);
    p.c[monomial_rank(n_, e)] = 1;
    return p;
}

Poly PolyRing::variable(int i) const {
    Exponents e(n_ + 1, 0);
    e[i] = 1;
    return monomial(e);
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
    if (a.deg != b.deg) throw std::invalid_argument("poly add: degree mismatch");
    Poly out = a;
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = f_->add(out.c[i], b.c[i]);
    return out;
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const {
    if (a.deg != b.deg) throw std::invalid_argument("poly sub: degree mismatch");
    Poly out = a;
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = f_->sub(out.c[i], b.c[i]);
    return out;
}

Poly PolyRing::scal(uint32_t k, const Poly& a) const {
    Poly out = a;
    f_->scale(out.c.data(), k % f_->p(), out.c.size());
    return out;
}

Poly PolyRing::mul_monomial(const Poly& a, const Exponents& e) const {
    const auto& bs = basis(a.deg);
    Poly out = zero(a.deg + monomial_degree(e));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i]) out.c[monomial_mul_rank(n_, bs[i], e)] = a.c[i];
    }
    return out;
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
    const Poly& big = a.c.size() >= b.c.size() ? a : b;
    const Poly& small = a.c.size() >= b.c.size() ? b : a;
    Poly out = zero(a.deg + b.deg);
    const auto& small_basis = basis(small.deg);
    const auto& big_basis = basis(big.deg);
    const uint64_t p = f_->p();
    for (size_t j = 0; j < small.c.size(); ++j) {
        uint32_t cj = small.c[j];
        if (!cj) continue;
        for (size_t i = 0; i < big.c.size(); ++i) {
            uint32_t ci = big.c[i];
            if (!ci) continue;
            uint32_t& slot = out.c[monomial_mul_rank(n_, big_basis[i], small_basis[j])];
            slot = static_cast<uint32_t>((slot + static_cast<uint64_t>(ci) * cj) % p);
        }
    }
    return out;
}

}  // namespace detlocus
