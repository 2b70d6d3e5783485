#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "detlocus/monomial.hpp"
#include "detlocus/prime_field.hpp"

namespace detlocus {

// Homogeneous polynomial over F_p: degree plus a dense coefficient vector in
// the monomial basis of R_deg.
struct Poly {
    int deg = 0;
    std::vector<uint32_t> c;

    bool is_zero() const {
        for (uint32_t v : c)
            if (v) return false;
        return true;
    }
};

// Context for R = F_p[x_0..x_n]: the field, cached monomial bases per degree,
// and multiplication between homogeneous pieces.
class PolyRing {
public:
    PolyRing(int n, const PrimeField& f) : n_(n), f_(&f) {}

    int n() const { return n_; }
    const PrimeField& field() const { return *f_; }

    int64_t dim(int d) const { return d < 0 ? 0 : monomial_count(n_ + 1, d); }
    const std::vector<Exponents>& basis(int d) const;

    Poly zero(int d) const { return Poly{d, std::vector<uint32_t>(static_cast<size_t>(dim(d)), 0)}; }
    Poly one() const { return Poly{0, {1}}; }
    Poly monomial(const Exponents& e) const;
    Poly variable(int i) const;

    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly scal(uint32_t k, const Poly& a) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly mul_monomial(const Poly& a, const Exponents& e) const;

private:
    int n_;
    const PrimeField* f_;
    mutable std::map<int, std::vector<Exponents>> basis_cache_;
};

}  // namespace detlocus
