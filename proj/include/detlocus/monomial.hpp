#pragma once

#include <cstdint>
#include <vector>

namespace detlocus {

// Monomials in n+1 variables x_0..x_n, represented by exponent vectors.
// Within each degree the fixed order is descending lexicographic on the
// exponent tuple (x_0^d first), i.e. graded lexicographic with x_0 > ... > x_n.
using Exponents = std::vector<int>;

int monomial_degree(const Exponents& e);

// Number of degree-d monomials in nv variables: C(d + nv - 1, nv - 1).
int64_t monomial_count(int nv, int d);

// All monomials of degree d in n+1 variables, in the fixed order.
std::vector<Exponents> monomial_basis(int n, int d);

// Position of e in monomial_basis(n, deg(e)).
size_t monomial_rank(int n, const Exponents& e);
Exponents monomial_unrank(int n, int d, size_t rank);

// rank (in degree d+e) of the product of monomials of degrees d and e
size_t monomial_mul_rank(int n, const Exponents& a, const Exponents& b);

}  // namespace detlocus
