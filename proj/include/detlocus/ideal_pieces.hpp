#pragma once

#include <map>
#include <memory>
#include <vector>

#include "detlocus/poly.hpp"
#include "detlocus/span_basis.hpp"

namespace detlocus {

// Graded pieces of a homogeneous ideal I = (g_1..g_s) ⊂ R as echelon bases,
// built degree by degree with no Groebner machinery: (I)_d is the span of
// m·g over generators g and monomials m of degree d - deg g. Pieces are
// cached; quotient data (R/I)_d comes from the complement of pivot columns.
class IdealPieces {
public:
    IdealPieces(const PolyRing& ring, std::vector<Poly> gens);

    const PolyRing& ring() const { return *ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    // echelon basis of (I)_d
    const SpanBasis& piece(int d) const;
    int64_t dim(int d) const;
    // dim (R/I)_d = C(d+n, n) - dim (I)_d
    int64_t quotient_dim(int d) const;

    // canonical coordinates of f's class in (R/I)_deg f, in the basis given by
    // non-pivot monomials of the echelon piece
    std::vector<uint32_t> class_coords(const Poly& f) const;
    // representative polynomial of a class given in non-pivot coordinates
    Poly class_lift(int d, const std::vector<uint32_t>& coords) const;
    // non-pivot monomial indices (the canonical basis of (R/I)_d)
    const std::vector<size_t>& quotient_basis_cols(int d) const;

    // class of f·g in R/I (degrees must add up to the requested piece degree)
    std::vector<uint32_t> multiply_into_quotient(const Poly& f, const Poly& g) const;

private:
    const PolyRing* ring_;
    std::vector<Poly> gens_;
    mutable std::map<int, std::unique_ptr<SpanBasis>> pieces_;
    mutable std::map<int, std::vector<size_t>> free_cols_;
};

}  // namespace detlocus
