#pragma once

#include <map>
#include <memory>
#include <vector>

#include "detlocus/ideal_pieces.hpp"
#include "detlocus/poly.hpp"

namespace detlocus {

// Graded pieces of a module over R = F_p[x_0..x_n], presented degreewise:
// a dimension per degree and the multiplication-by-variable action between
// consecutive pieces. All homology computations run through this interface.
class GradedModule {
public:
    virtual ~GradedModule() = default;
    virtual int64_t dim(int d) const = 0;
    // y += x_v * x, where x has length dim(d), y has length dim(d+1)
    virtual void apply_var(int v, int d, const uint32_t* x, uint32_t* y) const = 0;
    // degree below which every piece is zero (a priori bound, not computed)
    virtual int lowest_degree() const = 0;

    // dense matrix of the x_v action (assembled column by column)
    DenseMatrix var_matrix(const PrimeField& f, int v, int d) const;
};

// Coefficient ring of a free module in a resolution: R or a quotient R/I.
// Pieces carry a monomial-class basis; basis_ranks maps basis elements to
// monomial ranks in R_d so ring elements can act through monomial chains.
class CoefRing : public GradedModule {
public:
    virtual const std::vector<size_t>& basis_ranks(int d) const = 0;
    virtual const PolyRing& poly_ring() const = 0;
    const PrimeField& field() const { return poly_ring().field(); }
};

// R itself.
class PolyCoefRing : public CoefRing {
public:
    explicit PolyCoefRing(const PolyRing& ring) : ring_(&ring) {}
    int64_t dim(int d) const override { return ring_->dim(d); }
    int lowest_degree() const override { return 0; }
    void apply_var(int v, int d, const uint32_t* x, uint32_t* y) const override;
    const std::vector<size_t>& basis_ranks(int d) const override;
    const PolyRing& poly_ring() const override { return *ring_; }

private:
    const PolyRing* ring_;
    mutable std::map<std::pair<int, int>, std::vector<uint32_t>> shift_cache_;
    mutable std::map<int, std::vector<size_t>> ranks_cache_;
    const std::vector<uint32_t>& shift_table(int v, int d) const;
};

// Quotient ring R/I with canonical monomial-class bases (complement of the
// pivot columns of the ideal piece echelon).
class QuotientRing : public CoefRing {
public:
    QuotientRing(const PolyRing& ring, const IdealPieces& ideal) : ring_(&ring), ideal_(&ideal) {}

    int64_t dim(int d) const override { return d < 0 ? 0 : ideal_->quotient_dim(d); }
    int lowest_degree() const override { return 0; }
    void apply_var(int v, int d, const uint32_t* x, uint32_t* y) const override;
    const std::vector<size_t>& basis_ranks(int d) const override;
    const PolyRing& poly_ring() const override { return *ring_; }
    const IdealPieces& ideal() const { return *ideal_; }

    std::vector<uint32_t> class_coords(const Poly& f) const { return ideal_->class_coords(f); }
    Poly lift(int d, const std::vector<uint32_t>& coords) const {
        return ideal_->class_lift(d, coords);
    }

private:
    const PolyRing* ring_;
    const IdealPieces* ideal_;
    mutable std::map<std::pair<int, int>, DenseMatrix> var_cache_;
    const DenseMatrix& var_map(int v, int d) const;
};

}  // namespace detlocus
