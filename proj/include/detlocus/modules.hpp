#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "detlocus/instances.hpp"
#include "detlocus/ring_ctx.hpp"

namespace detlocus {

// Free module ⊕_k S(-g_k) over a coefficient ring, presented degreewise.
class FreeModulePieces : public GradedModule {
public:
    FreeModulePieces(const CoefRing& s, std::vector<int> twists);

    int64_t dim(int d) const override;
    int lowest_degree() const override;
    void apply_var(int v, int d, const uint32_t* x, uint32_t* y) const override;

    const std::vector<int>& twists() const { return twists_; }
    int64_t block_offset(int d, size_t k) const;
    const CoefRing& ring() const { return *s_; }

private:
    const CoefRing* s_;
    std::vector<int> twists_;
};

// Subquotient (U)_d / (V)_d of R for nested homogeneous ideals V ⊆ U. Covers
// the relative ideal I_X/I_Y inside R/I_Y as well as conormal modules I/I².
// Pieces carry canonical echelon bases with explicit polynomial lifts.
class SubIdealModule : public GradedModule {
public:
    SubIdealModule(const PolyCoefRing& r, const IdealPieces& u, const IdealPieces& v,
                   int lowest_hint);

    int64_t dim(int d) const override;
    int lowest_degree() const override { return lowest_; }
    void apply_var(int v, int d, const uint32_t* x, uint32_t* y) const override;

    std::vector<uint32_t> coords(const Poly& f) const;
    Poly lift(int d, const std::vector<uint32_t>& coords) const;
    // basis classes expressed in the monomial-class basis of R/V at degree d
    // (valid when V is the defining ideal of the ambient quotient ring)
    const DenseMatrix& ring_inclusion(int d) const;

private:
    struct PieceData {
        std::vector<size_t> pivots;          // ambient pivot column per basis row
        DenseMatrix lifts;                   // rows = canonical representatives in R_d
        DenseMatrix cmat;                    // class projection R_d -> piece coords
        std::map<int, DenseMatrix> var;      // x_v action into piece d+1
        std::unique_ptr<DenseMatrix> incl;   // into (R/V)_d
    };
    PieceData& piece(int d) const;
    const DenseMatrix& var_map(int v, int d) const;

    const PolyCoefRing* r_;
    const IdealPieces* u_;
    const IdealPieces* v_;
    int lowest_;
    mutable std::map<int, PieceData> pieces_;
};

// Cokernel of a homogeneous matrix map ⊕_j R(-col_deg_j) -> ⊕_i R(-row_deg_i),
// twisted by `shift` (pieces may live in negative degrees). Used for the
// Buchsbaum-Rim cokernel module and its column-deleted versions.
class MatrixCokerModule : public GradedModule {
public:
    MatrixCokerModule(const PolyCoefRing& r, std::vector<std::vector<Poly>> entries,
                      std::vector<int> row_degs, std::vector<int> col_degs, int shift);

    int64_t dim(int d) const override;
    int lowest_degree() const override { return lowest_; }
    void apply_var(int v, int d, const uint32_t* x, uint32_t* y) const override;

private:
    struct PieceData {
        std::unique_ptr<SpanBasis> relations;  // column span at this degree
        std::vector<size_t> free_cols;
        DenseMatrix cmat;
        std::map<int, DenseMatrix> var;
    };
    int64_t ambient_dim(int d) const;
    int64_t block_offset(int d, size_t i) const;
    PieceData& piece(int d) const;
    const DenseMatrix& var_map(int v, int d) const;

    const PolyCoefRing* r_;
    std::vector<std::vector<Poly>> entries_;  // entries_[i][j]
    std::vector<int> row_degs_;               // generator degree of block i: row_degs_[i] - shift
    std::vector<int> col_degs_;
    int shift_;
    int lowest_;
    mutable std::map<int, PieceData> pieces_;
};

}  // namespace detlocus
