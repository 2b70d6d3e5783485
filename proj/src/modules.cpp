#include "detlocus/modules.hpp"

#include <algorithm>
#include <limits>

namespace detlocus {

// ---------------------------------------------------------------- free module

FreeModulePieces::FreeModulePieces(const CoefRing& s, std::vector<int> twists)
    : s_(&s), twists_(std::move(twists)) {}

int64_t FreeModulePieces::dim(int d) const {
    int64_t total = 0;
    for (int g : twists_) total += s_->dim(d - g);
    return total;
}

int FreeModulePieces::lowest_degree() const {
    if (twists_.empty()) return std::numeric_limits<int>::max() / 2;
    return *std::min_element(twists_.begin(), twists_.end());
}

int64_t FreeModulePieces::block_offset(int d, size_t k) const {
    int64_t off = 0;
    for (size_t i = 0; i < k; ++i) off += s_->dim(d - twists_[i]);
    return off;
}

void FreeModulePieces::apply_var(int v, int d, const uint32_t* x, uint32_t* y) const {
    int64_t off_in = 0, off_out = 0;
    for (int g : twists_) {
        int e = d - g;
        if (e >= 0 && s_->dim(e) > 0) s_->apply_var(v, e, x + off_in, y + off_out);
        off_in += s_->dim(e);
        off_out += s_->dim(e + 1);
    }
}

// ------------------------------------------------------------- subideal U / V

SubIdealModule::SubIdealModule(const PolyCoefRing& r, const IdealPieces& u, const IdealPieces& v,
                               int lowest_hint)
    : r_(&r), u_(&u), v_(&v), lowest_(lowest_hint) {}

int64_t SubIdealModule::dim(int d) const {
    if (d < lowest_) return 0;
    return u_->dim(d) - v_->dim(d);
}

SubIdealModule::PieceData& SubIdealModule::piece(int d) const {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;
    const PrimeField& f = r_->field();
    const size_t amb = static_cast<size_t>(r_->poly_ring().dim(d));
    const SpanBasis& uspan = u_->piece(d);
    const SpanBasis& vspan = v_->piece(d);

    // U-echelon rows whose pivot is not a V pivot reduce to a quasi-echelon
    // basis of the quotient; one more RREF pass makes it canonical.
    SpanBasis basis(f, amb);
    for (size_t i = 0; i < uspan.dim(); ++i) {
        if (vspan.pivot_row_of_col(uspan.pivot_col(i)) < 0) {
            basis.add(vspan.reduce(uspan.row(i)));
        }
    }
    PieceData data;
    data.pivots = basis.pivot_cols();
    data.lifts = DenseMatrix(basis.dim(), amb);
    for (size_t i = 0; i < basis.dim(); ++i) {
        auto row = basis.row(i);
        std::copy(row.begin(), row.end(), data.lifts.row(i));
    }
    // class projection: coords_i(x) = x[bp_i] - sum_j x[vp_j] * Vrow_j[bp_i]
    data.cmat = DenseMatrix(basis.dim(), amb);
    for (size_t i = 0; i < basis.dim(); ++i) data.cmat.at(i, data.pivots[i]) = 1;
    for (size_t j = 0; j < vspan.dim(); ++j) {
        auto vrow = vspan.row(j);
        size_t vp = vspan.pivot_col(j);
        for (size_t i = 0; i < basis.dim(); ++i) {
            if (vrow[data.pivots[i]]) data.cmat.at(i, vp) = f.neg(vrow[data.pivots[i]]);
        }
    }
    return pieces_.emplace(d, std::move(data)).first->second;
}

const DenseMatrix& SubIdealModule::var_map(int v, int d) const {
    PieceData& cur = piece(d);
    auto it = cur.var.find(v);
    if (it != cur.var.end()) return it->second;
    PieceData& next = piece(d + 1);
    const PrimeField& f = r_->field();
    const auto& basis_d = r_->poly_ring().basis(d);
    const int n = r_->poly_ring().n();
    Exponents xv(n + 1, 0);
    xv[v] = 1;
    const size_t amb_next = static_cast<size_t>(r_->poly_ring().dim(d + 1));
    DenseMatrix m(next.lifts.rows, cur.lifts.rows);
    std::vector<uint32_t> shifted(amb_next);
    for (size_t j = 0; j < cur.lifts.rows; ++j) {
        std::fill(shifted.begin(), shifted.end(), 0);
        const uint32_t* lift = cur.lifts.row(j);
        for (size_t i = 0; i < static_cast<size_t>(r_->poly_ring().dim(d)); ++i) {
            if (lift[i]) shifted[monomial_mul_rank(n, basis_d[i], xv)] = lift[i];
        }
        std::vector<uint32_t> col(next.cmat.rows, 0);
        accumulate_matvec(f, next.cmat, shifted.data(), col.data());
        for (size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
    }
    return cur.var.emplace(v, std::move(m)).first->second;
}

void SubIdealModule::apply_var(int v, int d, const uint32_t* x, uint32_t* y) const {
    if (dim(d) == 0) return;
    accumulate_matvec(r_->field(), var_map(v, d), x, y);
}

std::vector<uint32_t> SubIdealModule::coords(const Poly& f) const {
    PieceData& data = piece(f.deg);
    std::vector<uint32_t> out(data.cmat.rows, 0);
    accumulate_matvec(r_->field(), data.cmat, f.c.data(), out.data());
    return out;
}

Poly SubIdealModule::lift(int d, const std::vector<uint32_t>& coords) const {
    PieceData& data = piece(d);
    Poly out = r_->poly_ring().zero(d);
    const PrimeField& f = r_->field();
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i]) f.axpy(out.c.data(), data.lifts.row(i), coords[i], out.c.size());
    }
    return out;
}

const DenseMatrix& SubIdealModule::ring_inclusion(int d) const {
    PieceData& data = piece(d);
    if (!data.incl) {
        const auto& qcols = v_->quotient_basis_cols(d);
        auto m = std::make_unique<DenseMatrix>(qcols.size(), data.lifts.rows);
        for (size_t r = 0; r < qcols.size(); ++r) {
            for (size_t j = 0; j < data.lifts.rows; ++j) m->at(r, j) = data.lifts.at(j, qcols[r]);
        }
        data.incl = std::move(m);
    }
    return *data.incl;
}

// --------------------------------------------------------------- matrix coker

MatrixCokerModule::MatrixCokerModule(const PolyCoefRing& r, std::vector<std::vector<Poly>> entries,
                                     std::vector<int> row_degs, std::vector<int> col_degs,
                                     int shift)
    : r_(&r),
      entries_(std::move(entries)),
      row_degs_(std::move(row_degs)),
      col_degs_(std::move(col_degs)),
      shift_(shift) {
    lowest_ = *std::min_element(row_degs_.begin(), row_degs_.end()) - shift_;
}

int64_t MatrixCokerModule::ambient_dim(int d) const {
    int64_t total = 0;
    for (int bd : row_degs_) total += r_->poly_ring().dim(d + shift_ - bd);
    return total;
}

int64_t MatrixCokerModule::block_offset(int d, size_t i) const {
    int64_t off = 0;
    for (size_t k = 0; k < i; ++k) off += r_->poly_ring().dim(d + shift_ - row_degs_[k]);
    return off;
}

MatrixCokerModule::PieceData& MatrixCokerModule::piece(int d) const {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;
    const PrimeField& f = r_->field();
    const PolyRing& ring = r_->poly_ring();
    const int n = ring.n();
    const size_t amb = static_cast<size_t>(ambient_dim(d));
    PieceData data;
    data.relations = std::make_unique<SpanBasis>(f, amb);
    // image of the matrix map at this degree: column j times monomials
    for (size_t j = 0; j < col_degs_.size(); ++j) {
        int e = d + shift_ - col_degs_[j];
        if (e < 0) continue;
        for (const Exponents& mu : ring.basis(e)) {
            std::vector<uint32_t> vec(amb, 0);
            for (size_t i = 0; i < row_degs_.size(); ++i) {
                const Poly& fij = entries_[i][j];
                if (fij.is_zero()) continue;
                const auto& fb = ring.basis(fij.deg);
                int64_t off = block_offset(d, i);
                for (size_t k = 0; k < fij.c.size(); ++k) {
                    if (fij.c[k]) {
                        vec[static_cast<size_t>(off) + monomial_mul_rank(n, fb[k], mu)] = fij.c[k];
                    }
                }
            }
            data.relations->add(std::move(vec));
        }
    }
    data.free_cols = data.relations->free_cols();
    data.cmat = DenseMatrix(data.free_cols.size(), amb);
    for (size_t i = 0; i < data.free_cols.size(); ++i) data.cmat.at(i, data.free_cols[i]) = 1;
    for (size_t j = 0; j < data.relations->dim(); ++j) {
        auto vrow = data.relations->row(j);
        size_t vp = data.relations->pivot_col(j);
        for (size_t i = 0; i < data.free_cols.size(); ++i) {
            if (vrow[data.free_cols[i]]) data.cmat.at(i, vp) = f.neg(vrow[data.free_cols[i]]);
        }
    }
    return pieces_.emplace(d, std::move(data)).first->second;
}

int64_t MatrixCokerModule::dim(int d) const {
    if (d < lowest_) return 0;
    return static_cast<int64_t>(piece(d).free_cols.size());
}

const DenseMatrix& MatrixCokerModule::var_map(int v, int d) const {
    PieceData& cur = piece(d);
    auto it = cur.var.find(v);
    if (it != cur.var.end()) return it->second;
    PieceData& next = piece(d + 1);
    const PolyRing& ring = r_->poly_ring();
    const int n = ring.n();
    Exponents xv(n + 1, 0);
    xv[v] = 1;
    // basis elements are unit vectors at free columns: the shift of a unit
    // vector is a unit vector, so columns of the action are columns of cmat
    DenseMatrix m(next.free_cols.size(), cur.free_cols.size());
    for (size_t j = 0; j < cur.free_cols.size(); ++j) {
        // locate the block and monomial of this free column
        size_t col = cur.free_cols[j];
        size_t blk = 0;
        int64_t off = 0;
        while (blk < row_degs_.size()) {
            int64_t bdim = ring.dim(d + shift_ - row_degs_[blk]);
            if (static_cast<int64_t>(col) < off + bdim) break;
            off += bdim;
            ++blk;
        }
        const auto& bs = ring.basis(d + shift_ - row_degs_[blk]);
        size_t target = static_cast<size_t>(block_offset(d + 1, blk)) +
                        monomial_mul_rank(n, bs[col - off], xv);
        for (size_t i = 0; i < next.free_cols.size(); ++i) m.at(i, j) = next.cmat.at(i, target);
    }
    return cur.var.emplace(v, std::move(m)).first->second;
}

void MatrixCokerModule::apply_var(int v, int d, const uint32_t* x, uint32_t* y) const {
    if (dim(d) == 0) return;
    accumulate_matvec(r_->field(), var_map(v, d), x, y);
}

}  // namespace detlocus
