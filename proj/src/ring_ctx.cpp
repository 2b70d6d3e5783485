#include "detlocus/ring_ctx.hpp"

namespace detlocus {

DenseMatrix GradedModule::var_matrix(const PrimeField& f, int v, int d) const {
    (void)f;
    size_t nin = static_cast<size_t>(dim(d));
    size_t nout = static_cast<size_t>(dim(d + 1));
    DenseMatrix m(nout, nin);
    std::vector<uint32_t> x(nin, 0), y(nout);
    for (size_t i = 0; i < nin; ++i) {
        x[i] = 1;
        std::fill(y.begin(), y.end(), 0);
        apply_var(v, d, x.data(), y.data());
        for (size_t r = 0; r < nout; ++r) m.at(r, i) = y[r];
        x[i] = 0;
    }
    return m;
}

const std::vector<uint32_t>& PolyCoefRing::shift_table(int v, int d) const {
    auto key = std::make_pair(v, d);
    auto it = shift_cache_.find(key);
    if (it != shift_cache_.end()) return it->second;
    const auto& bs = ring_->basis(d);
    Exponents e(ring_->n() + 1, 0);
    e[v] = 1;
    std::vector<uint32_t> tbl(bs.size());
    for (size_t i = 0; i < bs.size(); ++i) {
        tbl[i] = static_cast<uint32_t>(monomial_mul_rank(ring_->n(), bs[i], e));
    }
    return shift_cache_.emplace(key, std::move(tbl)).first->second;
}

void PolyCoefRing::apply_var(int v, int d, const uint32_t* x, uint32_t* y) const {
    if (d < 0) return;
    const auto& tbl = shift_table(v, d);
    const PrimeField& f = ring_->field();
    for (size_t i = 0; i < tbl.size(); ++i) {
        if (x[i]) y[tbl[i]] = f.add(y[tbl[i]], x[i]);
    }
}

const std::vector<size_t>& PolyCoefRing::basis_ranks(int d) const {
    auto it = ranks_cache_.find(d);
    if (it != ranks_cache_.end()) return it->second;
    std::vector<size_t> ranks(static_cast<size_t>(ring_->dim(d)));
    for (size_t i = 0; i < ranks.size(); ++i) ranks[i] = i;
    return ranks_cache_.emplace(d, std::move(ranks)).first->second;
}

const std::vector<size_t>& QuotientRing::basis_ranks(int d) const {
    return ideal_->quotient_basis_cols(d);
}

const DenseMatrix& QuotientRing::var_map(int v, int d) const {
    auto key = std::make_pair(v, d);
    auto it = var_cache_.find(key);
    if (it != var_cache_.end()) return it->second;
    const PrimeField& f = ring_->field();
    const auto& cols_d = ideal_->quotient_basis_cols(d);
    const auto& basis_d = ring_->basis(d);
    const SpanBasis& span_next = ideal_->piece(d + 1);
    const auto& cols_next = ideal_->quotient_basis_cols(d + 1);
    std::vector<int> class_index(static_cast<size_t>(ring_->dim(d + 1)), -1);
    for (size_t i = 0; i < cols_next.size(); ++i) class_index[cols_next[i]] = static_cast<int>(i);

    Exponents e(ring_->n() + 1, 0);
    DenseMatrix m(cols_next.size(), cols_d.size());
    for (size_t j = 0; j < cols_d.size(); ++j) {
        e[v] = 1;
        size_t target = monomial_mul_rank(ring_->n(), basis_d[cols_d[j]], e);
        e[v] = 0;
        int pr = span_next.pivot_row_of_col(target);
        if (pr < 0) {
            // x_v * mu is itself a basis monomial
            m.at(static_cast<size_t>(class_index[target]), j) = 1;
        } else {
            // pivot monomial: its class is minus the tail of the echelon row,
            // which is supported on non-pivot columns
            std::vector<uint32_t> row = span_next.row(static_cast<size_t>(pr));
            for (size_t col = target + 1; col < row.size(); ++col) {
                if (row[col] && class_index[col] >= 0) {
                    m.at(static_cast<size_t>(class_index[col]), j) = f.neg(row[col]);
                }
            }
        }
    }
    return var_cache_.emplace(key, std::move(m)).first->second;
}

void QuotientRing::apply_var(int v, int d, const uint32_t* x, uint32_t* y) const {
    if (d < 0) return;
    const DenseMatrix& m = var_map(v, d);
    accumulate_matvec(ring_->field(), m, x, y);
}

}  // namespace detlocus
