#include "detlocus/span_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace detlocus {

void SpanBasis::reduce_inplace(std::vector<uint32_t>& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        size_t pc = pivots_[i];
        uint32_t c = v[pc];
        if (c) f_->axpy(v.data() + pc, rows_[i].data(), f_->neg(c), n_ - pc);
    }
}

bool SpanBasis::add(std::vector<uint32_t> v) {
    reduce_inplace(v);
    size_t pc = 0;
    while (pc < n_ && v[pc] == 0) ++pc;
    if (pc == n_) return false;
    uint32_t piv = v[pc];
    if (piv != 1) f_->scale(v.data() + pc, f_->inv(piv), n_ - pc);
    // back-reduce existing rows at the new pivot column
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (pivots_[i] > pc) break;  // those rows have zero at pc already? no: check all earlier
        uint32_t c = rows_[i][pc - pivots_[i]];
        if (c) f_->axpy(rows_[i].data() + (pc - pivots_[i]), v.data() + pc, f_->neg(c), n_ - pc);
    }
    std::vector<uint32_t> tail(v.begin() + pc, v.end());
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
    size_t idx = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, pc);
    rows_.insert(rows_.begin() + idx, std::move(tail));
    for (size_t col = 0; col < n_; ++col) {
        if (pivot_row_[col] >= static_cast<int>(idx)) ++pivot_row_[col];
    }
    pivot_row_[pc] = static_cast<int>(idx);
    return true;
}

bool SpanBasis::contains(std::vector<uint32_t> v) const {
    reduce_inplace(v);
    return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

std::optional<std::vector<uint32_t>> SpanBasis::coords(std::vector<uint32_t> v) const {
    std::vector<uint32_t> c(rows_.size(), 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        size_t pc = pivots_[i];
        uint32_t coeff = v[pc];
        if (coeff) {
            c[i] = coeff;
            f_->axpy(v.data() + pc, rows_[i].data(), f_->neg(coeff), n_ - pc);
        }
    }
    if (!std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; })) return std::nullopt;
    return c;
}

std::vector<uint32_t> SpanBasis::row(size_t i) const {
    std::vector<uint32_t> v(n_, 0);
    std::copy(rows_[i].begin(), rows_[i].end(), v.begin() + pivots_[i]);
    return v;
}

std::vector<size_t> SpanBasis::free_cols() const {
    std::vector<size_t> out;
    out.reserve(n_ - rows_.size());
    for (size_t col = 0; col < n_; ++col) {
        if (pivot_row_[col] < 0) out.push_back(col);
    }
    return out;
}

SubquotientBasis SubquotientBasis::full_quotient(const PrimeField& f, const SpanBasis& v) {
    SubquotientBasis q(f, v, v.ambient());
    for (size_t col : v.free_cols()) {
        std::vector<uint32_t> e(v.ambient(), 0);
        e[col] = 1;
        q.basis_.add(std::move(e));
    }
    return q;
}

SubquotientBasis SubquotientBasis::subquotient(const PrimeField& f, const SpanBasis& v,
                                               const std::vector<std::vector<uint32_t>>& u_rows) {
    SubquotientBasis q(f, v, v.ambient());
    for (const auto& u : u_rows) q.basis_.add(v.reduce(u));
    return q;
}

std::vector<uint32_t> SubquotientBasis::coords(std::vector<uint32_t> ambient_vec) const {
    v_->reduce_inplace(ambient_vec);
    auto c = basis_.coords(std::move(ambient_vec));
    if (!c) throw std::runtime_error("subquotient coords: vector outside the subquotient");
    return *c;
}

}  // namespace detlocus
