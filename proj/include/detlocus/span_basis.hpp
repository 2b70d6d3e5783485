#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "detlocus/dense_matrix.hpp"
#include "detlocus/prime_field.hpp"

namespace detlocus {

// A subspace of F_p^n maintained incrementally in reduced row echelon form.
// Rows are stored from their pivot column onward (leading zeros dropped).
class SpanBasis {
public:
    SpanBasis(const PrimeField& f, size_t ambient) : f_(&f), n_(ambient), pivot_row_(ambient, -1) {}

    size_t ambient() const { return n_; }
    size_t dim() const { return rows_.size(); }

    // Adds v to the span; returns true if the dimension grew. Keeps RREF.
    bool add(std::vector<uint32_t> v);

    // Subtracts the canonical projection onto the span; the residual is the
    // canonical representative of v modulo the span.
    void reduce_inplace(std::vector<uint32_t>& v) const;
    std::vector<uint32_t> reduce(std::vector<uint32_t> v) const {
        reduce_inplace(v);
        return v;
    }
    bool contains(std::vector<uint32_t> v) const;

    // Coefficients of v as a combination of the basis rows; nullopt if v is
    // not in the span.
    std::optional<std::vector<uint32_t>> coords(std::vector<uint32_t> v) const;

    int pivot_row_of_col(size_t col) const { return pivot_row_[col]; }
    size_t pivot_col(size_t row) const { return pivots_[row]; }
    // Full-length copy of basis row i.
    std::vector<uint32_t> row(size_t i) const;
    const std::vector<size_t>& pivot_cols() const { return pivots_; }
    // Ambient columns that are not pivot columns, in increasing order.
    std::vector<size_t> free_cols() const;

private:
    const PrimeField* f_;
    size_t n_;
    std::vector<std::vector<uint32_t>> rows_;  // rows_[i] holds cols [pivots_[i], n)
    std::vector<size_t> pivots_;               // increasing
    std::vector<int> pivot_row_;               // column -> row index or -1
};

// Canonical basis of a subquotient U/V of F_p^n: spans of U-vectors reduced
// modulo an echelon V. If U covers everything, pass no generators and use
// full_quotient() instead.
class SubquotientBasis {
public:
    // quotient of the full ambient space by V
    static SubquotientBasis full_quotient(const PrimeField& f, const SpanBasis& v);
    // quotient span(u_rows)/V, requires V ⊆ span(u_rows) + V
    static SubquotientBasis subquotient(const PrimeField& f, const SpanBasis& v,
                                        const std::vector<std::vector<uint32_t>>& u_rows);

    size_t dim() const { return basis_.dim(); }
    size_t ambient() const { return basis_.ambient(); }

    // Coordinates of an ambient vector's class; throws if the reduced vector
    // is not in the quotient basis span (element outside U + V).
    std::vector<uint32_t> coords(std::vector<uint32_t> ambient_vec) const;
    // Ambient representative of basis element i (already reduced mod V).
    std::vector<uint32_t> lift(size_t i) const { return basis_.row(i); }

    const SpanBasis& reducer() const { return *v_; }
    const SpanBasis& basis_span() const { return basis_; }

private:
    SubquotientBasis(const PrimeField& f, const SpanBasis& v, size_t ambient)
        : f_(&f), v_(&v), basis_(f, ambient) {}
    const PrimeField* f_;
    const SpanBasis* v_;
    SpanBasis basis_;
};

}  // namespace detlocus
