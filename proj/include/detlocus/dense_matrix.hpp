#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "detlocus/prime_field.hpp"

namespace detlocus {

// Dense row-major matrix over F_p. Entries are residues in [0, p); the field
// context travels separately with each operation.
struct DenseMatrix {
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    DenseMatrix() = default;
    DenseMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    uint32_t* row(size_t i) { return a.data() + i * cols; }
    const uint32_t* row(size_t i) const { return a.data() + i * cols; }
    uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
    uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }

    static DenseMatrix identity(size_t n) {
        DenseMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    bool operator==(const DenseMatrix& o) const = default;
};

struct RrefResult {
    DenseMatrix mat;             // reduced row echelon form
    std::vector<size_t> pivots;  // pivot column per pivot row
};

// In-place Gaussian elimination with partial pivoting by first nonzero entry.
// Fully reduced (pivots normalized to 1, zero above and below); deterministic.
RrefResult rref(const PrimeField& f, DenseMatrix m);

size_t rank(const PrimeField& f, DenseMatrix m);

// Rows form a basis of the right null space {x : m x = 0}; canonical basis
// read off the RREF (one row per free column). Row count = cols - rank.
DenseMatrix kernel_basis(const PrimeField& f, const DenseMatrix& m);

// Some x with m x = rhs, or nullopt. rhs length must equal m.rows.
std::optional<std::vector<uint32_t>> solve(const PrimeField& f, const DenseMatrix& m,
                                           const std::vector<uint32_t>& rhs);

DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix matmul(const PrimeField& f, const DenseMatrix& x, const DenseMatrix& y);
std::vector<uint32_t> matvec(const PrimeField& f, const DenseMatrix& m,
                             const std::vector<uint32_t>& v);
// y += m x, both already reduced mod p
void accumulate_matvec(const PrimeField& f, const DenseMatrix& m, const uint32_t* x, uint32_t* y);

}  // namespace detlocus
