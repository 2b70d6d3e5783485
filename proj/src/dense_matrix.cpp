#include "detlocus/dense_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace detlocus {

RrefResult rref(const PrimeField& f, DenseMatrix m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
        size_t sel = r;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r) {
            for (size_t j = col; j < m.cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
        }
        uint32_t piv = m.at(r, col);
        if (piv != 1) f.scale(m.row(r) + col, f.inv(piv), m.cols - col);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            uint32_t v = m.at(i, col);
            if (v) f.axpy(m.row(i) + col, m.row(r) + col, f.neg(v), m.cols - col);
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

size_t rank(const PrimeField& f, DenseMatrix m) {
    // forward elimination only
    size_t r = 0;
    for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
        size_t sel = r;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r) {
            for (size_t j = col; j < m.cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
        }
        uint32_t inv_piv = f.inv(m.at(r, col));
        for (size_t i = r + 1; i < m.rows; ++i) {
            uint32_t v = m.at(i, col);
            if (v) f.axpy(m.row(i) + col, m.row(r) + col, f.neg(f.mul(v, inv_piv)), m.cols - col);
        }
        ++r;
    }
    return r;
}

DenseMatrix kernel_basis(const PrimeField& f, const DenseMatrix& m) {
    RrefResult e = rref(f, m);
    std::vector<int> pivot_of_col(m.cols, -1);
    for (size_t i = 0; i < e.pivots.size(); ++i) pivot_of_col[e.pivots[i]] = static_cast<int>(i);
    size_t nk = m.cols - e.pivots.size();
    DenseMatrix basis(nk, m.cols);
    size_t out = 0;
    for (size_t col = 0; col < m.cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        uint32_t* v = basis.row(out);
        v[col] = 1;
        for (size_t i = 0; i < e.pivots.size(); ++i) {
            uint32_t c = e.mat.at(i, col);
            if (c) v[e.pivots[i]] = f.neg(c);
        }
        ++out;
    }
    return basis;
}

std::optional<std::vector<uint32_t>> solve(const PrimeField& f, const DenseMatrix& m,
                                           const std::vector<uint32_t>& rhs) {
    if (rhs.size() != m.rows) throw std::invalid_argument("solve: rhs length != rows");
    DenseMatrix aug(m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = rhs[i];
    }
    RrefResult e = rref(f, std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols) return std::nullopt;
    std::vector<uint32_t> x(m.cols, 0);
    for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.mat.at(i, m.cols);
    return x;
}

DenseMatrix transpose(const DenseMatrix& m) {
    DenseMatrix t(m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    }
    return t;
}

namespace {

// Largest number of (p-1)^2 products an uint64 accumulator can take.
size_t acc_chunk(uint32_t p) {
    uint64_t sq = static_cast<uint64_t>(p - 1) * (p - 1);
    uint64_t n = ~0ull / sq;
    return n > (1ull << 32) ? static_cast<size_t>(1ull << 32) : static_cast<size_t>(n);
}

}  // namespace

DenseMatrix matmul(const PrimeField& f, const DenseMatrix& x, const DenseMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
    DenseMatrix out(x.rows, y.cols);
    const uint64_t p = f.p();
    const size_t chunk = acc_chunk(f.p());
    std::vector<uint64_t> acc(y.cols);
    for (size_t i = 0; i < x.rows; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const uint32_t* xi = x.row(i);
        size_t since_reduce = 0;
        for (size_t k = 0; k < x.cols; ++k) {
            uint64_t v = xi[k];
            if (!v) continue;
            const uint32_t* yk = y.row(k);
            for (size_t j = 0; j < y.cols; ++j) acc[j] += v * yk[j];
            if (++since_reduce == chunk) {
                for (size_t j = 0; j < y.cols; ++j) acc[j] %= p;
                since_reduce = 0;
            }
        }
        uint32_t* oi = out.row(i);
        for (size_t j = 0; j < y.cols; ++j) oi[j] = static_cast<uint32_t>(acc[j] % p);
    }
    return out;
}

void accumulate_matvec(const PrimeField& f, const DenseMatrix& m, const uint32_t* x, uint32_t* y) {
    const uint64_t p = f.p();
    const size_t chunk = acc_chunk(f.p());
    for (size_t i = 0; i < m.rows; ++i) {
        uint64_t acc = 0;
        const uint32_t* mi = m.row(i);
        size_t since_reduce = 0;
        for (size_t j = 0; j < m.cols; ++j) {
            acc += static_cast<uint64_t>(mi[j]) * x[j];
            if (++since_reduce == chunk) {
                acc %= p;
                since_reduce = 0;
            }
        }
        y[i] = f.add(y[i], static_cast<uint32_t>(acc % p));
    }
}

std::vector<uint32_t> matvec(const PrimeField& f, const DenseMatrix& m,
                             const std::vector<uint32_t>& v) {
    if (v.size() != m.cols) throw std::invalid_argument("matvec: shape mismatch");
    std::vector<uint32_t> out(m.rows, 0);
    const uint64_t p = f.p();
    const size_t chunk = acc_chunk(f.p());
    for (size_t i = 0; i < m.rows; ++i) {
        uint64_t acc = 0;
        const uint32_t* mi = m.row(i);
        size_t since_reduce = 0;
        for (size_t j = 0; j < m.cols; ++j) {
            acc += static_cast<uint64_t>(mi[j]) * v[j];
            if (++since_reduce == chunk) {
                acc %= p;
                since_reduce = 0;
            }
        }
        out[i] = static_cast<uint32_t>(acc % p);
    }
    return out;
}

}  // namespace detlocus
