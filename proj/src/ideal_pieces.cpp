#include "detlocus/ideal_pieces.hpp"

#include <stdexcept>

namespace detlocus {

IdealPieces::IdealPieces(const PolyRing& ring, std::vector<Poly> gens) : ring_(&ring) {
    for (auto& g : gens) {
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

const SpanBasis& IdealPieces::piece(int d) const {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return *it->second;
    const PrimeField& f = ring_->field();
    auto span = std::make_unique<SpanBasis>(f, static_cast<size_t>(ring_->dim(d)));
    const int n = ring_->n();
    for (const Poly& g : gens_) {
        int k = d - g.deg;
        if (k < 0) continue;
        const auto& gen_basis = ring_->basis(g.deg);
        const auto& mults = ring_->basis(k);
        std::vector<uint32_t> row;
        for (const Exponents& mu : mults) {
            row.assign(static_cast<size_t>(ring_->dim(d)), 0);
            for (size_t i = 0; i < g.c.size(); ++i) {
                if (g.c[i]) row[monomial_mul_rank(n, gen_basis[i], mu)] = g.c[i];
            }
            span->add(std::move(row));
        }
    }
    auto* ptr = span.get();
    pieces_.emplace(d, std::move(span));
    return *ptr;
}

int64_t IdealPieces::dim(int d) const {
    if (d < 0) return 0;
    return static_cast<int64_t>(piece(d).dim());
}

int64_t IdealPieces::quotient_dim(int d) const {
    if (d < 0) return 0;
    return ring_->dim(d) - dim(d);
}

const std::vector<size_t>& IdealPieces::quotient_basis_cols(int d) const {
    auto it = free_cols_.find(d);
    if (it == free_cols_.end()) it = free_cols_.emplace(d, piece(d).free_cols()).first;
    return it->second;
}

std::vector<uint32_t> IdealPieces::class_coords(const Poly& f) const {
    const SpanBasis& span = piece(f.deg);
    std::vector<uint32_t> v = f.c;
    span.reduce_inplace(v);
    const auto& cols = quotient_basis_cols(f.deg);
    std::vector<uint32_t> out(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) out[i] = v[cols[i]];
    return out;
}

Poly IdealPieces::class_lift(int d, const std::vector<uint32_t>& coords) const {
    const auto& cols = quotient_basis_cols(d);
    if (coords.size() != cols.size()) throw std::invalid_argument("class_lift: bad coords length");
    Poly out = ring_->zero(d);
    for (size_t i = 0; i < cols.size(); ++i) out.c[cols[i]] = coords[i];
    return out;
}

std::vector<uint32_t> IdealPieces::multiply_into_quotient(const Poly& f, const Poly& g) const {
    return class_coords(ring_->mul(f, g));
}

}  // namespace detlocus
