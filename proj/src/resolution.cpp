#include "detlocus/resolution.hpp"

#include <algorithm>

namespace detlocus {

namespace {

// Values of monomial actions X^mu(w) for all monomials mu of the current
// layer degree, advanced one degree at a time through apply_var.
class MonomialActionDP {
public:
    MonomialActionDP(const PolyRing& ring, const GradedModule& t, int base_deg,
                     std::vector<uint32_t> w)
        : ring_(&ring), t_(&t), base_(base_deg), e_(0) {
        layer_.push_back(std::move(w));
    }

    int e() const { return e_; }

    void advance() {
        const auto& next_basis = ring_->basis(e_ + 1);
        std::vector<std::vector<uint32_t>> next(next_basis.size());
        const size_t out_dim = static_cast<size_t>(t_->dim(base_ + e_ + 1));
        for (size_t i = 0; i < next_basis.size(); ++i) {
            Exponents mu = next_basis[i];
            int v = 0;
            while (mu[v] == 0) ++v;
            --mu[v];
            const auto& parent = layer_[monomial_rank(ring_->n(), mu)];
            next[i].assign(out_dim, 0);
            if (!parent.empty()) t_->apply_var(v, base_ + e_, parent.data(), next[i].data());
        }
        layer_ = std::move(next);
        ++e_;
    }

    const std::vector<uint32_t>& value(size_t mon_rank) const { return layer_[mon_rank]; }

private:
    const PolyRing* ring_;
    const GradedModule* t_;
    int base_;
    int e_;
    std::vector<std::vector<uint32_t>> layer_;
};

// Matrix-valued variant: X^mu as a matrix acting on the whole piece T_base.
class MonomialMatrixDP {
public:
    MonomialMatrixDP(const PolyRing& ring, const PrimeField& f, const GradedModule& t,
                     int base_deg)
        : ring_(&ring), f_(&f), t_(&t), base_(base_deg), e_(0) {
        size_t d0 = static_cast<size_t>(std::max<int64_t>(t.dim(base_deg), 0));
        layer_.push_back(DenseMatrix::identity(d0));
    }

    int e() const { return e_; }

    void advance() {
        const auto& next_basis = ring_->basis(e_ + 1);
        std::vector<DenseMatrix> vm;
        for (int v = 0; v <= ring_->n(); ++v) vm.push_back(t_->var_matrix(*f_, v, base_ + e_));
        std::vector<DenseMatrix> next(next_basis.size());
        for (size_t i = 0; i < next_basis.size(); ++i) {
            Exponents mu = next_basis[i];
            int v = 0;
            while (mu[v] == 0) ++v;
            --mu[v];
            const DenseMatrix& parent = layer_[monomial_rank(ring_->n(), mu)];
            next[i] = matmul(*f_, vm[v], parent);
        }
        layer_ = std::move(next);
        ++e_;
    }

    const DenseMatrix& value(size_t mon_rank) const { return layer_[mon_rank]; }

private:
    const PolyRing* ring_;
    const PrimeField* f_;
    const GradedModule* t_;
    int base_;
    int e_;
    std::vector<DenseMatrix> layer_;
};

}  // namespace

Resolution::Resolution(const CoefRing& s, const GradedModule& n, ResOptions opt)
    : s_(&s), n_(&n), opt_(opt) {}

const ResStep& Resolution::step(int k) {
    while (static_cast<int>(steps_.size()) <= k) compute_step(static_cast<int>(steps_.size()));
    return steps_[k];
}

const FreeModulePieces& Resolution::free_mod(int k) {
    step(k);
    while (static_cast<int>(free_mods_.size()) <= k) {
        int idx = static_cast<int>(free_mods_.size());
        free_mods_.push_back(std::make_unique<FreeModulePieces>(*s_, steps_[idx].gen_degrees));
    }
    return *free_mods_[k];
}

void Resolution::require_complete(int k) {
    for (int i = 0; i <= k; ++i) {
        const ResStep& st = step(i);
        if (!st.complete) {
            throw CutoffError("resolution step " + std::to_string(i) +
                              " bookkeeping still open at degree " +
                              std::to_string(st.open_degree) +
                              " (raise the cutoff)");
        }
    }
}

void Resolution::compute_step(int k) {
    const PrimeField& f = s_->field();
    const PolyRing& ring = s_->poly_ring();
    ResStep st;

    if (k == 0) {
        // minimal generators of N: complement of S_1 * N_{d-1} in N_d
        int d = n_->lowest_degree();
        int last_activity = std::max(d - 1, opt_.min_scan0 - opt_.margin);
        bool saw_nonzero = false;
        while (d <= opt_.hard_cutoff) {
            int64_t nd = n_->dim(d);
            if (nd > 0) {
                saw_nonzero = true;
                SpanBasis span(f, static_cast<size_t>(nd));
                int64_t prev = n_->dim(d - 1);
                if (prev > 0) {
                    std::vector<uint32_t> x(static_cast<size_t>(prev), 0);
                    std::vector<uint32_t> y(static_cast<size_t>(nd));
                    for (int v = 0; v <= ring.n(); ++v) {
                        for (int64_t i = 0; i < prev; ++i) {
                            x[static_cast<size_t>(i)] = 1;
                            std::fill(y.begin(), y.end(), 0);
                            n_->apply_var(v, d - 1, x.data(), y.data());
                            x[static_cast<size_t>(i)] = 0;
                            span.add(y);
                        }
                    }
                }
                for (int64_t i = 0; i < nd; ++i) {
                    std::vector<uint32_t> e(static_cast<size_t>(nd), 0);
                    e[static_cast<size_t>(i)] = 1;
                    if (span.add(e)) {
                        std::vector<uint32_t> gen(static_cast<size_t>(nd), 0);
                        gen[static_cast<size_t>(i)] = 1;
                        st.gen_degrees.push_back(d);
                        st.gen_vecs.push_back(std::move(gen));
                        last_activity = d;
                    }
                }
            } else if (!saw_nonzero) {
                // keep looking for the first nonzero piece
                last_activity = std::max(last_activity, d);
            }
            if (d >= last_activity + opt_.margin) break;
            ++d;
        }
        st.scan_top = std::min(d, opt_.hard_cutoff);
        if (d > opt_.hard_cutoff && last_activity + opt_.margin > opt_.hard_cutoff) {
            st.complete = false;
            st.open_degree = opt_.hard_cutoff;
        }
        steps_.push_back(std::move(st));
        return;
    }

    // step k >= 1: kernel of (F_{k-1})_d -> parent_d
    const ResStep& prev_step = step(k - 1);
    const FreeModulePieces& fm = free_mod(k - 1);
    const GradedModule* parent = (k == 1) ? n_ : static_cast<const GradedModule*>(&free_mod(k - 2));

    if (prev_step.gen_degrees.empty()) {
        st.scan_top = 0;
        steps_.push_back(std::move(st));
        return;
    }
    const int min_r = *std::min_element(prev_step.gen_degrees.begin(), prev_step.gen_degrees.end());
    const int max_r = *std::max_element(prev_step.gen_degrees.begin(), prev_step.gen_degrees.end());

    std::vector<std::unique_ptr<MonomialActionDP>> dps;
    for (size_t l = 0; l < prev_step.gen_vecs.size(); ++l) {
        dps.push_back(std::make_unique<MonomialActionDP>(ring, *parent, prev_step.gen_degrees[l],
                                                         prev_step.gen_vecs[l]));
    }

    std::vector<std::vector<uint32_t>> prev_kernel;  // rows at degree d-1
    int d = min_r;
    int last_activity = max_r;
    while (d <= opt_.hard_cutoff) {
        const int64_t fdim = fm.dim(d);
        const int64_t tdim = parent->dim(d);
        // assemble the evaluation matrix column by column
        DenseMatrix m(static_cast<size_t>(tdim), static_cast<size_t>(fdim));
        size_t col = 0;
        for (size_t l = 0; l < dps.size(); ++l) {
            int e = d - prev_step.gen_degrees[l];
            if (e < 0 || s_->dim(e) == 0) continue;
            while (dps[l]->e() < e) dps[l]->advance();
            const auto& ranks = s_->basis_ranks(e);
            for (size_t idx = 0; idx < ranks.size(); ++idx, ++col) {
                const auto& val = dps[l]->value(ranks[idx]);
                for (size_t rr = 0; rr < val.size(); ++rr) m.at(rr, col) = val[rr];
            }
        }
        DenseMatrix kern = kernel_basis(f, m);  // rows in (F_{k-1})_d coords

        // span of x_v * (previous kernel piece)
        SpanBasis span(f, static_cast<size_t>(fdim));
        std::vector<uint32_t> y(static_cast<size_t>(fdim));
        for (const auto& row : prev_kernel) {
            for (int v = 0; v <= ring.n(); ++v) {
                std::fill(y.begin(), y.end(), 0);
                fm.apply_var(v, d - 1, row.data(), y.data());
                span.add(y);
            }
        }
        for (size_t i = 0; i < kern.rows; ++i) {
            std::vector<uint32_t> row(kern.row(i), kern.row(i) + kern.cols);
            if (span.add(row)) {
                std::vector<uint32_t> gen(kern.row(i), kern.row(i) + kern.cols);
                st.gen_degrees.push_back(d);
                st.gen_vecs.push_back(std::move(gen));
                last_activity = d;
            }
        }
        prev_kernel.clear();
        for (size_t i = 0; i < kern.rows; ++i) {
            prev_kernel.emplace_back(kern.row(i), kern.row(i) + kern.cols);
        }
        if (d >= last_activity + opt_.margin) break;
        ++d;
    }
    st.scan_top = std::min(d, opt_.hard_cutoff);
    if (d > opt_.hard_cutoff && last_activity + opt_.margin > opt_.hard_cutoff) {
        st.complete = false;
        st.open_degree = opt_.hard_cutoff;
    }
    steps_.push_back(std::move(st));
}

HomBlocks hom_blocks(const ResStep& st, const GradedModule& n2) {
    HomBlocks hb;
    for (int g : st.gen_degrees) {
        hb.degrees.push_back(g);
        hb.offsets.push_back(hb.total);
        int64_t dmm = n2.dim(g);
        hb.dims.push_back(dmm);
        hb.total += dmm;
    }
    return hb;
}

DenseMatrix hom_transition(Resolution& res, int k, const GradedModule& n2) {
    const ResStep& src = res.step(k);
    const ResStep& dst = res.step(k + 1);
    const CoefRing& s = res.ring();
    const PolyRing& ring = s.poly_ring();
    const PrimeField& f = s.field();
    HomBlocks src_b = hom_blocks(src, n2);
    HomBlocks dst_b = hom_blocks(dst, n2);
    DenseMatrix out(static_cast<size_t>(dst_b.total), static_cast<size_t>(src_b.total));
    if (dst_b.total == 0 || src_b.total == 0) return out;

    const FreeModulePieces& fm = res.free_mod(k);
    for (size_t l = 0; l < src.gen_degrees.size(); ++l) {
        if (src_b.dims[l] == 0) continue;
        int r_l = src.gen_degrees[l];
        MonomialMatrixDP dp(ring, f, n2, r_l);
        int max_e = 0;
        for (int rlp : dst.gen_degrees) max_e = std::max(max_e, rlp - r_l);
        for (int e = 0; e <= max_e; ++e) {
            if (e > 0) dp.advance();
            const auto& ranks = s.basis_ranks(e);
            if (ranks.empty()) continue;
            for (size_t lp = 0; lp < dst.gen_degrees.size(); ++lp) {
                if (dst.gen_degrees[lp] - r_l != e || dst_b.dims[lp] == 0) continue;
                // coefficient block of generator lp over source generator l
                const auto& gv = dst.gen_vecs[lp];
                int64_t off = fm.block_offset(dst.gen_degrees[lp], l);
                DenseMatrix acc(static_cast<size_t>(dst_b.dims[lp]),
                                static_cast<size_t>(src_b.dims[l]));
                bool nonzero = false;
                for (size_t idx = 0; idx < ranks.size(); ++idx) {
                    uint32_t coef = gv[static_cast<size_t>(off) + idx];
                    if (!coef) continue;
                    nonzero = true;
                    const DenseMatrix& mv = dp.value(ranks[idx]);
                    for (size_t rr = 0; rr < acc.rows; ++rr) {
                        f.axpy(acc.row(rr), mv.row(rr), coef, acc.cols);
                    }
                }
                if (!nonzero) continue;
                for (size_t rr = 0; rr < acc.rows; ++rr) {
                    for (size_t cc = 0; cc < acc.cols; ++cc) {
                        out.at(static_cast<size_t>(dst_b.offsets[lp]) + rr,
                               static_cast<size_t>(src_b.offsets[l]) + cc) = acc.at(rr, cc);
                    }
                }
            }
        }
    }
    return out;
}

int64_t hom0_dim(Resolution& res, const GradedModule& n2) {
    res.require_complete(1);
    DenseMatrix d0 = hom_transition(res, 0, n2);
    return static_cast<int64_t>(d0.cols) - static_cast<int64_t>(rank(res.ring().field(), d0));
}

CocycleBasis hom0_basis(Resolution& res, const GradedModule& n2) {
    res.require_complete(1);
    CocycleBasis cb;
    cb.blocks = hom_blocks(res.step(0), n2);
    DenseMatrix d0 = hom_transition(res, 0, n2);
    cb.basis = kernel_basis(res.ring().field(), d0);
    return cb;
}

ExtSpace ext_space(Resolution& res, int i, const GradedModule& n2) {
    if (i < 1) throw std::invalid_argument("ext_space: i >= 1 required");
    res.require_complete(i + 1);
    const PrimeField& f = res.ring().field();
    ExtSpace es;
    es.blocks = hom_blocks(res.step(i), n2);
    DenseMatrix d_in = hom_transition(res, i - 1, n2);   // C^{i-1} -> C^i
    DenseMatrix d_out = hom_transition(res, i, n2);      // C^i -> C^{i+1}
    // composition must vanish
    DenseMatrix comp = matmul(f, d_out, d_in);
    for (uint32_t v : comp.a) {
        if (v != 0) throw std::logic_error("hom complex composition is nonzero (bug)");
    }
    es.cocycles = kernel_basis(f, d_out);
    es.coboundaries = transpose(d_in);
    int64_t brank = static_cast<int64_t>(rank(f, es.coboundaries));
    es.dim = static_cast<int64_t>(es.cocycles.rows) - brank;
    return es;
}

int64_t ext_dim(Resolution& res, int i, const GradedModule& n2) {
    return ext_space(res, i, n2).dim;
}

int64_t induced_ext_kernel_dim(Resolution& res, int i, const GradedModule& n2,
                               const GradedModule& n3,
                               const std::function<DenseMatrix(int)>& iota) {
    const PrimeField& f = res.ring().field();
    ExtSpace src = ext_space(res, i, n2);
    ExtSpace dst = ext_space(res, i, n3);
    // per-block inclusion matrices
    std::vector<DenseMatrix> incl;
    for (int g : src.blocks.degrees) incl.push_back(iota(g));
    auto push_forward = [&](const uint32_t* z) {
        std::vector<uint32_t> out(static_cast<size_t>(dst.blocks.total), 0);
        for (size_t l = 0; l < incl.size(); ++l) {
            const DenseMatrix& m = incl[l];
            for (size_t rr = 0; rr < m.rows; ++rr) {
                uint64_t acc = 0;
                for (size_t cc = 0; cc < m.cols; ++cc) {
                    acc += static_cast<uint64_t>(m.at(rr, cc)) *
                           z[static_cast<size_t>(src.blocks.offsets[l]) + cc];
                }
                out[static_cast<size_t>(dst.blocks.offsets[l]) + rr] =
                    static_cast<uint32_t>(acc % f.p());
            }
        }
        return out;
    };

    SpanBasis dst_cob(f, static_cast<size_t>(dst.blocks.total));
    for (size_t i2 = 0; i2 < dst.coboundaries.rows; ++i2) {
        dst_cob.add(std::vector<uint32_t>(dst.coboundaries.row(i2),
                                          dst.coboundaries.row(i2) + dst.coboundaries.cols));
    }
    // sanity: coboundaries of the source must land in coboundaries of the target
    for (size_t i2 = 0; i2 < src.coboundaries.rows; ++i2) {
        auto img = push_forward(src.coboundaries.row(i2));
        if (!dst_cob.contains(img)) {
            throw std::logic_error("induced map does not preserve coboundaries (bug)");
        }
    }
    // rank of the induced map Z_src -> C^i(N3)/B(N3)
    SpanBasis image_span(f, static_cast<size_t>(dst.blocks.total));
    int64_t img_rank = 0;
    for (size_t i2 = 0; i2 < src.cocycles.rows; ++i2) {
        auto img = dst_cob.reduce(push_forward(src.cocycles.row(i2)));
        if (image_span.add(std::move(img))) ++img_rank;
    }
    SpanBasis src_cob(f, static_cast<size_t>(src.blocks.total));
    int64_t src_cob_dim = 0;
    for (size_t i2 = 0; i2 < src.coboundaries.rows; ++i2) {
        if (src_cob.add(std::vector<uint32_t>(src.coboundaries.row(i2),
                                              src.coboundaries.row(i2) + src.coboundaries.cols))) {
            ++src_cob_dim;
        }
    }
    return static_cast<int64_t>(src.cocycles.rows) - img_rank - src_cob_dim;
}

}  // namespace detlocus
