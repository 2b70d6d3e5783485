#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "detlocus/modules.hpp"
#include "detlocus/ring_ctx.hpp"

namespace detlocus {

struct CutoffError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResOptions {
    int hard_cutoff = 40;
    // a syzygy scan stops once this many consecutive degrees bring no new
    // minimal generators
    int margin = 3;
    // scan step 0 at least this far (e.g. the largest expected generator)
    int min_scan0 = std::numeric_limits<int>::min();
};

struct ResStep {
    std::vector<int> gen_degrees;                  // ascending
    std::vector<std::vector<uint32_t>> gen_vecs;   // coords in N (step 0) or F_{k-1}
    bool complete = true;
    int scan_top = 0;
    int open_degree = -1;  // first degree where bookkeeping is still open
};

// Minimal graded free resolution of a module N over S = R or R/I, computed
// degree by degree: new generators of each syzygy kernel are found as the
// complement of S_1 times the previous kernel piece. Steps extend lazily.
class Resolution {
public:
    Resolution(const CoefRing& s, const GradedModule& n, ResOptions opt);

    const ResStep& step(int k);
    const FreeModulePieces& free_mod(int k);
    const CoefRing& ring() const { return *s_; }
    const GradedModule& target() const { return *n_; }
    const ResOptions& options() const { return opt_; }

    // throws CutoffError unless steps 0..k are complete
    void require_complete(int k);

private:
    void compute_step(int k);

    const CoefRing* s_;
    const GradedModule* n_;
    ResOptions opt_;
    std::vector<ResStep> steps_;
    std::vector<std::unique_ptr<FreeModulePieces>> free_mods_;
};

// Degree-0 Hom data against a target module N2.
struct HomBlocks {
    std::vector<int> degrees;    // block degrees (gen degrees of the step)
    std::vector<int64_t> dims;   // dim N2 at those degrees
    std::vector<int64_t> offsets;
    int64_t total = 0;
};
HomBlocks hom_blocks(const ResStep& st, const GradedModule& n2);

// Matrix of Hom(F_k, N2)_0 -> Hom(F_{k+1}, N2)_0 (composition with the
// differential).
DenseMatrix hom_transition(Resolution& res, int k, const GradedModule& n2);

int64_t hom0_dim(Resolution& res, const GradedModule& n2);
struct CocycleBasis {
    HomBlocks blocks;
    DenseMatrix basis;  // rows = elements of ⊕ N2_{g_k}
};
CocycleBasis hom0_basis(Resolution& res, const GradedModule& n2);

struct ExtSpace {
    HomBlocks blocks;          // C^i block structure
    DenseMatrix cocycles;      // rows span ker(C^i -> C^{i+1})
    DenseMatrix coboundaries;  // rows span im(C^{i-1} -> C^i)
    int64_t dim = 0;
};
ExtSpace ext_space(Resolution& res, int i, const GradedModule& n2);
int64_t ext_dim(Resolution& res, int i, const GradedModule& n2);

// dim ker of the map Ext^i(M, N2) -> Ext^i(M, N3) induced by a degreewise
// inclusion iota(d): N2_d -> N3_d.
int64_t induced_ext_kernel_dim(Resolution& res, int i, const GradedModule& n2,
                               const GradedModule& n3,
                               const std::function<DenseMatrix(int)>& iota);

}  // namespace detlocus
