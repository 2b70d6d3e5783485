#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "detlocus/formulas.hpp"
#include "detlocus/resolution.hpp"

namespace detlocus {

struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named degree-0 Hom/Ext dimensions for an instance. Keys:
//   hom_IY_IXY      dim Hom_R(I_Y, I_{X/Y})_0
//   hom_IX_A        dim Hom_R(I_X, A)_0        (tangent dimension)
//   hom_IXY_A       dim Hom_B(I_{X/Y}, A)_0
//   h0_normal_Y     dim Hom_R(I_Y, B)_0
//   ext1_conormalY_IXY / ext1_conormalY_B / ker_tau_XY
//   ext1_IXY_IXY / ext1_IXY_B / ker_rho1 / ext1_IXY_A
//   ext2_IXY_IXY / ext2_IXY_B / ker_rho2
//   ext1_conormalX_A
//   mb_dim0         dim M_B(a_max)_0 at the instance level
//   dim_im_delta    solved from the tangent-space bookkeeping identity
//   ker_tau_YV / ext1_IYV_B   (flag level below, c >= 4 only)
struct ExtReport {
    std::map<std::string, int64_t> values;
    uint32_t prime = 0;
    uint64_t seed = 0;
    int cutoff = 0;

    bool has(const std::string& k) const { return values.count(k) != 0; }
    int64_t get(const std::string& k) const;
};

struct ExtOptions {
    int cutoff = -1;  // -1: auto = flag max twist magnitude + n + 2
    int margin = 3;
    std::set<std::string> targets;  // empty = every target applicable to the spec
    bool verify_identities = true;
};

const std::set<std::string>& all_ext_targets();

// Holds the rings, modules and resolutions of one instance so repeated
// queries share caches.
class PairEngine {
public:
    PairEngine(const FlagInstance& inst, const ExtOptions& opt);
    ~PairEngine();

    int64_t value(const std::string& target);
    int cutoff() const { return cutoff_; }

    PairEngine(const PairEngine&) = delete;
    PairEngine& operator=(const PairEngine&) = delete;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    int cutoff_ = 0;
};

ExtReport compute_ext_report(const FlagInstance& inst, const ExtOptions& opt);

// Degree-0 homs from the cokernel of the full transposed matrix map into
// R(a_max): kernel of g |-> (matrix) g on degree-matched polynomial vectors.
// Equals the top correction term K_c for generic instances.
int64_t coker_hom0_readoff(const FlagInstance& inst);

// Cokernel module of the full matrix (twisted by a_max), for HF cross-checks.
std::unique_ptr<MatrixCokerModule> make_full_coker_module(const FlagInstance& inst,
                                                          const PolyCoefRing& r);

}  // namespace detlocus
