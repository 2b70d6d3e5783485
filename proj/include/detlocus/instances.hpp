#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "detlocus/complexes.hpp"
#include "detlocus/degree_spec.hpp"
#include "detlocus/ideal_pieces.hpp"
#include "detlocus/poly.hpp"

namespace detlocus {

// A random determinantal instance over F_p for a degree spec: the t x (t+c-1)
// matrix of dense homogeneous forms (respecting the minimality mask), the
// ideals of maximal minors of every truncation in the column-deletion flag
// X_c ⊂ X_{c-1} ⊂ ... ⊂ X_2, and their cached graded pieces.
//
// Entries depend deterministically on (spec, prime, seed).
class FlagInstance {
public:
    FlagInstance(DegreeSpec spec, uint32_t prime, uint64_t seed);

    const DegreeSpec& spec() const { return spec_; }
    uint32_t prime() const { return field_->p(); }
    uint64_t seed() const { return seed_; }
    const PrimeField& field() const { return *field_; }
    const PolyRing& ring() const { return *ring_; }

    // spec of level i (first t+i-1 columns), 2 <= i <= c
    const DegreeSpec& level_spec(int i) const;
    // matrix entry f_{ij} (0-based row/col); zero when masked
    const Poly& entry(int i, int j) const { return entries_[i][j]; }

    // maximal minors of the level-i truncation (zero minors dropped from the
    // ideal but listed here)
    const std::vector<Poly>& minors(int i) const;
    IdealPieces& ideal(int i) const;
    bool has_zero_column() const;

    std::string dump_json() const;

private:
    void check_level(int i) const;

    DegreeSpec spec_;
    uint64_t seed_;
    std::unique_ptr<PrimeField> field_;
    std::unique_ptr<PolyRing> ring_;
    std::vector<std::vector<Poly>> entries_;
    std::vector<DegreeSpec> level_specs_;              // index i-2
    mutable std::vector<std::vector<Poly>> minors_;    // index i-2
    mutable std::vector<std::unique_ptr<IdealPieces>> ideals_;  // index i-2
};

struct HfCertificate {
    bool pass = true;
    int cutoff = 0;
    struct Failure {
        int level;
        int degree;
        int64_t expected;
        int64_t got;
    };
    std::vector<Failure> failures;
};

// Checks quotient Hilbert functions of every flag level against the
// Eagon-Northcott prediction for all degrees <= cutoff.
HfCertificate hf_certify(const FlagInstance& inst, int cutoff);

// Reseeding wrapper: returns an instance whose certificate passes, trying
// seeds seed, seed+1, ... (at most `tries`). Throws if all fail.
std::unique_ptr<FlagInstance> certified_instance(const DegreeSpec& spec, uint32_t prime,
                                                 uint64_t seed, int cutoff, int tries = 3);

// dim (I_{X_level})_d / (I_{X_{level-1}})_d, 3 <= level <= c.
int64_t relative_piece_dim(const FlagInstance& inst, int level, int d);

// Best-effort numeric witness that the instance is good determinantal (and
// not just standard): the sub-maximal minors of each (t-1)-row submatrix cut
// out a locus of codimension >= c+1, judged from Hilbert-function growth.
bool good_determinantal_flag(const FlagInstance& inst);

}  // namespace detlocus
