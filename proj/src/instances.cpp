#include "detlocus/instances.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include <json.hpp>

namespace detlocus {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

uint64_t spec_fingerprint(const DegreeSpec& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](uint64_t v) { h = splitmix64(h ^ v); };
    mix(static_cast<uint64_t>(s.t));
    mix(static_cast<uint64_t>(s.c));
    mix(static_cast<uint64_t>(s.n));
    for (int v : s.a) mix(static_cast<uint64_t>(v) + 0x100);
    for (int v : s.b) mix(static_cast<uint64_t>(v) + 0x10000);
    return h;
}

}  // namespace

FlagInstance::FlagInstance(DegreeSpec spec, uint32_t prime, uint64_t seed)
    : spec_(std::move(spec)), seed_(seed) {
    if (spec_.n < spec_.c) throw ValidationError("no scheme: instances require n >= c");
    if (!nonempty(spec_)) throw ValidationError("instance of an empty stratum");
    field_ = std::make_unique<PrimeField>(prime);
    ring_ = std::make_unique<PolyRing>(spec_.n, *field_);

    std::mt19937_64 rng(splitmix64(spec_fingerprint(spec_) ^ splitmix64(prime) ^
                                   splitmix64(seed ^ 0x5eedull)));
    auto nonzero_coeff = [&]() -> uint32_t {
        return 1 + static_cast<uint32_t>(rng() % (field_->p() - 1));
    };
    entries_.assign(spec_.t, {});
    for (int i = 0; i < spec_.t; ++i) {
        for (int j = 0; j < spec_.num_cols(); ++j) {
            int d = spec_.a[j] - spec_.b[i];
            if (!spec_.entry_allowed(i, j)) {
                // keep the RNG stream independent of the mask pattern
                entries_[i].push_back(ring_->zero(std::max(d, 0)));
                continue;
            }
            Poly f = ring_->zero(d);
            for (auto& cf : f.c) cf = nonzero_coeff();
            entries_[i].push_back(std::move(f));
        }
    }
    for (int i = 2; i <= spec_.c; ++i) {
        DegreeSpec ls = spec_;
        ls.c = i;
        ls.a.resize(spec_.t + i - 1);
        level_specs_.push_back(std::move(ls));
    }
    minors_.resize(level_specs_.size());
    ideals_.resize(level_specs_.size());
}

void FlagInstance::check_level(int i) const {
    if (i < 2 || i > spec_.c) throw ValidationError("flag level must satisfy 2 <= i <= c");
}

const DegreeSpec& FlagInstance::level_spec(int i) const {
    check_level(i);
    return level_specs_[i - 2];
}

namespace {

// Laplace expansion along the first row of the square submatrix with the
// given rows/columns of entries.
Poly submatrix_det(const PolyRing& ring, const std::vector<std::vector<Poly>>& entries,
                   const std::vector<int>& rows, const std::vector<int>& cols, int deg) {
    if (rows.size() == 1) return entries[rows[0]][cols[0]];
    Poly acc = ring.zero(deg);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t k = 0; k < cols.size(); ++k) {
        const Poly& pivot = entries[rows[0]][cols[k]];
        if (pivot.is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t l = 0; l < cols.size(); ++l) {
            if (l != k) sub_cols.push_back(cols[l]);
        }
        Poly minor = submatrix_det(ring, entries, sub_rows, sub_cols, deg - pivot.deg);
        if (minor.is_zero()) continue;
        Poly term = ring.mul(pivot, minor);
        acc = (k % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
    }
    return acc;
}

}  // namespace

const std::vector<Poly>& FlagInstance::minors(int i) const {
    check_level(i);
    auto& slot = minors_[i - 2];
    if (!slot.empty()) return slot;
    const DegreeSpec& ls = level_specs_[i - 2];
    std::vector<int> rows(spec_.t);
    for (int r = 0; r < spec_.t; ++r) rows[r] = r;
    int64_t bsum = 0;
    for (int bv : spec_.b) bsum += bv;
    std::vector<int> sel;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(sel.size()) == spec_.t) {
            int64_t deg = -bsum;
            for (int idx : sel) deg += spec_.a[idx];
            slot.push_back(submatrix_det(*ring_, entries_, rows, sel, static_cast<int>(deg)));
            return;
        }
        for (int v = start; v < ls.num_cols(); ++v) {
            sel.push_back(v);
            rec(v + 1);
            sel.pop_back();
        }
    };
    rec(0);
    return slot;
}

IdealPieces& FlagInstance::ideal(int i) const {
    check_level(i);
    auto& slot = ideals_[i - 2];
    if (!slot) slot = std::make_unique<IdealPieces>(*ring_, minors(i));
    return *slot;
}

bool FlagInstance::has_zero_column() const {
    for (int j = 0; j < spec_.num_cols(); ++j) {
        bool all_zero = true;
        for (int i = 0; i < spec_.t; ++i) {
            if (!entries_[i][j].is_zero()) all_zero = false;
        }
        if (all_zero) return true;
    }
    return false;
}

std::string FlagInstance::dump_json() const {
    nlohmann::json j;
    j["prime"] = prime();
    j["seed"] = seed_;
    j["t"] = spec_.t;
    j["c"] = spec_.c;
    j["n"] = spec_.n;
    j["a"] = spec_.a;
    j["b"] = spec_.b;
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < spec_.t; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 0; jj < spec_.num_cols(); ++jj) {
            const Poly& f = entries_[i][jj];
            row.push_back({{"degree", f.deg}, {"coeffs", f.c}});
        }
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j.dump(2);
}

HfCertificate hf_certify(const FlagInstance& inst, int cutoff) {
    HfCertificate cert;
    cert.cutoff = cutoff;
    for (int i = 2; i <= inst.spec().c; ++i) {
        const DegreeSpec& ls = inst.level_spec(i);
        for (int v = 0; v <= cutoff; ++v) {
            int64_t expected = hilbert_function(ls, v);
            int64_t got = inst.ideal(i).quotient_dim(v);
            if (expected != got) {
                cert.pass = false;
                cert.failures.push_back({i, v, expected, got});
            }
        }
    }
    return cert;
}

std::unique_ptr<FlagInstance> certified_instance(const DegreeSpec& spec, uint32_t prime,
                                                 uint64_t seed, int cutoff, int tries) {
    for (int k = 0; k < tries; ++k) {
        auto inst = std::make_unique<FlagInstance>(spec, prime, seed + static_cast<uint64_t>(k));
        if (hf_certify(*inst, cutoff).pass) return inst;
    }
    throw std::runtime_error("no certified instance found in " + std::to_string(tries) +
                             " seeds for " + spec.to_string() + " (suspect spec)");
}

int64_t relative_piece_dim(const FlagInstance& inst, int level, int d) {
    if (level < 3) throw ValidationError("relative piece needs a deleted column (level >= 3)");
    return inst.ideal(level).dim(d) - inst.ideal(level - 1).dim(d);
}

bool good_determinantal_flag(const FlagInstance& inst) {
    const DegreeSpec& s = inst.spec();
    const PolyRing& ring = inst.ring();
    // Sub-maximal minor ideal of each (t-1)-row submatrix must cut out a locus
    // of codimension >= c+1, i.e. Krull dimension of the quotient <= n - c,
    // judged from HF differences near the top degree. Best effort only.
    for (int drop = 0; drop < s.t; ++drop) {
        std::vector<int> rows;
        for (int r = 0; r < s.t; ++r) {
            if (r != drop) rows.push_back(r);
        }
        std::vector<std::vector<Poly>> sub_entries(rows.size());
        for (size_t ri = 0; ri < rows.size(); ++ri) {
            for (int j = 0; j < s.num_cols(); ++j) {
                sub_entries[ri].push_back(inst.entry(rows[ri], j));
            }
        }
        std::vector<int> sub_rows(rows.size());
        for (size_t ri = 0; ri < rows.size(); ++ri) sub_rows[ri] = static_cast<int>(ri);

        std::vector<Poly> gens;
        int max_deg = 0;
        std::vector<int> cols;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(cols.size()) == s.t - 1) {
                int64_t dd = 0;
                for (int idx : cols) dd += s.a[idx];
                for (int r : rows) dd -= s.b[r];
                gens.push_back(submatrix_det(ring, sub_entries, sub_rows, cols,
                                             static_cast<int>(dd)));
                max_deg = std::max<int>(max_deg, static_cast<int>(dd));
                return;
            }
            for (int v = start; v < s.num_cols(); ++v) {
                cols.push_back(v);
                rec(v + 1);
                cols.pop_back();
            }
        };
        rec(0);
        IdealPieces sub_ideal(ring, gens);
        int top = max_deg + s.n + 1;
        std::vector<int64_t> hf;
        for (int v = top - s.n - 1; v <= top; ++v) hf.push_back(sub_ideal.quotient_dim(v));
        // Krull dimension estimate: order of the first finite difference that
        // dies at the top degrees.
        int krull = 0;
        std::vector<int64_t> cur = hf;
        while (cur.size() >= 2 && !(cur.back() == 0 && cur[cur.size() - 2] == 0)) {
            std::vector<int64_t> next(cur.size() - 1);
            for (size_t k = 0; k + 1 < cur.size(); ++k) next[k] = cur[k + 1] - cur[k];
            cur = std::move(next);
            ++krull;
        }
        if (krull > s.n - s.c) return false;
    }
    return true;
}

}  // namespace detlocus
