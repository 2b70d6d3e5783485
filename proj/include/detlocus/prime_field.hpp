#pragma once

#include <cstdint>
#include <stdexcept>

#include "detlocus/kernels.hpp"

namespace detlocus {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic context for F_p. Elements are plain uint32_t residues in [0, p);
// the modulus is checked prime once at construction.
class PrimeField {
public:
    explicit PrimeField(uint32_t p) : p_(p), kernels_(&kernels::select(p)) {
        if (p < 3 || p % 2 == 0 || !is_prime(p)) {
            throw FieldError("modulus must be an odd prime, got " + std::to_string(p));
        }
        if (p >= (1u << 31)) throw FieldError("modulus must be < 2^31");
    }

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1;
        uint32_t base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw FieldError("division by zero in F_p");
        // extended Euclid
        int64_t t = 0, newt = 1;
        int64_t r = p_, newr = a;
        while (newr != 0) {
            int64_t q = r / newr;
            int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<uint32_t>(t);
    }
    // Map an arbitrary signed integer into [0, p).
    uint32_t from_int(int64_t v) const {
        int64_t m = v % static_cast<int64_t>(p_);
        if (m < 0) m += p_;
        return static_cast<uint32_t>(m);
    }

    // dst += c * src (mod p), the elimination workhorse; dispatched kernel.
    void axpy(uint32_t* dst, const uint32_t* src, uint32_t c, size_t len) const {
        kernels_->axpy(dst, src, c, len, p_);
    }
    void scale(uint32_t* dst, uint32_t c, size_t len) const { kernels_->scale(dst, c, len, p_); }
    const char* kernel_name() const { return kernels_->name; }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

private:
    uint32_t p_;
    const kernels::KernelTable* kernels_;
};

}  // namespace detlocus
