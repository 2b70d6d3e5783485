#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace detlocus::kernels {

// dst[i] = (dst[i] + c * src[i]) mod p, with 0 <= c < p and all entries in [0,p).
using AxpyFn = void (*)(uint32_t* dst, const uint32_t* src, uint32_t c, size_t len, uint32_t p);
// dst[i] = (dst[i] * c) mod p.
using ScaleFn = void (*)(uint32_t* dst, uint32_t c, size_t len, uint32_t p);

struct KernelTable {
    AxpyFn axpy;
    ScaleFn scale;
    const char* name;
};

// Reference implementations (plain 64-bit arithmetic, any odd p < 2^31).
void axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c, size_t len, uint32_t p);
void scale_scalar(uint32_t* dst, uint32_t c, size_t len, uint32_t p);

#if defined(DETLOCUS_BUILD_AVX2)
// AVX2 variants, exact for p < 2^26 (double-precision product + floor reduction).
void axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c, size_t len, uint32_t p);
void scale_avx2(uint32_t* dst, uint32_t c, size_t len, uint32_t p);
bool cpu_has_avx2();
#endif
#if defined(DETLOCUS_BUILD_NEON)
void axpy_neon(uint32_t* dst, const uint32_t* src, uint32_t c, size_t len, uint32_t p);
void scale_neon(uint32_t* dst, uint32_t c, size_t len, uint32_t p);
#endif

// Table selected at startup for the given modulus. Variants that cannot handle
// the modulus (or are unsupported by the CPU) fall back to the scalar reference.
const KernelTable& select(uint32_t p);
std::string active_kernel_name(uint32_t p);

}  // namespace detlocus::kernels
