#include "detlocus/kernels.hpp"

namespace detlocus::kernels {

namespace {

const KernelTable kScalar = {axpy_scalar, scale_scalar, "scalar"};

#if defined(DETLOCUS_BUILD_AVX2)
const KernelTable kAvx2 = {axpy_avx2, scale_avx2, "avx2"};
#endif
#if defined(DETLOCUS_BUILD_NEON)
const KernelTable kNeon = {axpy_neon, scale_neon, "neon"};
#endif

// The vector variants use exact double products, valid only for p < 2^26.
constexpr uint32_t kVectorModulusLimit = 1u << 26;

}  // namespace

const KernelTable& select(uint32_t p) {
#if defined(DETLOCUS_BUILD_AVX2)
    static const bool has_avx2 = cpu_has_avx2();
    if (has_avx2 && p < kVectorModulusLimit) return kAvx2;
#endif
#if defined(DETLOCUS_BUILD_NEON)
    if (p < kVectorModulusLimit) return kNeon;
#endif
    (void)p;
    return kScalar;
}

std::string active_kernel_name(uint32_t p) { return select(p).name; }

}  // namespace detlocus::kernels
