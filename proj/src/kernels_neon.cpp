#include "detlocus/kernels.hpp"

#if defined(DETLOCUS_BUILD_NEON)

#include <arm_neon.h>

namespace detlocus::kernels {

namespace {

// Same double-product reduction as the AVX2 variant, two lanes at a time.
inline float64x2_t reduce_f64(float64x2_t v, float64x2_t vp, float64x2_t inv_p) {
    float64x2_t q = vrndmq_f64(vmulq_f64(v, inv_p));
    float64x2_t r = vfmsq_f64(v, q, vp);
    uint64x2_t lt = vcltzq_f64(r);
    r = vaddq_f64(r, vreinterpretq_f64_u64(vandq_u64(lt, vreinterpretq_u64_f64(vp))));
    uint64x2_t ge = vcgeq_f64(r, vp);
    r = vsubq_f64(r, vreinterpretq_f64_u64(vandq_u64(ge, vreinterpretq_u64_f64(vp))));
    return r;
}

}  // namespace

void axpy_neon(uint32_t* dst, const uint32_t* src, uint32_t c, size_t len, uint32_t p) {
    if (c == 0) return;
    const float64x2_t vc = vdupq_n_f64(static_cast<double>(c));
    const float64x2_t vp = vdupq_n_f64(static_cast<double>(p));
    const float64x2_t inv_p = vdupq_n_f64(1.0 / static_cast<double>(p));
    size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        float64x2_t s = {static_cast<double>(src[i]), static_cast<double>(src[i + 1])};
        float64x2_t d = {static_cast<double>(dst[i]), static_cast<double>(dst[i + 1])};
        float64x2_t r = reduce_f64(vfmaq_f64(d, s, vc), vp, inv_p);
        dst[i] = static_cast<uint32_t>(vgetq_lane_f64(r, 0));
        dst[i + 1] = static_cast<uint32_t>(vgetq_lane_f64(r, 1));
    }
    for (; i < len; ++i) {
        dst[i] = static_cast<uint32_t>((dst[i] + static_cast<uint64_t>(c) * src[i]) % p);
    }
}

void scale_neon(uint32_t* dst, uint32_t c, size_t len, uint32_t p) {
    const float64x2_t vc = vdupq_n_f64(static_cast<double>(c));
    const float64x2_t vp = vdupq_n_f64(static_cast<double>(p));
    const float64x2_t inv_p = vdupq_n_f64(1.0 / static_cast<double>(p));
    size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        float64x2_t d = {static_cast<double>(dst[i]), static_cast<double>(dst[i + 1])};
        float64x2_t r = reduce_f64(vmulq_f64(d, vc), vp, inv_p);
        dst[i] = static_cast<uint32_t>(vgetq_lane_f64(r, 0));
        dst[i + 1] = static_cast<uint32_t>(vgetq_lane_f64(r, 1));
    }
    for (; i < len; ++i) {
        dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * dst[i]) % p);
    }
}

}  // namespace detlocus::kernels

#endif  // DETLOCUS_BUILD_NEON
