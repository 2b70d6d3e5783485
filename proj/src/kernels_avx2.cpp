#include "detlocus/kernels.hpp"

#if defined(DETLOCUS_BUILD_AVX2)

#include <immintrin.h>

#if defined(_MSC_VER)
#include <intrin.h>
#else
#include <cpuid.h>
#endif

namespace detlocus::kernels {

bool cpu_has_avx2() {
#if defined(_MSC_VER)
    int info[4];
    __cpuidex(info, 7, 0);
    return (info[1] & (1 << 5)) != 0;
#else
    unsigned eax, ebx, ecx, edx;
    if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
    return (ebx & (1u << 5)) != 0;
#endif
}

namespace {

// Reduce v in [0, p^2 + p) to [0, p) through double arithmetic. Exact for
// p < 2^26: the product fits in the 53-bit mantissa and the quotient estimate
// is off by at most one, fixed by the two conditional corrections.
inline __m256d reduce_pd(__m256d v, __m256d vp, __m256d inv_p) {
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, inv_p));
    __m256d r = _mm256_sub_pd(v, _mm256_mul_pd(q, vp));
    __m256d lt = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
    r = _mm256_add_pd(r, _mm256_and_pd(lt, vp));
    __m256d ge = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
    r = _mm256_sub_pd(r, _mm256_and_pd(ge, vp));
    return r;
}

}  // namespace

void axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c, size_t len, uint32_t p) {
    if (c == 0) return;
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
    size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m128i si = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
        __m128i di = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
        __m256d s = _mm256_cvtepi32_pd(si);
        __m256d d = _mm256_cvtepi32_pd(di);
        __m256d v = _mm256_add_pd(_mm256_mul_pd(s, vc), d);
        __m256d r = reduce_pd(v, vp, inv_p);
        __m128i ri = _mm256_cvttpd_epi32(r);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), ri);
    }
    for (; i < len; ++i) {
        dst[i] = static_cast<uint32_t>((dst[i] + static_cast<uint64_t>(c) * src[i]) % p);
    }
}

void scale_avx2(uint32_t* dst, uint32_t c, size_t len, uint32_t p) {
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
    size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m128i di = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
        __m256d d = _mm256_cvtepi32_pd(di);
        __m256d v = _mm256_mul_pd(d, vc);
        __m256d r = reduce_pd(v, vp, inv_p);
        __m128i ri = _mm256_cvttpd_epi32(r);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), ri);
    }
    for (; i < len; ++i) {
        dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * dst[i]) % p);
    }
}

}  // namespace detlocus::kernels

#endif  // DETLOCUS_BUILD_AVX2
