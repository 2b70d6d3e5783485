#include "detlocus/kernels.hpp"

namespace detlocus::kernels {

void axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c, size_t len, uint32_t p) {
    if (c == 0) return;
    for (size_t i = 0; i < len; ++i) {
        dst[i] = static_cast<uint32_t>((dst[i] + static_cast<uint64_t>(c) * src[i]) % p);
    }
}

void scale_scalar(uint32_t* dst, uint32_t c, size_t len, uint32_t p) {
    for (size_t i = 0; i < len; ++i) {
        dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * dst[i]) % p);
    }
}

}  // namespace detlocus::kernels
