// Built with -mavx2; only reached after a CPUID check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace dynmds::kernels::detail {

namespace {

struct Tables256 {
    __m256i lo;
    __m256i hi;
    __m256i mask;

    explicit Tables256(const MulConst& k)
        : lo(_mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(k.lo.data())))),
          hi(_mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(k.hi.data())))),
          mask(_mm256_set1_epi8(0x0F)) {}

    __m256i mul(__m256i x) const {
        const __m256i low = _mm256_and_si256(x, mask);
        const __m256i high = _mm256_and_si256(_mm256_srli_epi64(x, 4), mask);
        return _mm256_xor_si256(_mm256_shuffle_epi8(lo, low), _mm256_shuffle_epi8(hi, high));
    }
};

void mul_avx2(const MulConst& k, const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    const Tables256 t(k);
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), t.mul(x));
    }
    for (; i < n; ++i) out[i] = nibble_mul(k, in[i]);
}

void mul_add_avx2(const MulConst& k, const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    const Tables256 t(k);
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
        const __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_xor_si256(acc, t.mul(x)));
    }
    for (; i < n; ++i) out[i] ^= nibble_mul(k, in[i]);
}

void xor_avx2(const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
        const __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_xor_si256(acc, x));
    }
    for (; i < n; ++i) out[i] ^= in[i];
}

constexpr KernelSet kAvx2{Isa::Avx2, mul_avx2, mul_add_avx2, xor_avx2};

}  // namespace

const KernelSet* avx2_set() noexcept { return &kAvx2; }

}  // namespace dynmds::kernels::detail
