// Built with -mssse3; only reached after a CPUID check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace dynmds::kernels::detail {

namespace {

inline __m128i mul16(__m128i x, __m128i lo, __m128i hi, __m128i mask) {
    const __m128i low = _mm_and_si128(x, mask);
    const __m128i high = _mm_and_si128(_mm_srli_epi64(x, 4), mask);
    return _mm_xor_si128(_mm_shuffle_epi8(lo, low), _mm_shuffle_epi8(hi, high));
}

void mul_ssse3(const MulConst& k, const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    const __m128i lo = _mm_load_si128(reinterpret_cast<const __m128i*>(k.lo.data()));
    const __m128i hi = _mm_load_si128(reinterpret_cast<const __m128i*>(k.hi.data()));
    const __m128i mask = _mm_set1_epi8(0x0F);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), mul16(x, lo, hi, mask));
    }
    for (; i < n; ++i) out[i] = nibble_mul(k, in[i]);
}

void mul_add_ssse3(const MulConst& k, const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    const __m128i lo = _mm_load_si128(reinterpret_cast<const __m128i*>(k.lo.data()));
    const __m128i hi = _mm_load_si128(reinterpret_cast<const __m128i*>(k.hi.data()));
    const __m128i mask = _mm_set1_epi8(0x0F);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i));
        const __m128i acc = _mm_loadu_si128(reinterpret_cast<const __m128i*>(out + i));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i),
                         _mm_xor_si128(acc, mul16(x, lo, hi, mask)));
    }
    for (; i < n; ++i) out[i] ^= nibble_mul(k, in[i]);
}

void xor_ssse3(const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i));
        const __m128i acc = _mm_loadu_si128(reinterpret_cast<const __m128i*>(out + i));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), _mm_xor_si128(acc, x));
    }
    for (; i < n; ++i) out[i] ^= in[i];
}

constexpr KernelSet kSsse3{Isa::Ssse3, mul_ssse3, mul_add_ssse3, xor_ssse3};

}  // namespace

const KernelSet* ssse3_set() noexcept { return &kSsse3; }

}  // namespace dynmds::kernels::detail
