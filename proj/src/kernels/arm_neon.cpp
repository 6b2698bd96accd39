// NEON is architectural on AArch64, so no runtime check is needed.

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace dynmds::kernels::detail {

namespace {

void mul_neon(const MulConst& k, const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    const uint8x16_t lo = vld1q_u8(k.lo.data());
    const uint8x16_t hi = vld1q_u8(k.hi.data());
    const uint8x16_t mask = vdupq_n_u8(0x0F);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const uint8x16_t x = vld1q_u8(in + i);
        const uint8x16_t p = veorq_u8(vqtbl1q_u8(lo, vandq_u8(x, mask)), vqtbl1q_u8(hi, vshrq_n_u8(x, 4)));
        vst1q_u8(out + i, p);
    }
    for (; i < n; ++i) out[i] = nibble_mul(k, in[i]);
}

void mul_add_neon(const MulConst& k, const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    const uint8x16_t lo = vld1q_u8(k.lo.data());
    const uint8x16_t hi = vld1q_u8(k.hi.data());
    const uint8x16_t mask = vdupq_n_u8(0x0F);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const uint8x16_t x = vld1q_u8(in + i);
        const uint8x16_t p = veorq_u8(vqtbl1q_u8(lo, vandq_u8(x, mask)), vqtbl1q_u8(hi, vshrq_n_u8(x, 4)));
        vst1q_u8(out + i, veorq_u8(vld1q_u8(out + i), p));
    }
    for (; i < n; ++i) out[i] ^= nibble_mul(k, in[i]);
}

void xor_neon(const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) vst1q_u8(out + i, veorq_u8(vld1q_u8(out + i), vld1q_u8(in + i)));
    for (; i < n; ++i) out[i] ^= in[i];
}

constexpr KernelSet kNeon{Isa::Neon, mul_neon, mul_add_neon, xor_neon};

}  // namespace

const KernelSet* neon_set() noexcept { return &kNeon; }

}  // namespace dynmds::kernels::detail
