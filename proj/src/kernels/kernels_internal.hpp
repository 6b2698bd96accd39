#pragma once

#include "dynmds/kernels.hpp"

namespace dynmds::kernels::detail {

const KernelSet* scalar_set() noexcept;

#if defined(DYNMDS_HAVE_SSSE3)
const KernelSet* ssse3_set() noexcept;
#endif
#if defined(DYNMDS_HAVE_AVX2)
const KernelSet* avx2_set() noexcept;
#endif
#if defined(DYNMDS_HAVE_NEON)
const KernelSet* neon_set() noexcept;
#endif

// Tail handling shared by the vector kernels: lo/hi nibble lookup per byte.
inline std::uint8_t nibble_mul(const MulConst& k, std::uint8_t x) noexcept {
    return static_cast<std::uint8_t>(k.lo[x & 0x0F] ^ k.hi[x >> 4]);
}

}  // namespace dynmds::kernels::detail
