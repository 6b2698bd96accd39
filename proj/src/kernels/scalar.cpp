// Reference kernels. Products come straight from gf_mul, independent of the
// nibble tables the SIMD variants use.

#include "kernels_internal.hpp"

namespace dynmds::kernels::detail {

namespace {

void mul_scalar(const MulConst& k, const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = gf_mul(k.spec, k.constant, in[i]);
}

void mul_add_scalar(const MulConst& k, const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] ^= gf_mul(k.spec, k.constant, in[i]);
}

void xor_scalar(const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] ^= in[i];
}

constexpr KernelSet kScalar{Isa::Scalar, mul_scalar, mul_add_scalar, xor_scalar};

}  // namespace

const KernelSet* scalar_set() noexcept { return &kScalar; }

}  // namespace dynmds::kernels::detail
