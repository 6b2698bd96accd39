#pragma once

// Byte-region kernels for multiplication by a fixed field constant.
//
// Every kernel set computes the same function; the scalar set is the
// reference and the SIMD sets (SSSE3, AVX2, NEON) use split-nibble
// shuffle tables: c*x = lo[x & 0xF] ^ hi[x >> 4]. The active set is picked
// once at startup from the CPU feature bits and can be overridden with the
// DYNMDS_KERNEL environment variable or set_active().

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dynmds/gfield.hpp"

namespace dynmds::kernels {

enum class Isa { Scalar, Ssse3, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

struct MulConst {
    MulConst(const FieldSpec& spec, Elem constant);

    FieldSpec spec;
    Elem constant;
    alignas(16) std::array<std::uint8_t, 16> lo{};
    alignas(16) std::array<std::uint8_t, 16> hi{};
};

using MulFn = void (*)(const MulConst& k, const std::uint8_t* in, std::uint8_t* out,
                       std::size_t n);
using XorFn = void (*)(const std::uint8_t* in, std::uint8_t* out, std::size_t n);

struct KernelSet {
    Isa isa;
    MulFn mul;      // out[i] = c * in[i]
    MulFn mul_add;  // out[i] ^= c * in[i]
    XorFn xor_into; // out[i] ^= in[i]
};

const KernelSet& scalar_kernels() noexcept;

/// Sets compiled into this build and supported by the running CPU.
std::vector<Isa> available_isas();
bool is_available(Isa isa);
/// Throws std::invalid_argument if the set is unavailable here.
const KernelSet& kernels_for(Isa isa);

const KernelSet& active() noexcept;
void set_active(Isa isa);

void mul_region(const MulConst& k, std::span<const std::uint8_t> in, std::span<std::uint8_t> out);
void mul_add_region(const MulConst& k, std::span<const std::uint8_t> in,
                    std::span<std::uint8_t> out);
void xor_region(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);

}  // namespace dynmds::kernels
