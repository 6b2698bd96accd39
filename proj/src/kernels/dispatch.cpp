#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace dynmds::kernels {

MulConst::MulConst(const FieldSpec& field, Elem c) : spec(field), constant(c) {
    for (unsigned i = 0; i < 16; ++i) {
        if (field.contains(i)) lo[i] = gf_mul(field, c, static_cast<Elem>(i));
        if (field.contains(i << 4)) hi[i] = gf_mul(field, c, static_cast<Elem>(i << 4));
    }
}

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Ssse3: return "ssse3";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
    for (Isa isa : {Isa::Scalar, Isa::Ssse3, Isa::Avx2, Isa::Neon}) {
        if (isa_name(isa) == name) return isa;
    }
    return std::nullopt;
}

namespace {

const KernelSet* lookup(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return detail::scalar_set();
        case Isa::Ssse3:
#if defined(DYNMDS_HAVE_SSSE3)
            if (__builtin_cpu_supports("ssse3")) return detail::ssse3_set();
#endif
            return nullptr;
        case Isa::Avx2:
#if defined(DYNMDS_HAVE_AVX2)
            if (__builtin_cpu_supports("avx2")) return detail::avx2_set();
#endif
            return nullptr;
        case Isa::Neon:
#if defined(DYNMDS_HAVE_NEON)
            return detail::neon_set();
#else
            return nullptr;
#endif
    }
    return nullptr;
}

const KernelSet* best_available() noexcept {
    for (Isa isa : {Isa::Avx2, Isa::Neon, Isa::Ssse3}) {
        if (const KernelSet* set = lookup(isa)) return set;
    }
    return detail::scalar_set();
}

const KernelSet* initial_set() noexcept {
    if (const char* forced = std::getenv("DYNMDS_KERNEL")) {
        if (auto isa = parse_isa(forced)) {
            if (const KernelSet* set = lookup(*isa)) return set;
        }
    }
    return best_available();
}

std::atomic<const KernelSet*>& active_slot() noexcept {
    static std::atomic<const KernelSet*> slot{initial_set()};
    return slot;
}

void check_sizes(std::size_t in, std::size_t out) {
    if (in != out) {
        throw Error(ErrorCode::ShapeMismatch, "region sizes differ: " + std::to_string(in) +
                                                  " vs " + std::to_string(out));
    }
}

}  // namespace

const KernelSet& scalar_kernels() noexcept { return *detail::scalar_set(); }

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Ssse3, Isa::Avx2, Isa::Neon}) {
        if (lookup(isa)) out.push_back(isa);
    }
    return out;
}

bool is_available(Isa isa) { return lookup(isa) != nullptr; }

const KernelSet& kernels_for(Isa isa) {
    const KernelSet* set = lookup(isa);
    if (!set) throw std::invalid_argument("kernel set unavailable: " + std::string(isa_name(isa)));
    return *set;
}

const KernelSet& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

void set_active(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_release); }

void mul_region(const MulConst& k, std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
    check_sizes(in.size(), out.size());
    active().mul(k, in.data(), out.data(), in.size());
}

void mul_add_region(const MulConst& k, std::span<const std::uint8_t> in,
                    std::span<std::uint8_t> out) {
    check_sizes(in.size(), out.size());
    active().mul_add(k, in.data(), out.data(), in.size());
}

void xor_region(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
    check_sizes(in.size(), out.size());
    active().xor_into(in.data(), out.data(), in.size());
}

}  // namespace dynmds::kernels
