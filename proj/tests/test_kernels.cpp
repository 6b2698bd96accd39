#include <doctest.h>

#include <random>
#include <vector>

#include "dynmds/kernels.hpp"
#include "oracles.hpp"

using namespace dynmds;
using namespace dynmds::kernels;

namespace {

// Restores the active set when a test changes it.
struct ActiveGuard {
    Isa saved = active().isa;
    ~ActiveGuard() { set_active(saved); }
};

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t n, unsigned order) {
    std::vector<std::uint8_t> v(n);
    for (auto& b : v) b = static_cast<std::uint8_t>(rng() % order);
    return v;
}

}  // namespace

TEST_CASE("isa names round-trip") {
    for (Isa isa : {Isa::Scalar, Isa::Ssse3, Isa::Avx2, Isa::Neon}) {
        CHECK(parse_isa(isa_name(isa)) == isa);
    }
    CHECK_FALSE(parse_isa("sse9").has_value());
}

TEST_CASE("scalar is always available and listed first") {
    const auto isas = available_isas();
    REQUIRE_FALSE(isas.empty());
    CHECK(isas.front() == Isa::Scalar);
    CHECK(is_available(Isa::Scalar));
    CHECK(kernels_for(Isa::Scalar).isa == Isa::Scalar);
    for (Isa isa : {Isa::Scalar, Isa::Ssse3, Isa::Avx2, Isa::Neon}) {
        if (!is_available(isa)) CHECK_THROWS_AS(kernels_for(isa), std::invalid_argument);
    }
}

TEST_CASE("nibble tables reproduce the product") {
    for (const FieldSpec& f : {kAesField, FieldSpec::make(4, 0x13), FieldSpec::make(8, 0x169)}) {
        for (unsigned c = 0; c < f.order(); ++c) {
            const MulConst k(f, Elem(c));
            for (unsigned x = 0; x < f.order(); ++x) {
                REQUIRE((k.lo[x & 0xF] ^ k.hi[x >> 4]) == oracle::mul(f, c, x));
            }
        }
    }
}

TEST_CASE("every available kernel set matches the oracle for all constants and lengths") {
    std::mt19937_64 rng(7);
    const std::vector<std::size_t> lengths = [] {
        std::vector<std::size_t> v;
        for (std::size_t n = 0; n <= 70; ++n) v.push_back(n);
        for (std::size_t n : {95, 96, 97, 127, 128, 129, 1000, 4099}) v.push_back(n);
        return v;
    }();
    for (Isa isa : available_isas()) {
        const KernelSet& ks = kernels_for(isa);
        CAPTURE(isa_name(isa));
        for (const FieldSpec& f : {kAesField, FieldSpec::make(4, 0x13)}) {
            for (unsigned c = 0; c < f.order(); ++c) {
                const MulConst k(f, Elem(c));
                for (std::size_t n : lengths) {
                    // Offset by one so the SIMD paths see unaligned pointers.
                    auto in = random_bytes(rng, n + 1, f.order());
                    auto acc = random_bytes(rng, n + 1, f.order());
                    std::vector<std::uint8_t> prod(n + 1, 0xEE), sum = acc, x = acc;
                    ks.mul(k, in.data() + 1, prod.data() + 1, n);
                    ks.mul_add(k, in.data() + 1, sum.data() + 1, n);
                    ks.xor_into(in.data() + 1, x.data() + 1, n);
                    std::vector<std::uint8_t> want_prod(n + 1, 0xEE), want_sum = acc, want_x = acc;
                    for (std::size_t i = 1; i <= n; ++i) {
                        const auto p = static_cast<std::uint8_t>(oracle::mul(f, c, in[i]));
                        want_prod[i] = p;
                        want_sum[i] ^= p;
                        want_x[i] ^= in[i];
                    }
                    REQUIRE(prod == want_prod);
                    REQUIRE(sum == want_sum);
                    REQUIRE(x == want_x);
                }
            }
        }
    }
}

TEST_CASE("region wrappers check sizes and follow the active set") {
    ActiveGuard guard;
    const MulConst k(kAesField, 0x02);
    std::vector<std::uint8_t> in{0x87, 0x01, 0x80}, out(3);
    for (Isa isa : available_isas()) {
        set_active(isa);
        CHECK(active().isa == isa);
        mul_region(k, in, out);
        CHECK(out == std::vector<std::uint8_t>{0x15, 0x02, 0x1B});
        mul_add_region(k, in, out);
        CHECK(out == std::vector<std::uint8_t>{0, 0, 0});
        xor_region(in, out);
        CHECK(out == in);
    }
    std::vector<std::uint8_t> shorter(2);
    CHECK_THROWS_AS(mul_region(k, in, shorter), Error);
    CHECK_THROWS_AS(mul_add_region(k, in, shorter), Error);
    CHECK_THROWS_AS(xor_region(in, shorter), Error);
}
