#pragma once

// Arithmetic in binary extension fields GF(2^q), 1 <= q <= 8.
//
// Elements are bytes whose low q bits hold the coefficients of a polynomial
// over GF(2). The field is fixed by an irreducible reduction polynomial of
// degree q, held in FieldSpec.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dynmds/error.hpp"

namespace dynmds {

using Elem = std::uint8_t;

inline constexpr unsigned kMaxDegree = 8;

class FieldSpec {
public:
    /// GF(2^8) with x^8 + x^4 + x^3 + x + 1.
    constexpr FieldSpec() = default;

    /// Validated construction; throws InvalidField unless poly is an
    /// irreducible polynomial of exact degree `degree`.
    static FieldSpec make(unsigned degree, unsigned poly);

    constexpr unsigned degree() const noexcept { return degree_; }
    constexpr unsigned poly() const noexcept { return poly_; }
    /// Number of field elements, 2^q.
    constexpr unsigned order() const noexcept { return 1u << degree_; }
    constexpr bool contains(unsigned value) const noexcept { return value < order(); }

    /// Canonical text form, e.g. `gf(2^8, 0x11B)`.
    std::string to_string() const;

    friend constexpr bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    constexpr FieldSpec(unsigned degree, unsigned poly) : degree_(degree), poly_(poly) {}

    unsigned degree_ = 8;
    unsigned poly_ = 0x11B;
};

inline constexpr FieldSpec kAesField{};

/// Exhaustive trial division by every polynomial of degree 1..q/2.
bool is_irreducible(unsigned degree, unsigned poly) noexcept;

/// Throws InvalidElement when value lies outside the field.
Elem check_element(const FieldSpec& spec, unsigned value);

constexpr Elem gf_add(const FieldSpec&, Elem x, Elem y) noexcept {
    return static_cast<Elem>(x ^ y);
}

/// Shift-and-XOR product with reduction folded into each doubling step.
constexpr Elem gf_mul(const FieldSpec& spec, Elem x, Elem y) noexcept {
    const unsigned top = spec.order();
    unsigned acc = 0;
    unsigned a = x;
    for (unsigned b = y; b != 0; b >>= 1) {
        if (b & 1u) acc ^= a;
        a <<= 1;
        if (a & top) a ^= spec.poly();
    }
    return static_cast<Elem>(acc);
}

/// 0^0 is 1.
constexpr Elem gf_pow(const FieldSpec& spec, Elem x, std::uint64_t n) noexcept {
    Elem result = 1;
    Elem base = x;
    while (n != 0) {
        if (n & 1u) result = gf_mul(spec, result, base);
        base = gf_mul(spec, base, base);
        n >>= 1;
    }
    return result;
}

/// Multiplicative inverse by the extended Euclidean algorithm in GF(2)[x]
/// against the reduction polynomial. Throws ZeroInverse for 0.
Elem gf_inv(const FieldSpec& spec, Elem x);

/// Products c*x for a set of constants c, one 2^q-entry row per distinct
/// constant.
class ProductRows {
public:
    ProductRows();
    ProductRows(const FieldSpec& spec, std::span<const Elem> constants);

    const FieldSpec& spec() const noexcept { return spec_; }
    /// Distinct constants in ascending order.
    std::span<const Elem> constants() const noexcept { return constants_; }
    bool contains(Elem c) const noexcept { return slot_[c] >= 0; }
    /// Row for a built constant; IndexOutOfRange otherwise.
    std::span<const Elem> row(Elem c) const;
    Elem product(Elem c, Elem x) const { return row(c)[x]; }
    std::size_t row_count() const noexcept { return constants_.size(); }
    /// row_count() * 2^q.
    std::size_t footprint_entries() const noexcept { return storage_.size(); }

private:
    FieldSpec spec_;
    std::vector<Elem> constants_;
    std::vector<Elem> storage_;
    std::array<std::int16_t, 256> slot_{};
};

struct MulTables {
    FieldSpec spec;
    /// Primitive element used to build the log tables.
    Elem generator = 0;
    /// log[x] for x in [1, 2^q); entry 0 is unused.
    std::vector<std::uint8_t> log;
    /// antilog[i] = generator^i for i in [0, 2^q - 1).
    std::vector<Elem> antilog;
    ProductRows rows;

    Elem mul_via_log(Elem x, Elem y) const noexcept;
};

/// Smallest primitive element of the field; NoGenerator if none exists.
Elem find_generator(const FieldSpec& spec);

ProductRows build_product_rows(const FieldSpec& spec, std::span<const Elem> constants);
MulTables build_tables(const FieldSpec& spec, std::span<const Elem> constants);

}  // namespace dynmds
