#include "dynmds/gfield.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

#include "dynmds/kernels.hpp"

namespace dynmds {

namespace {

int poly_degree(unsigned p) noexcept {
    return p == 0 ? -1 : static_cast<int>(std::bit_width(p)) - 1;
}

// Remainder of a modulo b in GF(2)[x].
unsigned poly_mod(unsigned a, unsigned b) noexcept {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        a ^= b << (da - db);
    }
    return a;
}

constexpr std::array<std::uint8_t, 256> kByteDomain = [] {
    std::array<std::uint8_t, 256> d{};
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<std::uint8_t>(i);
    return d;
}();

}  // namespace

bool is_irreducible(unsigned degree, unsigned poly) noexcept {
    if (degree < 1 || degree > kMaxDegree) return false;
    if (poly_degree(poly) != static_cast<int>(degree)) return false;
    for (unsigned divisor = 2; poly_degree(divisor) <= static_cast<int>(degree) / 2; ++divisor) {
        if (poly_mod(poly, divisor) == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::make(unsigned degree, unsigned poly) {
    if (degree < 1 || degree > kMaxDegree) {
        throw Error(ErrorCode::InvalidField,
                    "field degree must be in [1, 8], got " + std::to_string(degree));
    }
    if (poly_degree(poly) != static_cast<int>(degree)) {
        throw Error(ErrorCode::InvalidField, "reduction polynomial degree differs from field degree");
    }
    if (!is_irreducible(degree, poly)) {
        throw Error(ErrorCode::InvalidField, "reduction polynomial is reducible");
    }
    return FieldSpec(degree, poly);
}

std::string FieldSpec::to_string() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "gf(2^%u, 0x%X)", degree_, poly_);
    return buf;
}

Elem check_element(const FieldSpec& spec, unsigned value) {
    if (!spec.contains(value)) {
        throw Error(ErrorCode::InvalidElement,
                    "value " + std::to_string(value) + " outside " + spec.to_string());
    }
    return static_cast<Elem>(value);
}

Elem gf_inv(const FieldSpec& spec, Elem x) {
    if (x == 0) throw Error(ErrorCode::ZeroInverse, "0 has no multiplicative inverse");
    // Invariant: cofactor * x == remainder (mod poly) for both pairs.
    unsigned remainder = x;
    unsigned other = spec.poly();
    unsigned cofactor = 1;
    unsigned other_cofactor = 0;
    while (remainder != 1) {
        int shift = poly_degree(remainder) - poly_degree(other);
        if (shift < 0) {
            std::swap(remainder, other);
            std::swap(cofactor, other_cofactor);
            shift = -shift;
        }
        remainder ^= other << shift;
        cofactor ^= other_cofactor << shift;
    }
    return static_cast<Elem>(cofactor);
}

ProductRows::ProductRows() { slot_.fill(-1); }

ProductRows::ProductRows(const FieldSpec& spec, std::span<const Elem> constants) : spec_(spec) {
    slot_.fill(-1);
    constants_.assign(constants.begin(), constants.end());
    std::sort(constants_.begin(), constants_.end());
    constants_.erase(std::unique(constants_.begin(), constants_.end()), constants_.end());

    const std::size_t width = spec.order();
    const std::span<const std::uint8_t> domain(kByteDomain.data(), width);

    storage_.resize(constants_.size() * width);
    for (std::size_t i = 0; i < constants_.size(); ++i) {
        const Elem c = check_element(spec, constants_[i]);
        slot_[c] = static_cast<std::int16_t>(i);
        kernels::mul_region(kernels::MulConst(spec, c), domain,
                            std::span<std::uint8_t>(storage_.data() + i * width, width));
    }
}

std::span<const Elem> ProductRows::row(Elem c) const {
    if (slot_[c] < 0) {
        throw Error(ErrorCode::IndexOutOfRange, "no product row for constant " + std::to_string(c));
    }
    const std::size_t width = spec_.order();
    return {storage_.data() + static_cast<std::size_t>(slot_[c]) * width, width};
}

Elem MulTables::mul_via_log(Elem x, Elem y) const noexcept {
    if (x == 0 || y == 0) return 0;
    const unsigned period = spec.order() - 1;
    return antilog[(static_cast<unsigned>(log[x]) + log[y]) % period];
}

Elem find_generator(const FieldSpec& spec) {
    const unsigned period = spec.order() - 1;
    for (unsigned g = 1; g < spec.order(); ++g) {
        unsigned order = 1;
        for (Elem p = static_cast<Elem>(g); p != 1; p = gf_mul(spec, p, static_cast<Elem>(g))) {
            ++order;
        }
        if (order == period) return static_cast<Elem>(g);
    }
    throw Error(ErrorCode::NoGenerator, "no primitive element in " + spec.to_string());
}

ProductRows build_product_rows(const FieldSpec& spec, std::span<const Elem> constants) {
    return ProductRows(spec, constants);
}

MulTables build_tables(const FieldSpec& spec, std::span<const Elem> constants) {
    MulTables t;
    t.spec = spec;
    t.generator = find_generator(spec);
    const unsigned period = spec.order() - 1;
    t.log.assign(spec.order(), 0);
    t.antilog.resize(period);
    Elem p = 1;
    for (unsigned i = 0; i < period; ++i) {
        t.antilog[i] = p;
        t.log[p] = static_cast<std::uint8_t>(i);
        p = gf_mul(spec, p, t.generator);
    }
    t.rows = ProductRows(spec, constants);
    return t;
}

}  // namespace dynmds
