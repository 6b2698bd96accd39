#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "dynmds/gfield.hpp"
#include "oracles.hpp"

using namespace dynmds;

namespace {

std::vector<FieldSpec> small_fields() {
    std::vector<FieldSpec> out;
    for (unsigned q = 1; q <= 4; ++q) {
        for (unsigned poly = 1u << q; poly < (2u << q); ++poly) {
            if (is_irreducible(q, poly)) out.push_back(FieldSpec::make(q, poly));
        }
    }
    return out;
}

// Number of monic irreducible polynomials of degree q over GF(2).
unsigned necklace_count(unsigned q) {
    auto mobius = [](unsigned n) {
        int m = 1;
        for (unsigned p = 2; p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
        return m;
    };
    int sum = 0;
    for (unsigned d = 1; d <= q; ++d) {
        if (q % d == 0) sum += mobius(d) * (1 << (q / d));
    }
    return static_cast<unsigned>(sum) / q;
}

}  // namespace

TEST_CASE("default field is the AES polynomial") {
    CHECK(kAesField.degree() == 8);
    CHECK(kAesField.poly() == 0x11B);
    CHECK(kAesField.order() == 256);
    CHECK(kAesField.to_string() == "gf(2^8, 0x11B)");
    CHECK(FieldSpec::make(8, 0x11B) == kAesField);
}

TEST_CASE("irreducible polynomial counts match the necklace formula") {
    for (unsigned q = 1; q <= 8; ++q) {
        unsigned count = 0;
        for (unsigned poly = 1u << q; poly < (2u << q); ++poly) count += is_irreducible(q, poly);
        CAPTURE(q);
        CHECK(count == necklace_count(q));
    }
}

TEST_CASE("field construction rejects bad polynomials") {
    CHECK_THROWS_AS(FieldSpec::make(0, 0x3), Error);
    CHECK_THROWS_AS(FieldSpec::make(9, 0x211), Error);
    CHECK_THROWS_AS(FieldSpec::make(8, 0x11A), Error);  // divisible by x
    CHECK_THROWS_AS(FieldSpec::make(8, 0x1B), Error);   // degree 4, not 8
    CHECK_THROWS_AS(FieldSpec::make(4, 0x15), Error);   // (x^2+x+1)^2
    try {
        FieldSpec::make(8, 0x100);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidField);
    }
    CHECK_NOTHROW(FieldSpec::make(8, 0x169));
    CHECK_NOTHROW(FieldSpec::make(4, 0x13));
}

TEST_CASE("addition examples") {
    CHECK(gf_add(kAesField, 0x57, 0x83) == 0xD4);
    for (unsigned x = 0; x < 256; ++x) {
        CHECK(gf_add(kAesField, Elem(x), 0) == x);
        CHECK(gf_add(kAesField, Elem(x), Elem(x)) == 0);
    }
}

TEST_CASE("multiplication examples") {
    CHECK(gf_mul(kAesField, 0x02, 0x87) == 0x15);
    CHECK(gf_mul(kAesField, 0x57, 0x83) == 0xC1);
    for (unsigned x = 0; x < 256; ++x) {
        CHECK(gf_mul(kAesField, Elem(x), 1) == x);
        CHECK(gf_mul(kAesField, Elem(x), 0) == 0);
    }
}

TEST_CASE("multiplication agrees with the carryless oracle in every small field and q = 8") {
    auto fields = small_fields();
    fields.push_back(kAesField);
    fields.push_back(FieldSpec::make(8, 0x169));
    for (const FieldSpec& f : fields) {
        for (unsigned x = 0; x < f.order(); ++x) {
            for (unsigned y = 0; y < f.order(); ++y) {
                REQUIRE(gf_mul(f, Elem(x), Elem(y)) == oracle::mul(f, x, y));
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 4") {
    for (const FieldSpec& f : small_fields()) {
        CAPTURE(f.to_string());
        const unsigned n = f.order();
        for (unsigned a = 0; a < n; ++a) {
            for (unsigned b = 0; b < n; ++b) {
                const Elem x = Elem(a), y = Elem(b);
                REQUIRE(gf_mul(f, x, y) == gf_mul(f, y, x));
                REQUIRE(gf_add(f, x, y) == gf_add(f, y, x));
                REQUIRE(gf_mul(f, x, y) < n);
                for (unsigned c = 0; c < n; ++c) {
                    const Elem z = Elem(c);
                    REQUIRE(gf_mul(f, gf_mul(f, x, y), z) == gf_mul(f, x, gf_mul(f, y, z)));
                    REQUIRE(gf_add(f, gf_add(f, x, y), z) == gf_add(f, x, gf_add(f, y, z)));
                    REQUIRE(gf_mul(f, x, gf_add(f, y, z)) ==
                            gf_add(f, gf_mul(f, x, y), gf_mul(f, x, z)));
                }
            }
        }
    }
}

TEST_CASE("field axioms on random triples for q = 8") {
    std::mt19937_64 rng(81);
    for (const FieldSpec& f : {kAesField, FieldSpec::make(8, 0x169), FieldSpec::make(8, 0x1F5)}) {
        for (int i = 0; i < 20000; ++i) {
            const Elem x = Elem(rng()), y = Elem(rng()), z = Elem(rng());
            REQUIRE(gf_mul(f, x, y) == gf_mul(f, y, x));
            REQUIRE(gf_mul(f, gf_mul(f, x, y), z) == gf_mul(f, x, gf_mul(f, y, z)));
            REQUIRE(gf_mul(f, x, gf_add(f, y, z)) == gf_add(f, gf_mul(f, x, y), gf_mul(f, x, z)));
            REQUIRE(gf_add(f, gf_add(f, x, y), z) == gf_add(f, x, gf_add(f, y, z)));
        }
    }
}

TEST_CASE("inverse examples") {
    CHECK(gf_inv(kAesField, 0x01) == 0x01);
    CHECK(gf_inv(kAesField, 0x02) == 0x8D);
    try {
        gf_inv(kAesField, 0);
        FAIL("expected ZeroInverse");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroInverse);
        CHECK(std::string(e.name()) == "ZeroInverse");
    }
}

TEST_CASE("inverse is exact for every nonzero element and agrees with the scan and power paths") {
    auto fields = small_fields();
    fields.push_back(kAesField);
    fields.push_back(FieldSpec::make(8, 0x169));
    for (const FieldSpec& f : fields) {
        CAPTURE(f.to_string());
        for (unsigned x = 1; x < f.order(); ++x) {
            const Elem inv = gf_inv(f, Elem(x));
            REQUIRE(gf_mul(f, Elem(x), inv) == 1);
            REQUIRE(inv == oracle::inverse_scan(f, x));
            REQUIRE(inv == gf_pow(f, Elem(x), f.order() - 2));
        }
    }
}

TEST_CASE("power examples") {
    CHECK(gf_pow(kAesField, 0, 0) == 1);
    CHECK(gf_pow(kAesField, 0x53, 0) == 1);
    CHECK(gf_pow(kAesField, 0x53, 1) == 0x53);
    CHECK(gf_pow(kAesField, 0x02, 255) == 0x01);
    CHECK(gf_pow(kAesField, 0x02, 8) == 0x1B);
    for (unsigned x = 1; x < 256; ++x) CHECK(gf_pow(kAesField, Elem(x), 255) == 1);
    Elem acc = 1;
    for (unsigned n = 0; n < 600; ++n) {
        REQUIRE(gf_pow(kAesField, 0x03, n) == acc);
        acc = Elem(oracle::mul(kAesField, acc, 0x03));
    }
}

TEST_CASE("check_element rejects out-of-field values") {
    const FieldSpec f = FieldSpec::make(4, 0x13);
    CHECK(check_element(f, 15) == 15);
    CHECK_THROWS_AS(check_element(f, 16), Error);
    CHECK_THROWS_AS(check_element(kAesField, 256), Error);
}

TEST_CASE("log tables round-trip and use a primitive generator") {
    auto fields = small_fields();
    fields.push_back(kAesField);
    fields.push_back(FieldSpec::make(8, 0x169));
    for (const FieldSpec& f : fields) {
        const MulTables t = build_tables(f, {});
        CHECK(t.antilog.size() == f.order() - 1);
        std::set<unsigned> seen(t.antilog.begin(), t.antilog.end());
        CHECK(seen.size() == f.order() - 1);
        CHECK(seen.count(0) == 0);
        for (unsigned x = 1; x < f.order(); ++x) {
            REQUIRE(t.antilog[t.log[x]] == x);
        }
        for (unsigned x = 0; x < f.order(); ++x) {
            for (unsigned y = 0; y < f.order(); ++y) {
                REQUIRE(t.mul_via_log(Elem(x), Elem(y)) == oracle::mul(f, x, y));
            }
        }
    }
    CHECK(find_generator(kAesField) == 0x03);
}

TEST_CASE("product rows") {
    const std::vector<Elem> cs{0x03, 0x02, 0x03, 0x01, 0x02};
    const ProductRows rows = build_product_rows(kAesField, cs);
    CHECK(rows.row_count() == 3);
    CHECK(rows.footprint_entries() == 3 * 256);
    CHECK(std::vector<Elem>(rows.constants().begin(), rows.constants().end()) == std::vector<Elem>{1, 2, 3});
    for (Elem c : rows.constants()) {
        for (unsigned x = 0; x < 256; ++x) REQUIRE(rows.product(c, Elem(x)) == oracle::mul(kAesField, c, x));
    }
    for (unsigned x = 0; x < 256; ++x) CHECK(rows.row(0x01)[x] == x);
    CHECK(rows.contains(0x02));
    CHECK_FALSE(rows.contains(0x04));
    CHECK_THROWS_AS(rows.row(0x04), Error);

    const ProductRows empty;
    CHECK(empty.row_count() == 0);
    CHECK_FALSE(empty.contains(0x00));

    const FieldSpec f = FieldSpec::make(4, 0x13);
    const std::vector<Elem> small{0x7};
    const ProductRows r4(f, small);
    CHECK(r4.footprint_entries() == 16);
    for (unsigned x = 0; x < 16; ++x) CHECK(r4.product(0x7, Elem(x)) == oracle::mul(f, 7, x));

    const MulTables t = build_tables(kAesField, cs);
    CHECK(t.rows.footprint_entries() == 3 * 256);
}
