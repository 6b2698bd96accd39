#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "dynmds/fixtures.hpp"
#include "dynmds/mds.hpp"
#include "oracles.hpp"

using namespace dynmds;

namespace {

std::optional<MinorIndex> first_singular_minor(const Matrix& a, std::uint64_t& position) {
    position = 0;
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        for (const auto& rows : oracle::combinations(a.rows(), k)) {
            for (const auto& cols : oracle::combinations(a.cols(), k)) {
                ++position;
                if (oracle::leibniz_det(submatrix(a, {rows, cols})) == 0) return MinorIndex{rows, cols};
            }
        }
    }
    return std::nullopt;
}

std::size_t count_value(const Matrix& a, Elem v) {
    return static_cast<std::size_t>(std::count(a.entries().begin(), a.entries().end(), v));
}

}  // namespace

TEST_CASE("verification examples") {
    const MdsReport zero = is_mds(Matrix::from_rows(kAesField, {{0}}));
    CHECK_FALSE(zero.is_mds);
    REQUIRE(zero.witness.has_value());
    CHECK(zero.witness->rows == std::vector<std::size_t>{0});
    CHECK(zero.witness->cols == std::vector<std::size_t>{0});

    const MdsReport ident = is_mds(Matrix::identity(kAesField, 2));
    CHECK_FALSE(ident.is_mds);
    REQUIRE(ident.witness.has_value());
    CHECK(ident.witness->rows == std::vector<std::size_t>{0});
    CHECK(ident.witness->cols == std::vector<std::size_t>{1});

    const MdsReport aes = is_mds(fixtures::aes_circulant());
    CHECK(aes.is_mds);
    CHECK_FALSE(aes.witness.has_value());
    CHECK(aes.minors_checked == 69);

    CHECK_THROWS_AS(is_mds(Matrix::zeros(kAesField, 2, 3)), Error);
    CHECK_THROWS_AS(is_mds_exhaustive(Matrix::zeros(kAesField, 2, 3)), Error);
}

TEST_CASE("every fixture is MDS by the oracle and by both library paths") {
    std::vector<Matrix> all = fixtures::canonical_class_fixtures();
    all.push_back(fixtures::aes_circulant());
    all.push_back(fixtures::twofish_mds());
    for (const Matrix& m : all) {
        CHECK(oracle::all_minors_nonsingular(m));
        CHECK(is_mds(m).is_mds);
        const MdsReport full = is_mds_exhaustive(m);
        CHECK(full.is_mds);
        CHECK(full.minors_checked == 69);
    }
}

TEST_CASE("early-exit and exhaustive paths agree and witnesses are sound") {
    std::mt19937_64 rng(11);
    int mds_seen = 0;
    for (int i = 0; i < 3000; ++i) {
        const std::size_t n = 1 + rng() % 4;
        const FieldSpec f = i % 2 ? FieldSpec::make(4, 0x13) : kAesField;
        const Matrix m = oracle::random_matrix(rng, f, n, n);
        const MdsReport fast = is_mds(m);
        const MdsReport full = is_mds_exhaustive(m);
        std::uint64_t position = 0;
        const auto want = first_singular_minor(m, position);

        REQUIRE(fast.is_mds == !want.has_value());
        REQUIRE(full.is_mds == fast.is_mds);
        REQUIRE(fast.witness == want);
        REQUIRE(full.witness == want);
        REQUIRE(full.minors_checked == square_submatrix_count(n, n));
        REQUIRE(fast.minors_checked == (want ? position : square_submatrix_count(n, n)));
        if (fast.witness) {
            REQUIRE(determinant_cofactor(submatrix(m, *fast.witness)) == 0);
        } else {
            ++mds_seen;
        }
    }
    CHECK(mds_seen > 0);
}

TEST_CASE("MdsMatrix only wraps verified matrices") {
    CHECK_NOTHROW(MdsMatrix::verify(fixtures::aes_circulant()));
    try {
        MdsMatrix::verify(Matrix::identity(kAesField, 4));
        FAIL("expected NotMds");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMds);
    }
    CHECK_THROWS_AS(MdsMatrix::verify(Matrix::zeros(kAesField, 1, 2)), Error);
}

TEST_CASE("scaling") {
    const Matrix aes = fixtures::aes_circulant();
    CHECK(scale_mds(aes, 1).matrix() == aes);
    CHECK(scale_mds(aes, 2).matrix() == mat_scalar_mul(aes, 2));
    CHECK(is_mds(scale_mds(aes, 2).matrix()).is_mds);
    try {
        scale_mds(aes, 0);
        FAIL("expected ZeroConstant");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroConstant);
    }
    try {
        scale_mds(Matrix::identity(kAesField, 4), 3);
        FAIL("expected NotMds");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMds);
    }
}

TEST_CASE("theorem closure over every nonzero scalar, including small fields") {
    std::vector<Matrix> seeds = fixtures::canonical_class_fixtures();
    seeds.push_back(fixtures::aes_circulant());
    seeds.push_back(fixtures::twofish_mds());
    for (const Matrix& seed : seeds) {
        const MdsMatrix verified = MdsMatrix::verify(seed);
        for (unsigned e = 1; e < 256; ++e) {
            REQUIRE(is_mds_exhaustive(scale_mds(verified, Elem(e))).is_mds);
        }
    }
    // All MDS 2x2 matrices over GF(8) stay MDS under every scalar.
    const FieldSpec f = FieldSpec::make(3, 0xB);
    for (unsigned code = 0; code < 4096; ++code) {
        const Matrix m(f, 2, 2, {Elem(code & 7), Elem(code >> 3 & 7), Elem(code >> 6 & 7), Elem(code >> 9)});
        if (!is_mds(m).is_mds) continue;
        for (unsigned e = 1; e < 8; ++e) REQUIRE(oracle::all_minors_nonsingular(mat_scalar_mul(m, Elem(e))));
    }
}

TEST_CASE("inverse closure") {
    std::vector<Matrix> seeds = fixtures::canonical_class_fixtures();
    seeds.push_back(fixtures::aes_circulant());
    seeds.push_back(fixtures::twofish_mds());
    for (const Matrix& seed : seeds) CHECK(is_mds(mat_inverse(seed)).is_mds);
}

TEST_CASE("metrics") {
    const Matrix pattern = optimal_pattern(kAesField, 0x02, 0x05);
    const MatrixMetrics pm = metrics(pattern);
    CHECK(pm.ones_count == 9);
    CHECK(pm.distinct_nonone_constants == 2);
    CHECK(pm.biregular);

    const Matrix ones(kAesField, 4, 4, std::vector<Elem>(16, 1));
    const MatrixMetrics om = metrics(ones);
    CHECK(om.ones_count == 16);
    CHECK(om.distinct_nonone_constants == 0);
    CHECK_FALSE(om.biregular);

    const MatrixMetrics wm = metrics(fixtures::canonical_worstcase());
    CHECK(wm.ones_count == 0);
    CHECK(wm.distinct_nonone_constants == 16);

    // A 2x2 array is bi-regular when some row and some column differ.
    CHECK(is_biregular(Matrix::from_rows(kAesField, {{1, 2}, {1, 1}})));
    CHECK_FALSE(is_biregular(Matrix::from_rows(kAesField, {{1, 2}, {1, 2}})));
    CHECK_FALSE(is_biregular(Matrix::from_rows(kAesField, {{1, 1}, {2, 2}})));

    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const Matrix m = oracle::random_matrix(rng, FieldSpec::make(2, 0x7), 4, 4);
        const MatrixMetrics mm = metrics(m);
        std::set<Elem> others;
        for (Elem v : m.entries()) {
            if (v != 1) others.insert(v);
        }
        REQUIRE(mm.ones_count == count_value(m, 1));
        REQUIRE(mm.distinct_nonone_constants == others.size());
        REQUIRE(mm.ones_count + (16 - mm.ones_count) == 16);
    }
}

TEST_CASE("classification") {
    CHECK(classify(fixtures::aes_circulant()) == MatrixClass::Circulant);
    CHECK(classify(optimal_pattern(kAesField, 0x02, 0x05)) == MatrixClass::Optimal);
    CHECK(classify(fixtures::canonical_worstcase()) == MatrixClass::WorstCase);
    CHECK(classify(fixtures::twofish_mds()) == MatrixClass::NonCirculant);

    const auto fx = fixtures::canonical_class_fixtures();
    REQUIRE(fx.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(classify(fx[i]) == kAllClasses[i]);

    // Repeated values but rows with different value sets.
    CHECK(classify(Matrix::from_rows(kAesField, {{2, 3}, {2, 4}})) == MatrixClass::NonOptimal);
    // Thresholds are configuration.
    CHECK(classify(optimal_pattern(kAesField, 0x02, 0x05), {10, 2}) != MatrixClass::Optimal);
    CHECK_THROWS_AS(classify(Matrix::zeros(kAesField, 2, 3)), Error);

    for (MatrixClass c : kAllClasses) CHECK(parse_class(class_name(c)) == c);
    CHECK_FALSE(parse_class("triangular").has_value());
}

TEST_CASE("optimal instance search") {
    const OptimalInstance inst = find_optimal_instance(kAesField);
    CHECK(inst.a == 0x02);
    CHECK(inst.b == 0x05);
    CHECK(inst.matrix == optimal_pattern(kAesField, 0x02, 0x05));
    CHECK(oracle::all_minors_nonsingular(inst.matrix));
    CHECK(find_optimal_instance(kAesField).matrix == inst.matrix);
    CHECK(inst.matrix == fixtures::canonical_optimal());

    // Against an oracle scan in every small field.
    for (unsigned q = 1; q <= 4; ++q) {
        for (unsigned poly = 1u << q; poly < (2u << q); ++poly) {
            if (!is_irreducible(q, poly)) continue;
            const FieldSpec f = FieldSpec::make(q, poly);
            std::optional<std::pair<unsigned, unsigned>> want;
            for (unsigned a = 2; a < f.order() && !want; ++a) {
                for (unsigned b = 2; b < f.order() && !want; ++b) {
                    if (a != b && oracle::all_minors_nonsingular(optimal_pattern(f, Elem(a), Elem(b)))) want = {{a, b}};
                }
            }
            CAPTURE(f.to_string());
            if (want) {
                const OptimalInstance got = find_optimal_instance(f);
                CHECK(got.a == want->first);
                CHECK(got.b == want->second);
            } else {
                try {
                    find_optimal_instance(f);
                    FAIL("expected NoInstance");
                } catch (const Error& e) {
                    CHECK(e.code() == ErrorCode::NoInstance);
                }
            }
        }
    }
}

TEST_CASE("normalization by pivot") {
    const Matrix a = fixtures::canonical_optimal();
    const Matrix n = normalize_by_pivot(a, 0x02);
    const Elem inv = gf_inv(kAesField, 0x02);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(n.at(r, c) == oracle::mul(kAesField, inv, a.at(r, c)));
            CHECK((n.at(r, c) == 1) == (a.at(r, c) == 0x02));
        }
    }
    CHECK(metrics(n).ones_count == count_value(a, 0x02));
    CHECK(metrics(n).ones_count == 4);
    CHECK(metrics(a).ones_count == 9);
    CHECK(is_mds(n).is_mds);
    CHECK(metrics(normalize_by_pivot(a, 0x05)).ones_count == count_value(a, 0x05));

    for (Elem bad : {Elem(0x00), Elem(0x01), Elem(0x07)}) {
        try {
            normalize_by_pivot(a, bad);
            FAIL("expected BadPivot");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadPivot);
        }
    }
    try {
        normalize_by_pivot(Matrix::from_rows(kAesField, {{2, 2}, {2, 2}}), 0x02);
        FAIL("expected NotMds");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMds);
    }

    // Symbolic check over many pairs: positions of a become 1, of b become b/a.
    for (unsigned a_val = 2; a_val < 40; ++a_val) {
        for (unsigned b_val = 2; b_val < 40; ++b_val) {
            if (a_val == b_val) continue;
            const Matrix p = optimal_pattern(kAesField, Elem(a_val), Elem(b_val));
            if (!is_mds(p).is_mds) continue;
            const Matrix q = normalize_by_pivot(p, Elem(a_val));
            const Elem ia = gf_inv(kAesField, Elem(a_val));
            for (std::size_t i = 0; i < 16; ++i) {
                const Elem before = p.entries()[i];
                const Elem after = q.entries()[i];
                if (before == a_val) REQUIRE(after == 1);
                if (before == 1) REQUIRE(after == ia);
                if (before == b_val) REQUIRE(after == oracle::mul(kAesField, b_val, ia));
            }
            REQUIRE(metrics(q).ones_count < metrics(p).ones_count);
        }
    }
}

TEST_CASE("session matrix derivation") {
    const Matrix aes = fixtures::aes_circulant();
    CHECK(derive_session_matrix(aes, 1).matrix() == aes);
    CHECK_THROWS_AS(derive_session_matrix(aes, 0), Error);
    CHECK_THROWS_AS(derive_session_matrix(Matrix::identity(kAesField, 4), 2), Error);

    std::vector<Matrix> seeds = fixtures::canonical_class_fixtures();
    seeds.push_back(aes);
    seeds.push_back(fixtures::twofish_mds());
    for (const Matrix& seed : seeds) {
        const MdsMatrix verified = MdsMatrix::verify(seed);
        for (unsigned e = 1; e < 256; ++e) {
            const Matrix d = derive_session_matrix(verified, Elem(e)).matrix();
            for (std::size_t i = 0; i < 16; ++i) {
                REQUIRE(d.entries()[i] == oracle::mul(seed.spec(), e, seed.entries()[i]));
            }
        }
    }
    for (unsigned e = 1; e < 256; ++e) {
        REQUIRE(classify(derive_session_matrix(aes, Elem(e)).matrix()) == MatrixClass::Circulant);
    }
}

TEST_CASE("branch number matches the minor criterion") {
    CHECK(branch_number(Matrix::identity(kAesField, 1)) == 2);
    const FieldSpec gf4 = FieldSpec::make(2, 0x7);
    // All 3x3 matrices over GF(4).
    std::size_t mds_count = 0;
    for (unsigned code = 0; code < (1u << 18); ++code) {
        std::vector<Elem> e(9);
        for (std::size_t i = 0; i < 9; ++i) e[i] = Elem(code >> (2 * i) & 3);
        const Matrix m(gf4, 3, 3, e);
        const bool mds = is_mds(m).is_mds;
        mds_count += mds;
        REQUIRE((branch_number(m) == 4) == mds);
    }
    CHECK(mds_count > 0);
}
