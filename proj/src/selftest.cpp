#include "dynmds/selftest.hpp"

#include <random>

#include "dynmds/fixtures.hpp"
#include "dynmds/mds.hpp"

namespace dynmds {

namespace {

CheckResult finish(std::string name, std::uint64_t cases, std::uint64_t failures) {
    return {std::move(name), failures == 0, cases, failures};
}

CheckResult inverse_check() {
    std::uint64_t failures = 0;
    for (unsigned x = 1; x < 256; ++x) {
        const Elem inv = gf_inv(kAesField, static_cast<Elem>(x));
        if (gf_mul(kAesField, static_cast<Elem>(x), inv) != 1) ++failures;
        if (inv != gf_pow(kAesField, static_cast<Elem>(x), 254)) ++failures;
    }
    return finish("field_inverse_q8", 255, failures);
}

CheckResult theorem_closure() {
    const Matrix seeds[] = {fixtures::aes_circulant(), find_optimal_instance(kAesField).matrix,
                            fixtures::twofish_mds()};
    std::uint64_t cases = 0, failures = 0;
    for (const Matrix& seed : seeds) {
        for (unsigned e = 1; e < seed.spec().order(); ++e) {
            ++cases;
            if (!is_mds(mat_scalar_mul(seed, static_cast<Elem>(e))).is_mds) ++failures;
        }
    }
    return finish("theorem_closure", cases, failures);
}

CheckResult determinant_agreement(std::uint64_t seed) {
    std::uint64_t cases = 0, failures = 0;
    for (const FieldSpec f : {FieldSpec::make(2, 0x7), FieldSpec::make(4, 0x13)}) {
        const unsigned q = f.order();
        for (unsigned code = 0; code < q * q * q * q; ++code) {
            const Matrix m(f, 2, 2,
                           {static_cast<Elem>(code % q), static_cast<Elem>(code / q % q),
                            static_cast<Elem>(code / (q * q) % q), static_cast<Elem>(code / (q * q * q))});
            ++cases;
            if (determinant(m) != determinant_cofactor(m)) ++failures;
        }
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 10000; ++i) {
        std::vector<Elem> e(16);
        for (Elem& v : e) v = static_cast<Elem>(rng() & 0xFF);
        const Matrix m(kAesField, 4, 4, std::move(e));
        ++cases;
        if (determinant(m) != determinant_cofactor(m)) ++failures;
    }
    return finish("determinant_oracles", cases, failures);
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
    return {inverse_check(), theorem_closure(), determinant_agreement(seed)};
}

}  // namespace dynmds
