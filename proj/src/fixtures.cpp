#include "dynmds/fixtures.hpp"

#include <array>

namespace dynmds::fixtures {

FieldSpec twofish_field() { return FieldSpec::make(8, 0x169); }

Matrix aes_circulant() {
    constexpr std::array<Elem, 4> row{0x02, 0x03, 0x01, 0x01};
    return circulant(kAesField, row);
}

Matrix twofish_mds() {
    return Matrix::from_rows(twofish_field(), {{0x01, 0xEF, 0x5B, 0x5B},
                                               {0x5B, 0xEF, 0xEF, 0x01},
                                               {0xEF, 0x5B, 0x01, 0xEF},
                                               {0xEF, 0x01, 0xEF, 0x5B}});
}

Matrix canonical_optimal() {
    return Matrix::from_rows(kAesField, {{0x02, 0x01, 0x01, 0x01},
                                         {0x01, 0x01, 0x05, 0x02},
                                         {0x01, 0x02, 0x01, 0x05},
                                         {0x01, 0x05, 0x02, 0x01}});
}

Matrix canonical_circulant() {
    constexpr std::array<Elem, 4> row{0x02, 0x03, 0x04, 0x07};
    return circulant(kAesField, row);
}

Matrix canonical_noncirculant() {
    return Matrix::from_rows(kAesField, {{0x02, 0x03, 0x04, 0x07},
                                         {0x04, 0x07, 0x02, 0x03},
                                         {0x07, 0x02, 0x03, 0x04},
                                         {0x03, 0x04, 0x07, 0x02}});
}

Matrix canonical_nonoptimal() {
    return Matrix::from_rows(kAesField, {{0x7A, 0xBC, 0xE5, 0x30},
                                         {0xBC, 0xBB, 0x30, 0x35},
                                         {0xBB, 0x96, 0x7A, 0x4F},
                                         {0xE5, 0x96, 0x4F, 0x35}});
}

Matrix canonical_worstcase() {
    return Matrix::from_rows(kAesField, {{0x8A, 0x38, 0xE0, 0x6B},
                                         {0xFC, 0x10, 0xC7, 0x5B},
                                         {0xA2, 0x6C, 0x79, 0x21},
                                         {0xBB, 0xC0, 0x25, 0xC5}});
}

std::vector<Matrix> canonical_class_fixtures() {
    return {canonical_optimal(), canonical_circulant(), canonical_noncirculant(),
            canonical_nonoptimal(), canonical_worstcase()};
}

}  // namespace dynmds::fixtures
