#pragma once

// Seed matrices shared by the CLI, the self-test and the test suites.

#include <vector>

#include "dynmds/gfield.hpp"
#include "dynmds/matrix.hpp"

namespace dynmds::fixtures {

/// gf(2^8, 0x169), the Twofish field.
FieldSpec twofish_field();

/// circulant(02 03 01 01) over gf(2^8, 0x11B).
Matrix aes_circulant();
/// The Twofish MDS matrix over gf(2^8, 0x169); not circulant.
Matrix twofish_mds();

/// One MDS seed per matrix class over gf(2^8, 0x11B), used for cost ranking.
Matrix canonical_optimal();       // optimal pattern with a = 02, b = 05
Matrix canonical_circulant();     // circulant(02 03 04 07)
Matrix canonical_noncirculant();  // rows of canonical_circulant reordered
Matrix canonical_nonoptimal();    // 8 constants, each used twice
Matrix canonical_worstcase();     // 16 distinct constants

/// In class order Optimal, Circulant, NonCirculant, NonOptimal, WorstCase.
std::vector<Matrix> canonical_class_fixtures();

}  // namespace dynmds::fixtures
