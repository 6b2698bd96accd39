#pragma once

// MDS verification and the dynamic-matrix constructions.
//
// A square matrix is MDS when every square submatrix is nonsingular. Two
// ways of deriving new MDS matrices from a seed are provided:
//
//   scale_mds           e*A for a nonzero constant e. det(e*S) = e^k det(S),
//                       so every minor stays nonzero.
//   normalize_by_pivot  a^{-1}*A for a constant a of A, which turns every
//                       occurrence of a into 1.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "dynmds/gfield.hpp"
#include "dynmds/matrix.hpp"

namespace dynmds {

struct MdsReport {
    bool is_mds = false;
    /// First singular minor in enumeration order; present iff !is_mds.
    std::optional<MinorIndex> witness;
    std::uint64_t minors_checked = 0;
};

/// Early-exit check. Minors are visited by size k = 1..n, then row subsets
/// and column subsets in lexicographic order. Throws NotSquare.
MdsReport is_mds(const Matrix& a);
/// Evaluates every minor with the cofactor determinant, no early exit.
/// minors_checked is always the full count; witness is the first failure.
MdsReport is_mds_exhaustive(const Matrix& a);

/// A matrix that passed is_mds. Only constructible through verification, so
/// functions taking one skip the minor enumeration.
class MdsMatrix {
public:
    /// Throws NotMds (or NotSquare).
    static MdsMatrix verify(Matrix a);

    const Matrix& matrix() const noexcept { return matrix_; }
    operator const Matrix&() const noexcept { return matrix_; }

private:
    explicit MdsMatrix(Matrix a) : matrix_(std::move(a)) {}
    friend MdsMatrix scale_mds(const MdsMatrix&, Elem);
    friend MdsMatrix derive_session_matrix(const MdsMatrix&, Elem);

    Matrix matrix_;
};

/// e*A. ZeroConstant for e = 0. The Matrix overload verifies A first
/// (NotMds); debug builds re-verify the result.
MdsMatrix scale_mds(const MdsMatrix& a, Elem e);
MdsMatrix scale_mds(const Matrix& a, Elem e);

/// pivot^{-1} * A. BadPivot when pivot is 0, 1 or absent from A; NotMds when
/// A fails verification.
Matrix normalize_by_pivot(const Matrix& a, Elem pivot);

struct MatrixMetrics {
    std::size_t ones_count = 0;
    std::size_t distinct_nonone_constants = 0;
    bool biregular = false;
};

/// A 2x2 array is bi-regular when at least one row and at least one column
/// hold two different entries; a larger matrix is bi-regular when all of its
/// 2x2 submatrices are.
bool is_biregular(const Matrix& a);
MatrixMetrics metrics(const Matrix& a);

enum class MatrixClass { Optimal, Circulant, NonCirculant, NonOptimal, WorstCase };

inline constexpr MatrixClass kAllClasses[] = {MatrixClass::Optimal, MatrixClass::Circulant,
                                              MatrixClass::NonCirculant, MatrixClass::NonOptimal,
                                              MatrixClass::WorstCase};

std::string_view class_name(MatrixClass c) noexcept;
std::optional<MatrixClass> parse_class(std::string_view name) noexcept;

struct ClassThresholds {
    std::size_t optimal_min_ones = 9;
    std::size_t optimal_max_constants = 2;
};

/// Precedence, first match wins:
///   Optimal       bi-regular, ones >= 9, at most 2 distinct non-one constants
///   Circulant     rows are successive right-rotations of row 0
///   WorstCase     all entries pairwise distinct
///   NonCirculant  every row holds the same set of values
///   NonOptimal    otherwise
/// Throws NotSquare.
MatrixClass classify(const Matrix& a, const ClassThresholds& thresholds = {});

/// The 4x4 pattern [[a,1,1,1],[1,1,b,a],[1,a,1,b],[1,b,a,1]].
Matrix optimal_pattern(const FieldSpec& spec, Elem a, Elem b);

struct OptimalInstance {
    Elem a;
    Elem b;
    Matrix matrix;
};

/// Lexicographically smallest (a, b), a, b not in {0, 1}, a != b, for which
/// optimal_pattern is MDS. NoInstance when none exists.
OptimalInstance find_optimal_instance(const FieldSpec& spec);

/// e*seed, built from per-constant product rows for the distinct non-one
/// entries of seed; entries equal to 1 map straight to e.
MdsMatrix derive_session_matrix(const MdsMatrix& seed, Elem e);
MdsMatrix derive_session_matrix(const Matrix& seed, Elem e);

/// min over nonzero v of wt(v) + wt(Av); wt counts nonzero coordinates.
/// Brute force over all q^n vectors, so only for tiny shapes.
std::size_t branch_number(const Matrix& a);

}  // namespace dynmds
