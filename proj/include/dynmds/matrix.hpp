#pragma once

// Dense matrices over GF(2^q).
//
// Matrices are immutable values; every operation returns a fresh matrix.
// Shapes are capped at kMaxDim x kMaxDim because the MDS check enumerates
// all square submatrices, sum_k C(n,k)^2 of them:
//
//   n       2    3    4     5     6      7      8
//   minors  5   19   69   251   923   3431  12869

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "dynmds/gfield.hpp"

namespace dynmds {

inline constexpr std::size_t kMaxDim = 8;

class Matrix {
public:
    /// Validates shape (1..kMaxDim) and every entry against the field.
    Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix zeros(const FieldSpec& spec, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& spec, std::size_t n);
    static Matrix from_rows(const FieldSpec& spec,
                            std::initializer_list<std::initializer_list<unsigned>> rows);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Elem at(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const noexcept {
        return {entries_.data() + r * cols_, cols_};
    }
    /// Row-major.
    std::span<const Elem> entries() const noexcept { return entries_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> entries_;
};

/// Equal-size sorted row and column index sets selecting a square submatrix.
struct MinorIndex {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    std::size_t size() const noexcept { return rows.size(); }
    friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

Matrix mat_scalar_mul(const Matrix& a, Elem e);
Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<Elem> mat_vec_mul(const Matrix& a, std::span<const Elem> v);

/// Fraction-free (Bareiss) elimination; pivot is the first nonzero entry in
/// the column. Throws NotSquare.
Elem determinant(const Matrix& a);
/// Laplace expansion along the first row. Exponential; meant as an oracle.
Elem determinant_cofactor(const Matrix& a);

Matrix submatrix(const Matrix& a, const MinorIndex& idx);
/// Gauss-Jordan. Throws Singular or NotSquare.
Matrix mat_inverse(const Matrix& a);

/// Row i is first_row rotated right by i positions.
Matrix circulant(const FieldSpec& spec, std::span<const Elem> first_row);
bool is_circulant(const Matrix& a) noexcept;

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);
/// Number of square submatrices of an m x n matrix.
std::uint64_t square_submatrix_count(std::size_t rows, std::size_t cols);

}  // namespace dynmds
