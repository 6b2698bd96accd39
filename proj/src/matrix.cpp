#include "dynmds/matrix.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "dynmds/kernels.hpp"

namespace dynmds {

namespace {

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) {
        throw Error(ErrorCode::NotSquare, std::string(what) + " needs a square matrix, got " +
                                              std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()));
    }
}

void require_same_field(const Matrix& a, const Matrix& b) {
    if (a.spec() != b.spec()) {
        throw Error(ErrorCode::ShapeMismatch,
                    "field mismatch: " + a.spec().to_string() + " vs " + b.spec().to_string());
    }
}

Elem cofactor_expand(const FieldSpec& spec, std::span<const Elem> m, std::size_t n) {
    if (n == 1) return m[0];
    if (n == 2) return gf_add(spec, gf_mul(spec, m[0], m[3]), gf_mul(spec, m[1], m[2]));
    // Characteristic 2: every cofactor sign is +1.
    std::vector<Elem> minor((n - 1) * (n - 1));
    Elem det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[j] == 0) continue;
        std::size_t w = 0;
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) minor[w++] = m[r * n + c];
            }
        }
        det = gf_add(spec, det, gf_mul(spec, m[j], cofactor_expand(spec, minor, n - 1)));
    }
    return det;
}

}  // namespace

Matrix::Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : spec_(spec), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0 || rows > kMaxDim || cols > kMaxDim) {
        throw Error(ErrorCode::ShapeMismatch, "matrix shape " + std::to_string(rows) + "x" +
                                                  std::to_string(cols) + " outside 1..8");
    }
    if (entries_.size() != rows * cols) {
        throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(rows * cols) +
                                                  " entries, got " + std::to_string(entries_.size()));
    }
    for (Elem v : entries_) check_element(spec, v);
}

Matrix Matrix::zeros(const FieldSpec& spec, std::size_t rows, std::size_t cols) {
    return Matrix(spec, rows, cols, std::vector<Elem>(rows * cols, 0));
}

Matrix Matrix::identity(const FieldSpec& spec, std::size_t n) {
    std::vector<Elem> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return Matrix(spec, n, n, std::move(e));
}

Matrix Matrix::from_rows(const FieldSpec& spec,
                         std::initializer_list<std::initializer_list<unsigned>> rows) {
    const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    std::vector<Elem> e;
    e.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.size() != cols) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
        for (unsigned v : row) e.push_back(check_element(spec, v));
    }
    return Matrix(spec, rows.size(), cols, std::move(e));
}

Matrix mat_scalar_mul(const Matrix& a, Elem e) {
    check_element(a.spec(), e);
    std::vector<Elem> out(a.entries().size());
    kernels::mul_region(kernels::MulConst(a.spec(), e), a.entries(), out);
    return Matrix(a.spec(), a.rows(), a.cols(), std::move(out));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ: " +
                                                  std::to_string(a.cols()) + " vs " +
                                                  std::to_string(b.rows()));
    }
    const FieldSpec& f = a.spec();
    std::vector<Elem> out(a.rows() * b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Elem acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc ^= gf_mul(f, a.at(i, k), b.at(k, j));
            out[i * b.cols() + j] = acc;
        }
    }
    return Matrix(f, a.rows(), b.cols(), std::move(out));
}

std::vector<Elem> mat_vec_mul(const Matrix& a, std::span<const Elem> v) {
    if (v.size() != a.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "vector length " + std::to_string(v.size()) +
                                                  " vs " + std::to_string(a.cols()) + " columns");
    }
    std::vector<Elem> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Elem acc = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) acc ^= gf_mul(a.spec(), a.at(i, k), v[k]);
        out[i] = acc;
    }
    return out;
}

Elem determinant(const Matrix& a) {
    require_square(a, "determinant");
    const FieldSpec& f = a.spec();
    const std::size_t n = a.rows();
    std::array<Elem, kMaxDim * kMaxDim> m{};
    std::copy(a.entries().begin(), a.entries().end(), m.begin());
    auto at = [&](std::size_t r, std::size_t c) -> Elem& { return m[r * n + c]; };

    // Bareiss: after step k every remaining entry is a (k+1)x(k+1) minor and
    // the division by the previous pivot is exact.
    Elem previous_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            // Row swaps flip the sign, which is a no-op in characteristic 2.
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
        }
        const Elem pivot = at(k, k);
        const Elem divisor = gf_inv(f, previous_pivot);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const Elem cross = gf_add(f, gf_mul(f, pivot, at(i, j)), gf_mul(f, at(i, k), at(k, j)));
                at(i, j) = gf_mul(f, cross, divisor);
            }
        }
        previous_pivot = pivot;
    }
    return at(n - 1, n - 1);
}

Elem determinant_cofactor(const Matrix& a) {
    require_square(a, "determinant");
    return cofactor_expand(a.spec(), a.entries(), a.rows());
}

Matrix submatrix(const Matrix& a, const MinorIndex& idx) {
    const std::size_t k = idx.rows.size();
    if (k == 0 || k != idx.cols.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "minor index sets must be nonempty and equal size");
    }
    auto check = [](const std::vector<std::size_t>& set, std::size_t bound) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] >= bound || (i > 0 && set[i] <= set[i - 1])) {
                throw Error(ErrorCode::IndexOutOfRange,
                            "minor indices must be strictly increasing and in range");
            }
        }
    };
    check(idx.rows, a.rows());
    check(idx.cols, a.cols());
    std::vector<Elem> out;
    out.reserve(k * k);
    for (std::size_t r : idx.rows) {
        for (std::size_t c : idx.cols) out.push_back(a.at(r, c));
    }
    return Matrix(a.spec(), k, k, std::move(out));
}

Matrix mat_inverse(const Matrix& a) {
    require_square(a, "inverse");
    const FieldSpec& f = a.spec();
    const std::size_t n = a.rows();
    std::vector<Elem> left(a.entries().begin(), a.entries().end());
    std::vector<Elem> right(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) right[i * n + i] = 1;

    auto swap_rows = [n](std::vector<Elem>& m, std::size_t x, std::size_t y) {
        for (std::size_t c = 0; c < n; ++c) std::swap(m[x * n + c], m[y * n + c]);
    };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        while (pivot_row < n && left[pivot_row * n + col] == 0) ++pivot_row;
        if (pivot_row == n) throw Error(ErrorCode::Singular, "matrix is singular");
        if (pivot_row != col) {
            swap_rows(left, pivot_row, col);
            swap_rows(right, pivot_row, col);
        }
        const Elem scale = gf_inv(f, left[col * n + col]);
        for (std::size_t c = 0; c < n; ++c) {
            left[col * n + c] = gf_mul(f, left[col * n + c], scale);
            right[col * n + c] = gf_mul(f, right[col * n + c], scale);
        }
        for (std::size_t r = 0; r < n; ++r) {
            const Elem factor = left[r * n + col];
            if (r == col || factor == 0) continue;
            for (std::size_t c = 0; c < n; ++c) {
                left[r * n + c] ^= gf_mul(f, factor, left[col * n + c]);
                right[r * n + c] ^= gf_mul(f, factor, right[col * n + c]);
            }
        }
    }
    return Matrix(f, n, n, std::move(right));
}

Matrix circulant(const FieldSpec& spec, std::span<const Elem> first_row) {
    const std::size_t n = first_row.size();
    if (n == 0) throw Error(ErrorCode::ShapeMismatch, "circulant needs a nonempty first row");
    std::vector<Elem> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = first_row[(j + n - i) % n];
    }
    return Matrix(spec, n, n, std::move(e));
}

bool is_circulant(const Matrix& a) noexcept {
    if (!a.is_square()) return false;
    const std::size_t n = a.rows();
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(i, j) != a.at(0, (j + n - i) % n)) return false;
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k == 0 || k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::uint64_t square_submatrix_count(std::size_t rows, std::size_t cols) {
    auto choose = [](std::uint64_t n, std::uint64_t k) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) total += choose(rows, k) * choose(cols, k);
    return total;
}

}  // namespace dynmds
