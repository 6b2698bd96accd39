#include "dynmds/mds.hpp"

#include <bitset>
#include <set>
#include <string>

namespace dynmds {

namespace {

void require_square(const Matrix& a) {
    if (!a.is_square()) {
        throw Error(ErrorCode::NotSquare, "MDS analysis needs a square matrix, got " +
                                              std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()));
    }
}

void require_nonzero(const FieldSpec& spec, Elem e) {
    check_element(spec, e);
    if (e == 0) throw Error(ErrorCode::ZeroConstant, "scaling constant must be nonzero");
}

template <typename Det>
MdsReport scan_minors(const Matrix& a, bool early_exit, Det det) {
    require_square(a);
    MdsReport report;
    report.is_mds = true;
    const std::size_t n = a.rows();
    for (std::size_t k = 1; k <= n; ++k) {
        const auto subsets = index_subsets(n, k);
        for (const auto& rows : subsets) {
            for (const auto& cols : subsets) {
                MinorIndex idx{rows, cols};
                ++report.minors_checked;
                if (det(submatrix(a, idx)) != 0) continue;
                if (report.is_mds) {
                    report.is_mds = false;
                    report.witness = std::move(idx);
                }
                if (early_exit) return report;
            }
        }
    }
    return report;
}

void debug_verify([[maybe_unused]] const Matrix& m) {
#ifndef NDEBUG
    if (!is_mds(m).is_mds) throw Error(ErrorCode::NotMds, "scaled matrix lost the MDS property");
#endif
}

}  // namespace

MdsReport is_mds(const Matrix& a) {
    return scan_minors(a, true, [](const Matrix& s) { return determinant(s); });
}

MdsReport is_mds_exhaustive(const Matrix& a) {
    return scan_minors(a, false, [](const Matrix& s) { return determinant_cofactor(s); });
}

MdsMatrix MdsMatrix::verify(Matrix a) {
    const MdsReport report = is_mds(a);
    if (!report.is_mds) {
        std::string where;
        for (std::size_t r : report.witness->rows) where += std::to_string(r);
        where += "/";
        for (std::size_t c : report.witness->cols) where += std::to_string(c);
        throw Error(ErrorCode::NotMds, "matrix is not MDS: singular minor rows/cols " + where);
    }
    return MdsMatrix(std::move(a));
}

MdsMatrix scale_mds(const MdsMatrix& a, Elem e) {
    require_nonzero(a.matrix().spec(), e);
    MdsMatrix out(mat_scalar_mul(a.matrix(), e));
    debug_verify(out.matrix());
    return out;
}

MdsMatrix scale_mds(const Matrix& a, Elem e) {
    require_nonzero(a.spec(), e);
    return scale_mds(MdsMatrix::verify(a), e);
}

Matrix normalize_by_pivot(const Matrix& a, Elem pivot) {
    if (pivot == 0 || pivot == 1) {
        throw Error(ErrorCode::BadPivot, "pivot must be a constant other than 0 and 1");
    }
    bool present = false;
    for (Elem v : a.entries()) present = present || v == pivot;
    if (!present) throw Error(ErrorCode::BadPivot, "pivot does not occur in the matrix");
    MdsMatrix::verify(a);
    return mat_scalar_mul(a, gf_inv(a.spec(), pivot));
}

bool is_biregular(const Matrix& a) {
    for (std::size_t r0 = 0; r0 < a.rows(); ++r0) {
        for (std::size_t r1 = r0 + 1; r1 < a.rows(); ++r1) {
            for (std::size_t c0 = 0; c0 < a.cols(); ++c0) {
                for (std::size_t c1 = c0 + 1; c1 < a.cols(); ++c1) {
                    const Elem w = a.at(r0, c0), x = a.at(r0, c1);
                    const Elem y = a.at(r1, c0), z = a.at(r1, c1);
                    const bool row_differs = w != x || y != z;
                    const bool col_differs = w != y || x != z;
                    if (!row_differs || !col_differs) return false;
                }
            }
        }
    }
    return true;
}

MatrixMetrics metrics(const Matrix& a) {
    MatrixMetrics m;
    std::bitset<256> seen;
    for (Elem v : a.entries()) {
        if (v == 1) {
            ++m.ones_count;
        } else {
            seen.set(v);
        }
    }
    m.distinct_nonone_constants = seen.count();
    m.biregular = is_biregular(a);
    return m;
}

std::string_view class_name(MatrixClass c) noexcept {
    switch (c) {
        case MatrixClass::Optimal: return "optimal";
        case MatrixClass::Circulant: return "circulant";
        case MatrixClass::NonCirculant: return "non-circulant";
        case MatrixClass::NonOptimal: return "non-optimal";
        case MatrixClass::WorstCase: return "worst-case";
    }
    return "unknown";
}

std::optional<MatrixClass> parse_class(std::string_view name) noexcept {
    for (MatrixClass c : kAllClasses) {
        if (class_name(c) == name) return c;
    }
    return std::nullopt;
}

MatrixClass classify(const Matrix& a, const ClassThresholds& thresholds) {
    require_square(a);
    const MatrixMetrics m = metrics(a);
    if (m.biregular && m.ones_count >= thresholds.optimal_min_ones &&
        m.distinct_nonone_constants <= thresholds.optimal_max_constants) {
        return MatrixClass::Optimal;
    }
    if (is_circulant(a)) return MatrixClass::Circulant;

    const std::set<Elem> all(a.entries().begin(), a.entries().end());
    if (all.size() == a.entries().size()) return MatrixClass::WorstCase;

    const std::set<Elem> first(a.row(0).begin(), a.row(0).end());
    for (std::size_t r = 1; r < a.rows(); ++r) {
        if (std::set<Elem>(a.row(r).begin(), a.row(r).end()) != first) return MatrixClass::NonOptimal;
    }
    return MatrixClass::NonCirculant;
}

Matrix optimal_pattern(const FieldSpec& spec, Elem a, Elem b) {
    return Matrix(spec, 4, 4,
                  {a, 1, 1, 1,
                   1, 1, b, a,
                   1, a, 1, b,
                   1, b, a, 1});
}

OptimalInstance find_optimal_instance(const FieldSpec& spec) {
    for (unsigned a = 2; a < spec.order(); ++a) {
        for (unsigned b = 2; b < spec.order(); ++b) {
            if (a == b) continue;
            Matrix m = optimal_pattern(spec, static_cast<Elem>(a), static_cast<Elem>(b));
            if (is_mds(m).is_mds) return {static_cast<Elem>(a), static_cast<Elem>(b), std::move(m)};
        }
    }
    throw Error(ErrorCode::NoInstance, "no MDS instance of the optimal pattern in " + spec.to_string());
}

MdsMatrix derive_session_matrix(const MdsMatrix& seed, Elem e) {
    const Matrix& a = seed.matrix();
    require_nonzero(a.spec(), e);

    std::bitset<256> seen;
    std::vector<Elem> constants;
    for (Elem v : a.entries()) {
        if (v != 1 && !seen.test(v)) {
            seen.set(v);
            constants.push_back(v);
        }
    }
    const ProductRows rows = build_product_rows(a.spec(), constants);

    std::vector<Elem> out;
    out.reserve(a.entries().size());
    for (Elem v : a.entries()) out.push_back(v == 1 ? e : rows.product(v, e));
    MdsMatrix result(Matrix(a.spec(), a.rows(), a.cols(), std::move(out)));
    debug_verify(result.matrix());
    return result;
}

MdsMatrix derive_session_matrix(const Matrix& seed, Elem e) {
    require_nonzero(seed.spec(), e);
    return derive_session_matrix(MdsMatrix::verify(seed), e);
}

std::size_t branch_number(const Matrix& a) {
    const std::size_t n = a.cols();
    const std::uint64_t q = a.spec().order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;

    std::size_t best = n + a.rows() + 1;
    std::vector<Elem> v(n, 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t rest = code;
        std::size_t weight = 0;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<Elem>(rest % q);
            rest /= q;
            weight += v[i] != 0;
        }
        for (Elem y : mat_vec_mul(a, v)) weight += y != 0;
        best = std::min(best, weight);
    }
    return best;
}

}  // namespace dynmds
