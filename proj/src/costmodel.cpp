#include "dynmds/costmodel.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>

namespace dynmds {

bool CostParams::valid() const noexcept {
    return cost_free <= cost_lookup && cost_lookup <= cost_mul;
}

CostReport estimate_generation(const Matrix& a, Elem e, const CostParams& params) {
    if (!a.is_square()) throw Error(ErrorCode::NotSquare, "cost model needs a square matrix");
    check_element(a.spec(), e);
    if (e == 0) throw Error(ErrorCode::ZeroConstant, "scaling constant must be nonzero");
    if (!params.valid()) {
        throw std::invalid_argument("cost params need cost_free <= cost_lookup <= cost_mul");
    }

    CostReport r;
    std::uint64_t ones = 0;
    std::bitset<256> seen;
    for (Elem v : a.entries()) {
        if (v == 1) {
            ++ones;
        } else if (seen.test(v)) {
            ++r.lookups;
        } else {
            seen.set(v);
            ++r.nontrivial_muls;
        }
    }
    r.free_muls = ones + r.lookups;
    r.distinct_constant_tables = r.nontrivial_muls;

    const std::uint64_t row_entries = a.spec().order();
    const std::uint64_t overhead =
        params.fixed_overhead.value_or(2 * row_entries * params.bytes_per_table_entry);
    r.memory_units = r.distinct_constant_tables * row_entries * params.bytes_per_table_entry + overhead;
    r.cycle_proxy = r.nontrivial_muls * params.cost_mul + r.lookups * params.cost_lookup +
                    ones * params.cost_free;
    r.matrix_class = classify(a);
    return r;
}

std::vector<RankedClass> rank_classes(std::span<const Matrix> fixtures, Elem e,
                                      const CostParams& params) {
    if (fixtures.empty()) throw Error(ErrorCode::MissingClass, "no fixtures to rank");
    std::vector<RankedClass> out;
    out.reserve(fixtures.size());
    for (const Matrix& m : fixtures) {
        CostReport report = estimate_generation(m, e, params);
        for (const RankedClass& seen : out) {
            if (seen.matrix_class == report.matrix_class) {
                throw Error(ErrorCode::DuplicateClass,
                            "two fixtures classify as " + std::string(class_name(report.matrix_class)));
            }
        }
        out.push_back({0, report.matrix_class, report});
    }
    std::stable_sort(out.begin(), out.end(), [](const RankedClass& x, const RankedClass& y) {
        return x.report.cycle_proxy < y.report.cycle_proxy;
    });
    std::size_t rank = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i == 0 || out[i].report.cycle_proxy != out[i - 1].report.cycle_proxy) ++rank;
        out[i].rank = rank;
    }
    return out;
}

std::vector<RankedClass> rank_all_classes(std::span<const Matrix> fixtures, Elem e,
                                          const CostParams& params) {
    auto ranking = rank_classes(fixtures, e, params);
    for (MatrixClass c : kAllClasses) {
        const bool present = std::any_of(ranking.begin(), ranking.end(),
                                         [c](const RankedClass& r) { return r.matrix_class == c; });
        if (!present) {
            throw Error(ErrorCode::MissingClass,
                        "no fixture of class " + std::string(class_name(c)));
        }
    }
    return ranking;
}

std::vector<double> benchmark_derivation(std::span<const MdsMatrix> fixtures, Elem e,
                                         const BenchmarkConfig& config) {
    using clock = std::chrono::steady_clock;
    std::vector<double> best(fixtures.size(), 0.0);
    std::size_t sink = 0;
    for (std::size_t rep = 0; rep < config.repeats; ++rep) {
        for (std::size_t f = 0; f < fixtures.size(); ++f) {
            const auto start = clock::now();
            for (std::size_t i = 0; i < config.iterations; ++i) {
                const MdsMatrix m = derive_session_matrix(fixtures[f], e);
                sink += m.matrix().at(0, 0);
            }
            const std::chrono::duration<double, std::nano> elapsed = clock::now() - start;
            const double per_call = elapsed.count() / static_cast<double>(config.iterations);
            if (rep == 0 || per_call < best[f]) best[f] = per_call;
        }
    }
    // Keeps the derivations observable.
    if (sink == static_cast<std::size_t>(-1)) best.push_back(0.0);
    return best;
}

std::vector<std::size_t> dense_ranks(std::span<const double> values) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> ranks;
    ranks.reserve(values.size());
    for (double v : values) {
        ranks.push_back(static_cast<std::size_t>(
                            std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    }
    return ranks;
}

}  // namespace dynmds
