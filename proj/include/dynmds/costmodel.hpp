#pragma once

// Cost of deriving a dynamic matrix e*A with precomputed product rows.
//
// Per entry of A:
//   entry == 1                      free (the product is e itself)
//   first occurrence of a constant  one multiplication, plus a 2^q-entry
//                                   product row kept in memory
//   repeated constant               one lookup into the precomputed row
//
// The units are abstract. Only the ordering across matrix classes is
// meaningful; absolute cycle counts depend on the target hardware.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dynmds/mds.hpp"

namespace dynmds {

struct CostParams {
    std::uint64_t cost_mul = 16;
    std::uint64_t cost_lookup = 2;
    std::uint64_t cost_free = 0;
    std::uint64_t bytes_per_table_entry = 1;
    /// Defaults to one log/antilog pair: 2 * 2^q * bytes_per_table_entry.
    std::optional<std::uint64_t> fixed_overhead;

    /// Requires cost_free <= cost_lookup <= cost_mul.
    bool valid() const noexcept;
};

struct CostReport {
    std::uint64_t nontrivial_muls = 0;
    /// Entries needing no fresh multiplication: ones plus repeated lookups.
    std::uint64_t free_muls = 0;
    /// Portion of free_muls served from a product row.
    std::uint64_t lookups = 0;
    std::uint64_t distinct_constant_tables = 0;
    std::uint64_t memory_units = 0;
    std::uint64_t cycle_proxy = 0;
    MatrixClass matrix_class = MatrixClass::NonOptimal;

    friend bool operator==(const CostReport&, const CostReport&) = default;
};

/// Throws ZeroConstant, NotSquare, or std::invalid_argument on bad params.
CostReport estimate_generation(const Matrix& a, Elem e, const CostParams& params = {});

struct RankedClass {
    /// Dense rank by cycle_proxy, starting at 1; equal costs share a rank.
    std::size_t rank;
    MatrixClass matrix_class;
    CostReport report;
};

/// Ascending by cycle_proxy. MissingClass for an empty list, DuplicateClass
/// when two fixtures fall in the same class.
std::vector<RankedClass> rank_classes(std::span<const Matrix> fixtures, Elem e,
                                      const CostParams& params = {});
/// As rank_classes, and additionally MissingClass unless all five classes
/// are present.
std::vector<RankedClass> rank_all_classes(std::span<const Matrix> fixtures, Elem e,
                                          const CostParams& params = {});

struct BenchmarkConfig {
    std::size_t iterations = 20000;
    std::size_t repeats = 9;
};

/// Best-of-repeats wall-clock nanoseconds per derive_session_matrix call,
/// one entry per fixture. Fixtures are interleaved within each repeat.
std::vector<double> benchmark_derivation(std::span<const MdsMatrix> fixtures, Elem e,
                                         const BenchmarkConfig& config = {});

/// Dense ranks (1 = smallest) of a sequence of values.
std::vector<std::size_t> dense_ranks(std::span<const double> values);

}  // namespace dynmds
