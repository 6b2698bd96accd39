#pragma once

// Text and JSON interchange formats.
//
// Field:   gf(2^8, 0x11B)
// Matrix:  a field header line, then one line per row of space-separated
//          two-digit hex entries:
//
//            gf(2^8, 0x11B)
//            02 03 01 01
//            01 02 03 01
//
// Blank lines and lines starting with '#' are ignored. Malformed input
// throws Error(Parse); out-of-range entries throw InvalidElement.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dynmds/costmodel.hpp"
#include "dynmds/gfield.hpp"
#include "dynmds/matrix.hpp"
#include "dynmds/mds.hpp"
#include "dynmds/spn.hpp"

namespace dynmds::textio {

FieldSpec parse_field(std::string_view text);
std::string format_field(const FieldSpec& spec);

Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& m);
Matrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

/// `0x`-prefixed hex or decimal.
std::uint64_t parse_unsigned(std::string_view text);
/// parse_unsigned, then checked against the field (InvalidElement).
Elem parse_constant(std::string_view text, const FieldSpec& spec);

std::vector<std::uint8_t> parse_hex_bytes(std::string_view text);
std::string format_hex_bytes(std::span<const std::uint8_t> bytes);
std::string format_byte(Elem value);

nlohmann::json matrix_to_json(const Matrix& m);

/// Keys: is_mds, witness_rows, witness_cols, minors_checked.
nlohmann::json to_json(const MdsReport& report);
std::string to_text(const MdsReport& report);

/// Keys: ones_count, distinct_constants, biregular, class.
nlohmann::json to_json(const MatrixMetrics& metrics, MatrixClass matrix_class);
std::string to_text(const MatrixMetrics& metrics, MatrixClass matrix_class);

/// Keys: nontrivial_muls, free_muls, tables, memory_units, cycle_proxy, class.
nlohmann::json to_json(const CostReport& report);
std::string to_text(const CostReport& report);

/// Aligned table, one row per class: rank, type, cycle proxy, multiplications,
/// tables, memory.
std::string cost_table(std::span<const RankedClass> ranking);

/// Session descriptor: `key = value` lines with keys seed-matrix-file,
/// secret-hex, rounds, mode (session|round). Relative matrix paths resolve
/// against the descriptor's directory.
struct SessionDescriptor {
    std::filesystem::path seed_matrix_file;
    std::vector<std::uint8_t> secret;
    std::size_t rounds = spn::kDefaultRounds;
    spn::MatrixMode mode = spn::MatrixMode::PerSession;
};

SessionDescriptor parse_session_descriptor(std::string_view text,
                                           const std::filesystem::path& base_dir = {});
SessionDescriptor read_session_descriptor(const std::filesystem::path& path);

}  // namespace dynmds::textio
