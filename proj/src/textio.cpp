#include "dynmds/textio.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

namespace dynmds::textio {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> content_lines(std::string_view text) {
    std::vector<std::string_view> out;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

nlohmann::json witness_side(const MdsReport& r, bool rows) {
    if (!r.witness) return nullptr;
    return rows ? r.witness->rows : r.witness->cols;
}

std::string index_list(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

FieldSpec parse_field(std::string_view text) {
    static const std::regex pattern(R"(\s*gf\(\s*2\s*\^\s*(\d+)\s*,\s*(0[xX][0-9a-fA-F]+|\d+)\s*\)\s*)");
    const std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) parse_error("expected field like gf(2^8, 0x11B), got '" + s + "'");
    return FieldSpec::make(static_cast<unsigned>(parse_unsigned(m[1].str())),
                           static_cast<unsigned>(parse_unsigned(m[2].str())));
}

std::string format_field(const FieldSpec& spec) { return spec.to_string(); }

Matrix parse_matrix(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) parse_error("empty matrix text");
    const FieldSpec spec = parse_field(lines.front());
    if (lines.size() == 1) parse_error("matrix has no rows");

    std::size_t cols = 0;
    std::vector<Elem> entries;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::istringstream row{std::string(lines[li])};
        std::string tok;
        std::size_t count = 0;
        while (row >> tok) {
            if (tok.size() != 2 || hex_digit(tok[0]) < 0 || hex_digit(tok[1]) < 0) {
                parse_error("matrix entries must be two-digit hex, got '" + tok + "'");
            }
            entries.push_back(check_element(spec, static_cast<unsigned>(hex_digit(tok[0]) * 16 + hex_digit(tok[1]))));
            ++count;
        }
        if (li == 1) {
            cols = count;
        } else if (count != cols) {
            parse_error("row " + std::to_string(li) + " has " + std::to_string(count) +
                        " entries, expected " + std::to_string(cols));
        }
    }
    return Matrix(spec, lines.size() - 1, cols, std::move(entries));
}

std::string format_byte(Elem value) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02X", static_cast<unsigned>(value));
    return buf;
}

std::string format_matrix(const Matrix& m) {
    std::string out = format_field(m.spec()) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += format_byte(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

Matrix read_matrix_file(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) parse_error("cannot write " + path.string());
    out << format_matrix(m);
}

std::uint64_t parse_unsigned(std::string_view text) {
    text = trim(text);
    int base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        text.remove_prefix(2);
    }
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
        parse_error("expected a decimal or 0x-prefixed hex number, got '" + std::string(text) + "'");
    }
    return value;
}

Elem parse_constant(std::string_view text, const FieldSpec& spec) {
    const std::uint64_t v = parse_unsigned(text);
    if (v >= spec.order()) {
        throw Error(ErrorCode::InvalidElement, "constant " + std::string(trim(text)) + " outside " +
                                                   spec.to_string());
    }
    return static_cast<Elem>(v);
}

std::vector<std::uint8_t> parse_hex_bytes(std::string_view text) {
    text = trim(text);
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text.remove_prefix(2);
    if (text.size() % 2 != 0) parse_error("hex string has odd length");
    std::vector<std::uint8_t> out;
    out.reserve(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); i += 2) {
        const int hi = hex_digit(text[i]), lo = hex_digit(text[i + 1]);
        if (hi < 0 || lo < 0) parse_error("invalid hex digit in '" + std::string(text) + "'");
        out.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    return out;
}

std::string format_hex_bytes(std::span<const std::uint8_t> bytes) {
    std::string out;
    for (std::uint8_t b : bytes) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", static_cast<unsigned>(b));
        out += buf;
    }
    return out;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Elem v : m.row(r)) row.push_back(format_byte(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const MdsReport& report) {
    return {{"is_mds", report.is_mds},
            {"witness_rows", witness_side(report, true)},
            {"witness_cols", witness_side(report, false)},
            {"minors_checked", report.minors_checked}};
}

std::string to_text(const MdsReport& report) {
    std::string out;
    out += "is_mds: " + std::string(report.is_mds ? "true" : "false") + "\n";
    out += "witness_rows: " + (report.witness ? index_list(report.witness->rows) : "-") + "\n";
    out += "witness_cols: " + (report.witness ? index_list(report.witness->cols) : "-") + "\n";
    out += "minors_checked: " + std::to_string(report.minors_checked) + "\n";
    return out;
}

nlohmann::json to_json(const MatrixMetrics& metrics, MatrixClass matrix_class) {
    return {{"ones_count", metrics.ones_count},
            {"distinct_constants", metrics.distinct_nonone_constants},
            {"biregular", metrics.biregular},
            {"class", class_name(matrix_class)}};
}

std::string to_text(const MatrixMetrics& metrics, MatrixClass matrix_class) {
    std::string out;
    out += "ones_count: " + std::to_string(metrics.ones_count) + "\n";
    out += "distinct_constants: " + std::to_string(metrics.distinct_nonone_constants) + "\n";
    out += "biregular: " + std::string(metrics.biregular ? "true" : "false") + "\n";
    out += "class: " + std::string(class_name(matrix_class)) + "\n";
    return out;
}

nlohmann::json to_json(const CostReport& report) {
    return {{"nontrivial_muls", report.nontrivial_muls},
            {"free_muls", report.free_muls},
            {"tables", report.distinct_constant_tables},
            {"memory_units", report.memory_units},
            {"cycle_proxy", report.cycle_proxy},
            {"class", class_name(report.matrix_class)}};
}

std::string to_text(const CostReport& report) {
    std::string out;
    out += "nontrivial_muls: " + std::to_string(report.nontrivial_muls) + "\n";
    out += "free_muls: " + std::to_string(report.free_muls) + "\n";
    out += "tables: " + std::to_string(report.distinct_constant_tables) + "\n";
    out += "memory_units: " + std::to_string(report.memory_units) + "\n";
    out += "cycle_proxy: " + std::to_string(report.cycle_proxy) + "\n";
    out += "class: " + std::string(class_name(report.matrix_class)) + "\n";
    return out;
}

std::string cost_table(std::span<const RankedClass> ranking) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "rank" << std::setw(16) << "type of matrix" << std::right
        << std::setw(13) << "cycle proxy" << std::setw(8) << "muls" << std::setw(9) << "lookups"
        << std::setw(8) << "tables" << std::setw(10) << "memory" << "\n";
    for (const RankedClass& r : ranking) {
        out << std::left << std::setw(6) << r.rank << std::setw(16) << class_name(r.matrix_class)
            << std::right << std::setw(13) << r.report.cycle_proxy << std::setw(8)
            << r.report.nontrivial_muls << std::setw(9) << r.report.lookups << std::setw(8)
            << r.report.distinct_constant_tables << std::setw(10) << r.report.memory_units << "\n";
    }
    return out.str();
}

SessionDescriptor parse_session_descriptor(std::string_view text,
                                           const std::filesystem::path& base_dir) {
    SessionDescriptor d;
    bool have_matrix = false, have_secret = false;
    for (std::string_view line : content_lines(text)) {
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) parse_error("descriptor line lacks '=': " + std::string(line));
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "seed-matrix-file") {
            std::filesystem::path p{std::string(value)};
            d.seed_matrix_file = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
            have_matrix = true;
        } else if (key == "secret-hex") {
            d.secret = parse_hex_bytes(value);
            have_secret = true;
        } else if (key == "rounds") {
            d.rounds = static_cast<std::size_t>(parse_unsigned(value));
        } else if (key == "mode") {
            if (value == "session") {
                d.mode = spn::MatrixMode::PerSession;
            } else if (value == "round") {
                d.mode = spn::MatrixMode::PerRound;
            } else {
                parse_error("mode must be session or round, got '" + std::string(value) + "'");
            }
        } else {
            parse_error("unknown descriptor key '" + std::string(key) + "'");
        }
    }
    if (!have_matrix) parse_error("descriptor lacks seed-matrix-file");
    if (!have_secret) parse_error("descriptor lacks secret-hex");
    return d;
}

SessionDescriptor read_session_descriptor(const std::filesystem::path& path) {
    return parse_session_descriptor(read_file(path), path.parent_path());
}

}  // namespace dynmds::textio
