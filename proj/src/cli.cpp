#include "dynmds/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>

#include "dynmds/costmodel.hpp"
#include "dynmds/fixtures.hpp"
#include "dynmds/mds.hpp"
#include "dynmds/selftest.hpp"
#include "dynmds/spn.hpp"
#include "dynmds/textio.hpp"

namespace dynmds::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kDemoWarning = "warning: demonstration cipher, NOT FOR PRODUCTION use\n";

struct Options {
    std::string matrix;
    std::string e = "0x02";
    std::string pivot;
    std::string field = "gf(2^8, 0x11B)";
    std::string out_path;
    std::string in_path;
    std::string session_path;
    std::string key_hex = "000102030405060708090a0b0c0d0e0f";
    std::string secret_hex = "00";
    std::vector<std::string> fixtures;
    std::uint64_t seed = spn::kDefaultSeed;
    std::optional<std::size_t> rounds;
    std::optional<std::string> mode;
    std::size_t trials = 10000;
    bool json = false;
    bool bench = false;
};

// Errors from malformed input are usage errors; the rest are domain errors.
int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse:
        case ErrorCode::InvalidField:
        case ErrorCode::InvalidElement:
            return kExitUsage;
        default:
            return kExitDomainError;
    }
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
    if (o.json) {
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
}

void write_or_print(std::ostream& out, const Options& o, const Matrix& m, json j,
                    const std::string& preamble) {
    if (!o.out_path.empty()) textio::write_matrix_file(o.out_path, m);
    j["field"] = m.spec().to_string();
    j["matrix"] = textio::matrix_to_json(m);
    emit(out, o, j, preamble + textio::format_matrix(m));
}

spn::MatrixMode parse_mode(const std::string& s) {
    if (s == "session") return spn::MatrixMode::PerSession;
    if (s == "round") return spn::MatrixMode::PerRound;
    throw std::invalid_argument("--mode must be session or round");
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const MdsReport r = is_mds(textio::read_matrix_file(o.matrix));
    emit(out, o, textio::to_json(r), textio::to_text(r));
    if (!r.is_mds) {
        err << "error: NotMds: a square submatrix is singular\n";
        return kExitDomainError;
    }
    return kExitOk;
}

int cmd_derive(const Options& o, std::ostream& out) {
    const Matrix seed = textio::read_matrix_file(o.matrix);
    const Elem e = textio::parse_constant(o.e, seed.spec());
    const Matrix m = derive_session_matrix(seed, e).matrix();
    write_or_print(out, o, m, {{"e", textio::format_byte(e)}}, "");
    return kExitOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
    const Matrix a = textio::read_matrix_file(o.matrix);
    const Elem pivot = textio::parse_constant(o.pivot, a.spec());
    const Matrix m = normalize_by_pivot(a, pivot);
    const Elem inv = gf_inv(a.spec(), pivot);
    write_or_print(out, o, m,
                   {{"pivot", textio::format_byte(pivot)}, {"pivot_inverse", textio::format_byte(inv)}},
                   "");
    return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const MatrixClass c = classify(textio::read_matrix_file(o.matrix));
    emit(out, o, {{"class", class_name(c)}}, "class: " + std::string(class_name(c)) + "\n");
    return kExitOk;
}

int cmd_metrics(const Options& o, std::ostream& out) {
    const Matrix a = textio::read_matrix_file(o.matrix);
    const MatrixMetrics m = metrics(a);
    const MatrixClass c = classify(a);
    emit(out, o, textio::to_json(m, c), textio::to_text(m, c));
    return kExitOk;
}

int cmd_cost(const Options& o, std::ostream& out) {
    const Matrix a = textio::read_matrix_file(o.matrix);
    const CostReport r = estimate_generation(a, textio::parse_constant(o.e, a.spec()));
    emit(out, o, textio::to_json(r), textio::to_text(r));
    return kExitOk;
}

int cmd_rank(const Options& o, std::ostream& out) {
    const bool use_default = o.fixtures.empty() || (o.fixtures.size() == 1 && o.fixtures[0] == "default");
    std::vector<Matrix> fixtures;
    if (use_default) {
        fixtures = fixtures::canonical_class_fixtures();
    } else {
        for (const auto& p : o.fixtures) fixtures.push_back(textio::read_matrix_file(p));
    }
    const Elem e = textio::parse_constant(o.e, fixtures.front().spec());
    const auto ranking = use_default ? rank_all_classes(fixtures, e) : rank_classes(fixtures, e);

    std::vector<double> timings;
    if (o.bench) {
        std::vector<MdsMatrix> verified;
        for (const RankedClass& r : ranking) {
            const auto it = std::find_if(fixtures.begin(), fixtures.end(), [&](const Matrix& m) {
                return classify(m) == r.matrix_class;
            });
            verified.push_back(MdsMatrix::verify(*it));
        }
        timings = benchmark_derivation(verified, e);
    }

    json rows = json::array();
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        json row = textio::to_json(ranking[i].report);
        row["rank"] = ranking[i].rank;
        if (o.bench) row["bench_ns"] = timings[i];
        rows.push_back(std::move(row));
    }
    std::string text = textio::cost_table(ranking);
    if (o.bench) {
        text += "\nmeasured derivation time (ns/call, best of repeats):\n";
        for (std::size_t i = 0; i < ranking.size(); ++i) {
            text += "  " + std::string(class_name(ranking[i].matrix_class)) + ": " +
                    std::to_string(timings[i]) + "\n";
        }
    }
    emit(out, o, {{"e", textio::format_byte(e)}, {"ranking", rows}}, text);
    return kExitOk;
}

int cmd_find_optimal(const Options& o, std::ostream& out) {
    const OptimalInstance inst = find_optimal_instance(textio::parse_field(o.field));
    write_or_print(out, o, inst.matrix,
                   {{"a", textio::format_byte(inst.a)}, {"b", textio::format_byte(inst.b)}},
                   "a: 0x" + textio::format_byte(inst.a) + "\nb: 0x" + textio::format_byte(inst.b) + "\n");
    return kExitOk;
}

std::vector<spn::Block> read_blocks(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    const std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() % spn::kBlockBytes != 0) {
        throw Error(ErrorCode::InvalidBlock, "input length " + std::to_string(bytes.size()) +
                                                 " is not a multiple of 16 bytes");
    }
    std::vector<spn::Block> blocks(bytes.size() / spn::kBlockBytes);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        blocks[i / spn::kBlockBytes][i % spn::kBlockBytes] = static_cast<std::uint8_t>(bytes[i]);
    }
    return blocks;
}

int cmd_demo(const Options& o, bool encrypt, std::ostream& out, std::ostream& err) {
    err << kDemoWarning;
    textio::SessionDescriptor d = textio::read_session_descriptor(o.session_path);
    if (o.rounds) d.rounds = *o.rounds;
    if (o.mode) d.mode = parse_mode(*o.mode);

    const auto key = textio::parse_hex_bytes(o.key_hex);
    const spn::SpnParams params = spn::make_spn_params(key, d.rounds);
    const spn::Session session =
        spn::session_setup(textio::read_matrix_file(d.seed_matrix_file), d.secret, d.mode, d.rounds);

    std::vector<spn::Block> blocks = read_blocks(o.in_path);
    if (encrypt) {
        spn::encrypt_blocks(params, session, blocks);
    } else {
        spn::decrypt_blocks(params, session, blocks);
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::Parse, "cannot write " + o.out_path);
    for (const auto& b : blocks) f.write(reinterpret_cast<const char*>(b.data()), b.size());

    json j = {{"blocks", blocks.size()},
              {"e", textio::format_byte(session.constant_e)},
              {"mode", spn::mode_name(d.mode)},
              {"rounds", d.rounds}};
    emit(out, o, j,
         std::string(encrypt ? "encrypted " : "decrypted ") + std::to_string(blocks.size()) +
             " blocks, e = 0x" + textio::format_byte(session.constant_e) + ", mode = " +
             std::string(spn::mode_name(d.mode)) + "\n");
    return kExitOk;
}

int cmd_avalanche(const Options& o, std::ostream& out, std::ostream& err) {
    err << kDemoWarning;
    const Matrix seed = o.matrix.empty() ? fixtures::aes_circulant() : textio::read_matrix_file(o.matrix);
    const std::size_t rounds = o.rounds.value_or(spn::kDefaultRounds);
    const spn::MatrixMode mode = o.mode ? parse_mode(*o.mode) : spn::MatrixMode::PerSession;
    const auto params = spn::make_spn_params(textio::parse_hex_bytes(o.key_hex), rounds);
    const auto session = spn::session_setup(seed, textio::parse_hex_bytes(o.secret_hex), mode, rounds);
    const auto stats = spn::avalanche_stats(params, session, o.trials, o.seed);

    std::string text = "trials: " + std::to_string(stats.trials) + "\n";
    for (std::size_t r = 0; r < stats.per_round.size(); ++r) {
        text += "round " + std::to_string(r + 1) + ": " + std::to_string(stats.per_round[r]) + "\n";
    }
    text += "mean: " + std::to_string(stats.mean) + "\n";
    emit(out, o,
         {{"trials", stats.trials}, {"rounds", rounds}, {"per_round", stats.per_round}, {"mean", stats.mean}},
         text);
    return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
    const auto results = run_selftest(o.seed);
    bool ok = true;
    json checks = json::array();
    std::string text;
    for (const CheckResult& r : results) {
        ok = ok && r.passed;
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"failures", r.failures}});
        text += (r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases, " +
                std::to_string(r.failures) + " failures)\n";
    }
    emit(out, o, {{"passed", ok}, {"checks", checks}}, text);
    if (!ok) err << "error: selftest failed\n";
    return ok ? kExitOk : kExitDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dynamic MDS matrix toolkit over GF(2^q)", "dynmds"};
    app.require_subcommand(1);
    Options o;

    auto with_json = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "Emit JSON");
        return sub;
    };
    auto with_matrix = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("--matrix", o.matrix, "Matrix file");
        if (required) opt->required();
        return sub;
    };

    auto* verify = with_json(with_matrix(app.add_subcommand("verify", "Check the MDS property")));
    auto* derive = with_json(with_matrix(app.add_subcommand("derive", "Derive e*A from a seed")));
    derive->add_option("--e", o.e, "Nonzero constant (0x.. or decimal)")->required();
    derive->add_option("--out", o.out_path, "Write the derived matrix here");
    auto* normalize = with_json(with_matrix(app.add_subcommand("normalize", "Multiply by pivot^-1")));
    normalize->add_option("--pivot", o.pivot, "Constant of the matrix other than 0 and 1")->required();
    normalize->add_option("--out", o.out_path, "Write the normalized matrix here");
    auto* cls = with_json(with_matrix(app.add_subcommand("classify", "Matrix class")));
    auto* met = with_json(with_matrix(app.add_subcommand("metrics", "Ones, constants, bi-regularity")));
    auto* cost = with_json(with_matrix(app.add_subcommand("cost", "Generation cost estimate")));
    cost->add_option("--e", o.e, "Nonzero constant")->capture_default_str();
    auto* rank = with_json(app.add_subcommand("rank", "Rank matrix classes by generation cost"));
    rank->add_option("--fixtures", o.fixtures, "'default' or matrix files, one per class");
    rank->add_option("--e", o.e, "Nonzero constant")->capture_default_str();
    rank->add_flag("--bench", o.bench, "Also time actual derivations");
    auto* find = with_json(app.add_subcommand("find-optimal", "Smallest MDS instance of the optimal pattern"));
    find->add_option("--field", o.field, "Field, e.g. gf(2^8,0x11B)")->capture_default_str();
    find->add_option("--out", o.out_path, "Write the matrix here");

    CLI::App* demo[2];
    for (int i = 0; i < 2; ++i) {
        demo[i] = with_json(app.add_subcommand(i == 0 ? "demo-encrypt" : "demo-decrypt",
                                               "Toy SPN over 16-byte blocks (NOT FOR PRODUCTION)"));
        demo[i]->add_option("--session", o.session_path, "Session descriptor file")->required();
        demo[i]->add_option("--in", o.in_path, "Input file, a multiple of 16 bytes")->required();
        demo[i]->add_option("--out", o.out_path, "Output file")->required();
        demo[i]->add_option("--key", o.key_hex, "Master key, hex")->capture_default_str();
        demo[i]->add_option("--rounds", o.rounds, "Override descriptor rounds");
        demo[i]->add_option("--mode", o.mode, "Override descriptor mode: session|round");
    }
    auto* aval = with_json(with_matrix(app.add_subcommand("avalanche", "Avalanche statistics of the toy SPN"), false));
    aval->add_option("--secret", o.secret_hex, "Shared secret, hex")->capture_default_str();
    aval->add_option("--key", o.key_hex, "Master key, hex")->capture_default_str();
    aval->add_option("--rounds", o.rounds, "Rounds (default 8)");
    aval->add_option("--mode", o.mode, "session|round");
    aval->add_option("--trials", o.trials, "Trials (>= 1000)")->capture_default_str();
    aval->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    auto* self = with_json(app.add_subcommand("selftest", "Exhaustive internal consistency checks"));
    self->add_option("--seed", o.seed, "RNG seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (derive->parsed()) return cmd_derive(o, out);
        if (normalize->parsed()) return cmd_normalize(o, out);
        if (cls->parsed()) return cmd_classify(o, out);
        if (met->parsed()) return cmd_metrics(o, out);
        if (cost->parsed()) return cmd_cost(o, out);
        if (rank->parsed()) return cmd_rank(o, out);
        if (find->parsed()) return cmd_find_optimal(o, out);
        if (demo[0]->parsed()) return cmd_demo(o, true, out, err);
        if (demo[1]->parsed()) return cmd_demo(o, false, out, err);
        if (aval->parsed()) return cmd_avalanche(o, out, err);
        if (self->parsed()) return cmd_selftest(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "usage error: no subcommand\n";
    return kExitUsage;
}

}  // namespace dynmds::cli
