#include "dynmds/spn.hpp"

#include <openssl/evp.h>

#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "dynmds/kernels.hpp"
#include "dynmds/mds.hpp"

namespace dynmds::spn {

namespace {

constexpr Sbox kAesSbox = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};

constexpr std::size_t kSide = 4;

// Byte (row r, column c) lives at r + 4c.
constexpr std::size_t cell(std::size_t r, std::size_t c) { return r + kSide * c; }

void sub_bytes(Block& s, const Sbox& box) {
    for (auto& b : s) b = box[b];
}

// Row r rotates left by r positions.
void shift_rows(Block& s) {
    Block t = s;
    for (std::size_t r = 1; r < kSide; ++r) {
        for (std::size_t c = 0; c < kSide; ++c) s[cell(r, c)] = t[cell(r, (c + r) % kSide)];
    }
}

void inv_shift_rows(Block& s) {
    Block t = s;
    for (std::size_t r = 1; r < kSide; ++r) {
        for (std::size_t c = 0; c < kSide; ++c) s[cell(r, (c + r) % kSide)] = t[cell(r, c)];
    }
}

void mix_columns(Block& s, const Matrix& m) {
    for (std::size_t c = 0; c < kSide; ++c) {
        std::array<Elem, kSide> col{};
        for (std::size_t r = 0; r < kSide; ++r) col[r] = s[cell(r, c)];
        const auto out = mat_vec_mul(m, col);
        for (std::size_t r = 0; r < kSide; ++r) s[cell(r, c)] = out[r];
    }
}

void add_key(Block& s, const Block& k) {
    for (std::size_t i = 0; i < kBlockBytes; ++i) s[i] ^= k[i];
}

void check_params(const SpnParams& p) {
    if (p.rounds == 0 || p.round_keys.size() != p.rounds + 1) {
        throw std::invalid_argument("SPN params need rounds >= 1 and rounds + 1 round keys");
    }
}

void check_session_matrix(const Matrix& m) {
    if (m.rows() != kSide || m.cols() != kSide || m.spec() != kAesField) {
        throw Error(ErrorCode::ShapeMismatch, "session matrix must be 4x4 over " + kAesField.to_string());
    }
}

}  // namespace

Digest sha256(std::span<const std::uint8_t> data) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size()) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    return out;
}

const Sbox& aes_sbox() noexcept { return kAesSbox; }

Sbox identity_sbox() noexcept {
    Sbox s{};
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<std::uint8_t>(i);
    return s;
}

Sbox invert_sbox(const Sbox& sbox) {
    Sbox inv{};
    std::array<bool, 256> hit{};
    for (std::size_t i = 0; i < sbox.size(); ++i) {
        if (hit[sbox[i]]) throw std::invalid_argument("S-box is not a permutation");
        hit[sbox[i]] = true;
        inv[sbox[i]] = static_cast<std::uint8_t>(i);
    }
    return inv;
}

SpnParams make_spn_params(std::span<const std::uint8_t> master_key, std::size_t rounds,
                          const Sbox& sbox) {
    if (rounds < kMinRounds) {
        throw std::invalid_argument("SPN needs at least " + std::to_string(kMinRounds) + " rounds");
    }
    if (master_key.empty()) throw std::invalid_argument("master key must be nonempty");
    std::vector<Block> keys;
    keys.reserve(rounds + 1);
    Digest d = sha256(master_key);
    for (std::size_t i = 0; i <= rounds; ++i) {
        if (i > 0) d = sha256(d);
        Block k{};
        std::copy_n(d.begin(), kBlockBytes, k.begin());
        keys.push_back(k);
    }
    return make_spn_params_from_keys(std::move(keys), sbox);
}

SpnParams make_spn_params_from_keys(std::vector<Block> round_keys, const Sbox& sbox) {
    if (round_keys.size() < 2) throw std::invalid_argument("need at least two round keys");
    SpnParams p;
    p.rounds = round_keys.size() - 1;
    p.sbox = sbox;
    p.inverse_sbox = invert_sbox(sbox);
    p.round_keys = std::move(round_keys);
    return p;
}

std::string_view mode_name(MatrixMode mode) noexcept {
    return mode == MatrixMode::PerSession ? "session" : "round";
}

Elem derive_constant(std::span<const std::uint8_t> shared_secret) {
    if (shared_secret.empty()) throw Error(ErrorCode::EmptySecret, "shared secret is empty");
    for (std::uint8_t b : sha256(shared_secret)) {
        if (b != 0) return b;
    }
    return 1;
}

Elem derive_round_constant(std::span<const std::uint8_t> shared_secret, std::uint32_t round) {
    if (shared_secret.empty()) throw Error(ErrorCode::EmptySecret, "shared secret is empty");
    std::vector<std::uint8_t> msg(shared_secret.begin(), shared_secret.end());
    for (int shift = 24; shift >= 0; shift -= 8) msg.push_back(static_cast<std::uint8_t>(round >> shift));
    return derive_constant(msg);
}

const Matrix& Session::mix_matrix(std::size_t round) const {
    if (mode == MatrixMode::PerSession) return matrix;
    if (round == 0 || round > round_matrices.size()) {
        throw Error(ErrorCode::ShapeMismatch, "no mix matrix derived for round " + std::to_string(round));
    }
    return round_matrices[round - 1];
}

const Matrix& Session::unmix_matrix(std::size_t round) const {
    if (mode == MatrixMode::PerSession) return inverse_matrix;
    if (round == 0 || round > round_inverses.size()) {
        throw Error(ErrorCode::ShapeMismatch, "no mix matrix derived for round " + std::to_string(round));
    }
    return round_inverses[round - 1];
}

Session session_setup(const Matrix& seed, std::span<const std::uint8_t> shared_secret,
                      MatrixMode mode, std::size_t rounds) {
    check_session_matrix(seed);
    const MdsMatrix verified = MdsMatrix::verify(seed);

    Session s;
    s.shared_secret.assign(shared_secret.begin(), shared_secret.end());
    s.mode = mode;
    s.constant_e = derive_constant(shared_secret);
    s.matrix = derive_session_matrix(verified, s.constant_e).matrix();
    s.inverse_matrix = mat_inverse(s.matrix);
    if (mode == MatrixMode::PerRound) {
        for (std::size_t r = 1; r < rounds; ++r) {
            const Elem e = derive_round_constant(shared_secret, static_cast<std::uint32_t>(r));
            s.round_constants.push_back(e);
            s.round_matrices.push_back(derive_session_matrix(verified, e).matrix());
            s.round_inverses.push_back(mat_inverse(s.round_matrices.back()));
        }
    }
    return s;
}

Session fixed_session(const Matrix& matrix) {
    check_session_matrix(matrix);
    Session s;
    s.matrix = matrix;
    s.inverse_matrix = mat_inverse(matrix);
    return s;
}

std::vector<Block> trace_rounds(const SpnParams& params, const Session& session,
                                const Block& plaintext) {
    check_params(params);
    std::vector<Block> states;
    states.reserve(params.rounds);
    Block s = plaintext;
    add_key(s, params.round_keys[0]);
    for (std::size_t r = 1; r <= params.rounds; ++r) {
        sub_bytes(s, params.sbox);
        shift_rows(s);
        if (r < params.rounds) mix_columns(s, session.mix_matrix(r));
        add_key(s, params.round_keys[r]);
        states.push_back(s);
    }
    return states;
}

Block encrypt_block(const SpnParams& params, const Session& session, const Block& plaintext) {
    return trace_rounds(params, session, plaintext).back();
}

Block decrypt_block(const SpnParams& params, const Session& session, const Block& ciphertext) {
    check_params(params);
    Block s = ciphertext;
    for (std::size_t r = params.rounds; r >= 1; --r) {
        add_key(s, params.round_keys[r]);
        if (r < params.rounds) mix_columns(s, session.unmix_matrix(r));
        inv_shift_rows(s);
        sub_bytes(s, params.inverse_sbox);
    }
    add_key(s, params.round_keys[0]);
    return s;
}

namespace {

// Structure-of-arrays view of a batch: plane i holds byte i of every block.
class Planes {
public:
    explicit Planes(std::span<const Block> blocks)
        : count_(blocks.size()), data_(kBlockBytes * blocks.size()), scratch_(kBlockBytes * blocks.size()) {
        for (std::size_t b = 0; b < count_; ++b) {
            for (std::size_t i = 0; i < kBlockBytes; ++i) data_[i * count_ + b] = blocks[b][i];
        }
    }

    void store(std::span<Block> blocks) const {
        for (std::size_t b = 0; b < count_; ++b) {
            for (std::size_t i = 0; i < kBlockBytes; ++i) blocks[b][i] = data_[i * count_ + b];
        }
    }

    std::span<std::uint8_t> plane(std::size_t i) { return {data_.data() + i * count_, count_}; }

    void substitute(const Sbox& box) {
        for (auto& b : data_) b = box[b];
    }

    void add_key(const Block& k) {
        for (std::size_t i = 0; i < kBlockBytes; ++i) {
            for (auto& b : plane(i)) b ^= k[i];
        }
    }

    // Moves whole planes: destination cell takes the plane of source cell.
    template <typename Map>
    void permute(Map source_of) {
        scratch_.swap(data_);
        for (std::size_t i = 0; i < kBlockBytes; ++i) {
            const std::size_t from = source_of(i);
            std::copy_n(scratch_.data() + from * count_, count_, data_.data() + i * count_);
        }
    }

    void mix(const Matrix& m) {
        scratch_.swap(data_);
        std::fill(data_.begin(), data_.end(), 0);
        for (std::size_t c = 0; c < kSide; ++c) {
            for (std::size_t r = 0; r < kSide; ++r) {
                std::span<std::uint8_t> out = plane(cell(r, c));
                for (std::size_t k = 0; k < kSide; ++k) {
                    const std::span<const std::uint8_t> in(scratch_.data() + cell(k, c) * count_, count_);
                    kernels::mul_add_region(kernels::MulConst(kAesField, m.at(r, k)), in, out);
                }
            }
        }
    }

private:
    std::size_t count_;
    std::vector<std::uint8_t> data_;
    std::vector<std::uint8_t> scratch_;
};

std::size_t shifted_source(std::size_t i) {
    const std::size_t r = i % kSide, c = i / kSide;
    return cell(r, (c + r) % kSide);
}

std::size_t unshifted_source(std::size_t i) {
    const std::size_t r = i % kSide, c = i / kSide;
    return cell(r, (c + kSide - r) % kSide);
}

}  // namespace

void encrypt_blocks(const SpnParams& params, const Session& session, std::span<Block> blocks) {
    check_params(params);
    if (blocks.empty()) return;
    Planes p(blocks);
    p.add_key(params.round_keys[0]);
    for (std::size_t r = 1; r <= params.rounds; ++r) {
        p.substitute(params.sbox);
        p.permute(shifted_source);
        if (r < params.rounds) p.mix(session.mix_matrix(r));
        p.add_key(params.round_keys[r]);
    }
    p.store(blocks);
}

void decrypt_blocks(const SpnParams& params, const Session& session, std::span<Block> blocks) {
    check_params(params);
    if (blocks.empty()) return;
    Planes p(blocks);
    for (std::size_t r = params.rounds; r >= 1; --r) {
        p.add_key(params.round_keys[r]);
        if (r < params.rounds) p.mix(session.unmix_matrix(r));
        p.permute(unshifted_source);
        p.substitute(params.inverse_sbox);
    }
    p.add_key(params.round_keys[0]);
    p.store(blocks);
}

AvalancheStats avalanche_stats(const SpnParams& params, const Session& session,
                               std::size_t trials, std::uint64_t seed) {
    if (trials < 1000) throw std::invalid_argument("avalanche needs at least 1000 trials");
    check_params(params);
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> flipped(params.rounds, 0);
    for (std::size_t t = 0; t < trials; ++t) {
        Block p{};
        for (std::size_t i = 0; i < kBlockBytes; i += 8) {
            const std::uint64_t word = rng();
            for (std::size_t j = 0; j < 8; ++j) p[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
        }
        Block q = p;
        const std::size_t bit = static_cast<std::size_t>(rng() % (kBlockBytes * 8));
        q[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));

        const auto a = trace_rounds(params, session, p);
        const auto b = trace_rounds(params, session, q);
        for (std::size_t r = 0; r < params.rounds; ++r) {
            for (std::size_t i = 0; i < kBlockBytes; ++i) {
                flipped[r] += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(a[r][i] ^ b[r][i])));
            }
        }
    }
    AvalancheStats stats;
    stats.trials = trials;
    const double bits = static_cast<double>(trials) * kBlockBytes * 8;
    for (std::uint64_t f : flipped) stats.per_round.push_back(static_cast<double>(f) / bits);
    stats.mean = stats.per_round.back();
    return stats;
}

}  // namespace dynmds::spn
