#pragma once

// Toy SPN block cipher with a session-specific MDS diffusion layer.
//
// NOT FOR PRODUCTION. This cipher exists to exercise dynamic MDS matrices
// inside a realistic round structure; it has had no cryptanalysis.
//
// State: 16 bytes as a 4x4 column-major array over gf(2^8, 0x11B), byte
// index r + 4c. Round structure, AES-shaped:
//
//   state ^= k0
//   rounds 1..R-1:  SubBytes, ShiftRows, MixColumns(M_round), state ^= k_round
//   round R:        SubBytes, ShiftRows, state ^= k_R
//
// M_round is the session matrix, or in per-round mode a matrix derived from
// the round index as well as the shared secret.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dynmds/gfield.hpp"
#include "dynmds/matrix.hpp"

namespace dynmds::spn {

inline constexpr std::size_t kBlockBytes = 16;
inline constexpr std::size_t kMinRounds = 4;
inline constexpr std::size_t kDefaultRounds = 8;
inline constexpr std::uint64_t kDefaultSeed = 0x5EEDC0DE2009ull;
/// Hash behind derive_constant and the key schedule.
inline constexpr std::string_view kHashName = "SHA-256";

using Block = std::array<std::uint8_t, kBlockBytes>;
using Sbox = std::array<std::uint8_t, 256>;
using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);

const Sbox& aes_sbox() noexcept;
Sbox identity_sbox() noexcept;
/// Throws std::invalid_argument if the table is not a permutation.
Sbox invert_sbox(const Sbox& sbox);

struct SpnParams {
    std::size_t rounds = kDefaultRounds;
    Sbox sbox{};
    Sbox inverse_sbox{};
    /// rounds + 1 entries.
    std::vector<Block> round_keys;
};

/// Iterated-hash schedule: d_0 = H(key), d_i = H(d_{i-1}), k_i = first 16
/// bytes of d_i. Requires rounds >= kMinRounds and a nonempty key.
SpnParams make_spn_params(std::span<const std::uint8_t> master_key,
                          std::size_t rounds = kDefaultRounds, const Sbox& sbox = aes_sbox());
/// Explicit round keys, any round count >= 1. For structural tests.
SpnParams make_spn_params_from_keys(std::vector<Block> round_keys, const Sbox& sbox);

enum class MatrixMode { PerSession, PerRound };

std::string_view mode_name(MatrixMode mode) noexcept;

/// First nonzero byte of H(secret), or 1 if the digest is all zero.
/// Throws EmptySecret.
Elem derive_constant(std::span<const std::uint8_t> shared_secret);
/// derive_constant(secret || round as 4 big-endian bytes).
Elem derive_round_constant(std::span<const std::uint8_t> shared_secret, std::uint32_t round);

struct Session {
    std::vector<std::uint8_t> shared_secret;
    MatrixMode mode = MatrixMode::PerSession;
    Elem constant_e = 1;
    Matrix matrix = Matrix::identity(kAesField, 4);
    Matrix inverse_matrix = Matrix::identity(kAesField, 4);
    /// Per-round mode only: constants and matrices for mix rounds 1..R-1.
    std::vector<Elem> round_constants;
    std::vector<Matrix> round_matrices;
    std::vector<Matrix> round_inverses;

    /// Mix matrix for round r in 1..R-1. ShapeMismatch past the derived range.
    const Matrix& mix_matrix(std::size_t round) const;
    const Matrix& unmix_matrix(std::size_t round) const;
};

/// seed must be a 4x4 MDS matrix over gf(2^8, 0x11B) (NotMds, ShapeMismatch).
/// `rounds` sizes the per-round matrix list and is ignored per session.
Session session_setup(const Matrix& seed, std::span<const std::uint8_t> shared_secret,
                      MatrixMode mode = MatrixMode::PerSession,
                      std::size_t rounds = kDefaultRounds);

/// Session around an arbitrary invertible 4x4 matrix, skipping the MDS
/// requirement. Used for diffusion controls.
Session fixed_session(const Matrix& matrix);

Block encrypt_block(const SpnParams& params, const Session& session, const Block& plaintext);
Block decrypt_block(const SpnParams& params, const Session& session, const Block& ciphertext);

/// State after each of rounds 1..R; the last entry equals the ciphertext.
std::vector<Block> trace_rounds(const SpnParams& params, const Session& session,
                                const Block& plaintext);

/// In-place ECB over many blocks, laid out as 16 byte planes so the mix layer
/// runs through the region kernels. Same output as the per-block functions.
void encrypt_blocks(const SpnParams& params, const Session& session, std::span<Block> blocks);
void decrypt_blocks(const SpnParams& params, const Session& session, std::span<Block> blocks);

struct AvalancheStats {
    std::size_t trials = 0;
    /// Mean fraction of state bits flipped after rounds 1..R.
    std::vector<double> per_round;
    /// Fraction over the full cipher (per_round.back()).
    double mean = 0.0;
};

/// Random plaintexts, one random input bit flipped per trial. trials >= 1000.
AvalancheStats avalanche_stats(const SpnParams& params, const Session& session,
                               std::size_t trials, std::uint64_t seed = kDefaultSeed);

}  // namespace dynmds::spn
