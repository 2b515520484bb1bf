#pragma once

#include "anyonsim/braid.hpp"
#include "anyonsim/linalg.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anyonsim {

/// Hermitian matrices gamma_1 ... gamma_{2M} on the 2^M-dimensional Fock space
/// of M Dirac modes c_j = (gamma_{2j-1} + i gamma_{2j}) / 2.
///
/// Basis states are occupation bitstrings in little-endian order: bit j-1 of
/// the index is n_j. Majoranas are built on a Jordan-Wigner ladder, so that
/// -i gamma_{2j-1} gamma_{2j} = (-1)^{n_j} holds exactly on this basis.
class MajoranaAlgebra {
public:
    static constexpr int kMaxMajoranas = 16;

    explicit MajoranaAlgebra(int n_majoranas);

    int n_majoranas() const noexcept { return n_majoranas_; }
    int n_modes() const noexcept { return n_majoranas_ / 2; }
    Eigen::Index dim() const noexcept { return dim_; }

    /// gamma_i, 1-based.
    const Matrix& gamma(int i) const;
    const std::vector<Matrix>& gammas() const noexcept { return gammas_; }

    /// -i gamma_a gamma_b.
    Matrix pair_parity(int a, int b) const;
    /// P_j = -i gamma_{2j-1} gamma_{2j} = (-1)^{n_j}.
    Matrix mode_parity(int j) const;
    /// Product of all mode parities, (-1)^{sum n_j}.
    Matrix total_parity() const;

private:
    int n_majoranas_;
    Eigen::Index dim_;
    std::vector<Matrix> gammas_;
};

MajoranaAlgebra build_algebra(int n_majoranas);

/// Ising braid representation B_j -> (1 - gamma_j gamma_{j+1}) / sqrt(2) on
/// n_majoranas strands.
Representation ising_rep(const MajoranaAlgebra& alg);

/// Logical qubit in the even-parity sector of four Majoranas:
/// |0> = |00> (index 0), |1> = |11> (index 3).
struct LogicalEncoding {
    MajoranaAlgebra algebra;
    std::array<Eigen::Index, 2> sector_basis{0, 3};
    Matrix sigma_z;
    Matrix sigma_x;

    /// 2x2 block of a 4x4 operator on the even sector.
    Matrix restrict(const Matrix& op) const;
    /// Embeds a logical 2-vector into the Fock space.
    Vector embed(const Vector& logical) const;
};

LogicalEncoding logical_encoding(const MajoranaAlgebra& alg);

/// Disjoint 1-based Majorana index pairs; outcome bit j refers to pair j.
using Pairing = std::vector<std::pair<int, int>>;

/// Parses "(1,3)(2,4)".
Pairing parse_pairing(std::string_view text);
std::string format_pairing(const Pairing& pairing);

/// Parity operators measured by a fusion with the given pairing. Pair j gives
/// -i gamma_a gamma_b, except that the last pair is sign-flipped when the
/// pairing is an odd permutation of 1..2M; with that orientation the pair
/// parities multiply to the total parity, so parity-violating outcomes never
/// occur for a state of definite parity.
std::vector<Matrix> fusion_parities(const MajoranaAlgebra& alg, const Pairing& pairing);

struct FusionDistribution {
    Pairing pairing;
    /// Bitstring ("0" = even pair, "1" = odd pair) to probability, all 2^M outcomes.
    std::map<std::string, double> probabilities;
    std::optional<std::map<std::string, std::uint64_t>> counts;
    std::optional<std::uint64_t> seed;
    std::string sampler;
};

FusionDistribution fusion_distribution(const MajoranaAlgebra& alg, const Vector& state, const Pairing& pairing,
                                       std::optional<std::uint64_t> shots = std::nullopt,
                                       std::optional<std::uint64_t> seed = std::nullopt);

/// Position (1-based) of each Majorana after the braid, indexed by its initial position.
std::vector<int> final_positions(const BraidWord& word);

/// Splits all pairs (1,2)(3,4)... out of the vacuum, applies `word` with the
/// Ising representation and fuses with `pairing`. Pairing labels name the
/// Majoranas by where they were created; each pair is fused at the positions
/// the braid has moved them to, so after B_2 the pairing (1,3)(2,4) fuses
/// neighbours again.
FusionDistribution braid_then_fuse(const BraidWord& word, const Pairing& pairing,
                                   std::optional<std::uint64_t> shots = std::nullopt,
                                   std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace anyonsim
