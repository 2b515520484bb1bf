#pragma once

#include "anyonsim/braid.hpp"
#include "anyonsim/linalg.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace anyonsim {

/// Phase-invariant operator-norm distance min_phi ||u - e^{i phi} v||.
/// Both matrices must be unitary (to 1e-10) and of equal size. Zero iff the
/// two agree up to a global phase.
double distance(const Matrix& u, const Matrix& v);

/// One loop of the mobile object (position 2 of three) around its left
/// (generator 1) or right (generator 2) neighbour: B_generator^power with
/// power = +-2.
struct Move {
    int generator = 1;
    int power = 2;

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

struct Weave {
    std::vector<Move> moves;

    /// Valid generators and powers, no adjacent cancelling moves.
    bool canonical() const noexcept;
    BraidWord to_word() const;

    friend bool operator==(const Weave&, const Weave&) = default;
};

struct SearchBudget {
    int max_moves = 12;
    double target_distance = 0.02;
    int worker_partitions = 1;
};

/// Target on the three-anyon space: the tau-sector 2x2 block on
/// {|0,t,0,t>, |0,t,t,t>} and the scalar on the vacuum sector |0,t,t,0>.
struct SectorTarget {
    std::string name;
    Matrix tau_block;
    cplx zero_sector{1.0, 0.0};
};

/// Target given by a braid word on three strands.
SectorTarget target_from_word(const BraidWord& word, std::string name);
/// Target given by a 3x3 unitary on the lexicographic basis {0t0t, 0tt0, 0ttt}.
SectorTarget target_from_matrix(const Matrix& full, std::string name);

/// 3x3 matrix of a weave on the lexicographic three-anyon basis.
Matrix weave_unitary(const Weave& weave);

struct SectorDistances {
    double tau = 0.0;
    double zero = 0.0;
    double cost() const noexcept { return tau > zero ? tau : zero; }
};

/// Sector distances of a weave from a target, recomputed from scratch.
SectorDistances weave_distances(const Weave& weave, const SectorTarget& target);

struct CompilationResult {
    Weave weave;
    double distance = 0.0;
    double tau_distance = 0.0;
    double zero_distance = 0.0;
    std::string target_name;
    Matrix matrix;
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
};

/// Iterative-deepening exhaustive search over canonical weaves with at most
/// budget.max_moves moves. Cost is the larger of the two sector distances;
/// ties go to the lexicographically smallest move list. Deepening stops after
/// the first depth whose best cost is within budget.target_distance.
CompilationResult search_weave(const SectorTarget& target, const SearchBudget& budget);

/// Two-qubit gate on |a b> (a target, b control, index 2a + b): identity when
/// the control pair fuses to vacuum, the weave's tau-sector block on the
/// target otherwise.
Matrix controlled_gate(const Weave& weave);

}  // namespace anyonsim
