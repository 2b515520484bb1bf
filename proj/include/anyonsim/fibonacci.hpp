#pragma once

#include "anyonsim/braid.hpp"
#include "anyonsim/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace anyonsim {

/// Fusion channel of a Fibonacci fusion tree edge.
enum class Charge : std::uint8_t { Vacuum = 0, Tau = 1 };

char to_char(Charge c) noexcept;
std::optional<Charge> parse_charge(std::string_view text);

/// Labels f_0 ... f_N of a left-to-right fusion tree of N Fibonacci anyons;
/// f_j is the total charge of the first j anyons, so f_0 = 0 and f_1 = tau.
struct FusionPath {
    std::vector<Charge> labels;

    int n_anyons() const noexcept { return static_cast<int>(labels.size()) - 1; }
    Charge total_charge() const { return labels.back(); }
    /// Alphabet {0, t}: |0,tau,tau,tau> is "0ttt".
    std::string to_string() const;
    static FusionPath parse(std::string_view text);
    bool valid() const noexcept;

    friend bool operator==(const FusionPath&, const FusionPath&) = default;
    friend auto operator<=>(const FusionPath&, const FusionPath&) = default;
};

/// Every valid path for N anyons in lexicographic order (0 < tau).
class FusionBasis {
public:
    static constexpr int kMaxAnyons = 24;

    FusionBasis(int n_anyons, std::optional<Charge> total_charge);

    int n_anyons() const noexcept { return n_anyons_; }
    std::optional<Charge> total_charge_filter() const noexcept { return filter_; }
    const std::vector<FusionPath>& paths() const noexcept { return paths_; }
    std::size_t size() const noexcept { return paths_.size(); }
    std::optional<std::size_t> index_of(const FusionPath& p) const;

private:
    int n_anyons_;
    std::optional<Charge> filter_;
    std::vector<FusionPath> paths_;
    std::unordered_map<std::string, std::size_t> index_;
};

FusionBasis enumerate_basis(int n_anyons, std::optional<Charge> total_charge = std::nullopt);

/// (Z_N, O_N): number of paths ending in 0 and in tau, from the recurrence
/// Z_{j+1} = O_j, O_{j+1} = O_j + Z_j with Z_0 = 1, O_0 = 0.
std::pair<std::uint64_t, std::uint64_t> basis_counts(int n_anyons);

struct FibConstants {
    /// omega = -exp(2 pi i / 5).
    static cplx omega();
    /// Golden ratio.
    static double phi();
};

/// Result of B_j on f_j given its neighbours (f_{j-1}, f_j, f_{j+1}): at most
/// two terms (new f_j, amplitude).
struct LocalAction {
    std::array<std::pair<Charge, cplx>, 2> terms{};
    int n_terms = 0;
};

LocalAction local_braid_action(Charge left, Charge middle, Charge right);

/// On-the-fly action of the generators on state vectors over a basis; no
/// dense matrices are formed.
class FibonacciAction {
public:
    explicit FibonacciAction(FusionBasis basis);

    const FusionBasis& basis() const noexcept { return basis_; }
    /// B_j (or its inverse) applied to `state`.
    Vector apply(int j, const Vector& state, bool inverse = false) const;
    /// The word applied letter by letter, leftmost first.
    Vector apply_word(const BraidWord& word, const Vector& state) const;

private:
    FusionBasis basis_;
};

/// Dense Fibonacci representation. Dense generators are only formed up to
/// kDenseMaxAnyons; use FibonacciAction beyond that.
inline constexpr int kDenseMaxAnyons = 10;
Representation fibonacci_rep(int n_anyons, std::optional<Charge> total_charge = std::nullopt);

/// U_ab = rho(B_j) and V_ab = rho(B_{j+1}) on |f_{j-1}=a, f_j, f_{j+1}, f_{j+2}=b>,
/// each block in lexicographic order of its labels.
struct BlockMatrices {
    Matrix u00, v00, u0t, v0t, ut0, vt0, utt, vtt;
};

BlockMatrices block_matrices();

/// Basis change between ((t1 t2) t3) and (t1 (t2 t3)) on the tau sector.
Matrix f_matrix();

struct AxisAngle {
    double angle = 0.0;           // radians, in [0, 2 pi]
    Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
    double global_phase = 0.0;    // u = e^{i phase} exp(-i angle/2 axis.sigma)
};

/// Decomposes a 2x2 unitary; the global phase is half the principal argument
/// of the determinant.
AxisAngle axis_angle(const Matrix& u);

struct QubitGates {
    Matrix u_gate;
    Matrix v_gate;
    AxisAngle u_axis_angle;
    AxisAngle v_axis_angle;
};

/// B_1 and B_2 on the qubit |0,tau,f,tau>, f in {0, tau}.
QubitGates qubit_gates();

/// rho(B_2 B_1^2 B_2) on three anyons: the pair (t1, t2) with charge a carried
/// around t3, total charge b.
struct CompositeLoop {
    cplx w_0t;
    cplx w_t0;
    cplx w_tt;
    Matrix matrix;           // on the lexicographic 3-anyon basis {0t, t0, tt}
    double off_diagonal = 0; // largest off-diagonal modulus
};

CompositeLoop composite_loop_check();

}  // namespace anyonsim
