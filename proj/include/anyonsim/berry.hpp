#pragma once

#include "anyonsim/ising.hpp"
#include "anyonsim/linalg.hpp"

#include <array>
#include <vector>

namespace anyonsim {

using Couplings = std::array<double, 3>;

/// Linear ramp of coupling k (1..3) from `from` to `to`; the other two are held.
struct CouplingLeg {
    int k = 1;
    double from = 0.0;
    double to = 0.0;
};

struct CouplingPath {
    Couplings start{0.0, 0.0, 1.0};
    std::vector<CouplingLeg> legs;
    double epsilon_bar = 1.0;

    /// Coupling vector at the beginning of each leg, plus the final point.
    std::vector<Couplings> corners() const;
    Couplings end() const;
    bool closed(double tol = 1e-12) const;
    /// Minimum of |eps| along the piecewise-linear path (exact per leg).
    double min_gap() const;
    /// Throws InvalidPath for bad indices, legs that do not start where the
    /// previous one ended, or a gap below 1e-12 * epsilon_bar.
    void validate() const;
};

struct KatoConfig {
    int steps_per_leg = 1000;
};

/// The four-Majorana junction: gamma_0 is the algebra's gamma(1), gamma_k is gamma(k + 1).
const MajoranaAlgebra& junction_algebra();
const Matrix& junction_gamma(int k);

/// H = i sum_j eps_j gamma_0 gamma_j.
Matrix junction_hamiltonian(const Couplings& eps);
/// P = (|eps| - H) / (2 |eps|), projector onto the doubly degenerate ground space.
Matrix ground_projector(const Couplings& eps, double epsilon_bar = 1.0);
/// K^k = (i / 2|eps|^2) (eps.gamma - eps_k gamma_k) gamma_k.
Matrix kato_field(const Couplings& eps, int k, double epsilon_bar = 1.0);
/// i [P, d_k P] with a central finite difference of step h.
Matrix kato_field_fd(const Couplings& eps, int k, double h = 1e-5, double epsilon_bar = 1.0);

/// Ordered product of exp(i K^k(eps_mid) d eps_k), earliest step applied first.
Matrix evolve_path(const CouplingPath& path, const KatoConfig& cfg);

/// The six-leg exchange of the Majoranas on legs 1 and 2, starting and ending at (0, 0, eps_bar).
/// `mirror` swaps the roles of legs 1 and 2, reversing the exchange orientation.
CouplingPath exchange_path(bool mirror = false, double epsilon_bar = 1.0);
/// Two-leg move of the zero mode from leg 1 to leg 3: eps_1 0 -> eps_bar, then eps_3 eps_bar -> 0.
CouplingPath single_move_path(double epsilon_bar = 1.0);

/// Orthonormal basis (columns) of range(P); each column's first nonzero entry is real positive.
Matrix ground_basis(const Couplings& eps, double epsilon_bar = 1.0);

/// Closest unitary to m (polar factor).
Matrix nearest_unitary(const Matrix& m);

struct HolonomyReport {
    Matrix unitary;       ///< full 4x4 evolution
    Matrix ground_block;  ///< B_end^dag U B_start
    Matrix reference_block;
    double distance = 0.0;   ///< phase-invariant distance of the blocks (polar part of the numeric one)
    double leakage = 0.0;    ///< ||P_end U - U P_start||
    double block_unitarity_defect = 0.0;
};

/// Evolves `path` and compares with the analytic operator `reference` on the ground blocks.
HolonomyReport compare_holonomy(const CouplingPath& path, const KatoConfig& cfg, const Matrix& reference);

/// (1 - gamma_1 gamma_2)/sqrt 2, or its conjugate orientation (1 + gamma_1 gamma_2)/sqrt 2 when mirrored.
Matrix exchange_reference(bool mirror = false);
/// (1 + gamma_1 gamma_3)/sqrt 2.
Matrix single_move_reference();

/// int_from^to dx / (2 (x^2 + perp^2)), the Kato integral of a single ramp with the
/// perpendicular coupling held at perp.
double single_leg_integral(double from, double to, double perp);

}  // namespace anyonsim
