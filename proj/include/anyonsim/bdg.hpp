#pragma once

#include "anyonsim/linalg.hpp"

#include <Eigen/Dense>

#include <functional>
#include <utility>
#include <vector>

namespace anyonsim {

/// (E+, E-) = (+sqrt((v k)^2 + M^2), -sqrt(...)), hbar = 1.
std::pair<double, double> jr_dispersion(double k, double m_bar, double v_f);

enum class MassKind { Tanh, Step, Sampled };

/// Domain-wall mass on a uniform grid x_i = x0 + i a. Declared asymptotics are
/// M(-inf) = +m_bar and M(+inf) = -m_bar.
struct MassProfile {
    MassKind kind = MassKind::Tanh;
    double m_bar = 1.0;
    double width = 1.0;
    double x0 = -10.0;
    double spacing = 0.01;
    int n_points = 2001;
    std::vector<double> samples;  ///< used when kind == Sampled

    static MassProfile tanh(double m_bar, double width, double half_extent, double spacing);
    static MassProfile step(double m_bar, double half_extent, double spacing);
    static MassProfile sampled(std::vector<double> values, double x0, double spacing);

    double x(int i) const noexcept { return x0 + i * spacing; }
    std::vector<double> grid() const;
    std::vector<double> values() const;
};

struct ZeroMode {
    std::vector<double> x;
    Eigen::MatrixX2cd spinor;       ///< row i: (psi_up, psi_down) at x_i, unit discrete norm
    std::vector<double> density;    ///< |psi|^2 per site
    double residual = 0.0;          ///< ||H_JR psi|| / ||psi|| on interior sites
    Eigen::Vector2cd chi;           ///< sigma^y = +1 spinor
};

/// The sigma^y = +1 eigenvector (e^{-i pi/4}, e^{i pi/4}) / sqrt 2.
Eigen::Vector2cd chi_plus_y();

/// Zero mode f(x) chi with f = N exp(int_0^x M / v_f); NotNormalizable when the
/// profile does not go from > 0.9 m_bar on the left to < -0.9 m_bar on the right.
ZeroMode jr_zero_mode(const MassProfile& profile, double v_f);

struct ChainSpec {
    double t = 1.0;
    double delta = 0.5;
    std::vector<double> mu;  ///< per site, measured from the band bottom

    static ChainSpec uniform(int n_sites, double t, double delta, double mu);
    int n_sites() const noexcept { return static_cast<int>(mu.size()); }
    void validate() const;
};

/// Real symmetric 2L x 2L matrix [[h, D], [-D, -h]] in the (c, c^dag) basis with
/// h_ii = 2t - mu_i, h_{i,i+1} = -t, D_{i,i+1} = -D_{i+1,i} = delta.
Eigen::MatrixXd bdg_matrix(const ChainSpec& spec);

struct NearZeroMode {
    double energy = 0.0;
    double center = 0.0;        ///< weight-averaged site position
    double decay_length = 0.0;  ///< xi with mean distance from the nearest end = 1/(e^{2/xi} - 1)
    double end_weight = 0.0;    ///< weight within end_window sites of either end
    double majorana_left = 0.0; ///< weight of the gamma_A (u + v) component
    double majorana_right = 0.0;///< weight of the gamma_B (u - v) component
};

struct SpectrumResult {
    std::vector<double> eigenvalues;  ///< ascending
    Eigen::MatrixXd eigenvectors;
    double ph_defect = 0.0;           ///< max |E_n + E_{2L-1-n}|
    std::vector<NearZeroMode> near_zero;
};

SpectrumResult chain_spectrum(const ChainSpec& spec, double zero_tol = 1e-6, double end_window = -1.0);

/// Decay length of the end Majorana on a uniform lattice chain (largest root modulus
/// of (t + delta) x^2 - (2t - mu) x + (t - delta) = 0).
double kitaev_decay_length(double t, double delta, double mu);
/// Continuum decay length 1/kappa, t kappa^2 - 2 delta kappa + mu = 0 (smallest root).
double continuum_decay_length(double t, double delta, double mu);
/// Leading small-mu guide xi = 2 delta / mu.
double guide_decay_length(double delta, double mu);

struct SplittingScanSpec {
    double t = 1.0;
    double delta = 0.5;
    double mu_bar = 0.05;
    int buffer_sites = 100;
    std::vector<int> lengths;
    int workers = 1;
    int envelope_window = 3;
};

struct SplittingPoint {
    int d = 0;
    double epsilon = 0.0;
    double ln_envelope = 0.0;
    bool used_in_fit = false;
};

struct SplittingResult {
    std::vector<SplittingPoint> points;
    double slope = 0.0;
    double intercept = 0.0;
    double xi_fit = 0.0;
    double r_squared = 0.0;
    double prefactor = 0.0;  ///< exp(intercept), reported only
};

/// Geometry per d: buffer (mu = -mu_bar) | d topological sites (mu = +mu_bar) | buffer.
ChainSpec splitting_geometry(const SplittingScanSpec& spec, int d);
/// epsilon(d) = smallest nonnegative eigenvalue; least-squares fit of ln of the
/// sliding-window maximum envelope. Points at the numerical floor are left out;
/// DegenerateFit below three usable points.
SplittingResult splitting_scan(const SplittingScanSpec& spec);

}  // namespace anyonsim
