#include "anyonsim/berry.hpp"

#include "anyonsim/compiler.hpp"
#include "anyonsim/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace anyonsim {

namespace {

constexpr double kGapThreshold = 1e-12;

double norm3(const Couplings& e) { return std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]); }

void check_gap(const Couplings& eps, double epsilon_bar) {
    if (norm3(eps) < kGapThreshold * epsilon_bar) {
        throw Error(ErrorCode::GapClosed, "junction gap |eps| vanishes");
    }
}

void check_index(int k) {
    if (k < 1 || k > 3) throw Error(ErrorCode::IndexOutOfRange, "coupling index must be 1, 2 or 3");
}

}  // namespace

std::vector<Couplings> CouplingPath::corners() const {
    std::vector<Couplings> out{start};
    Couplings e = start;
    for (const CouplingLeg& leg : legs) {
        check_index(leg.k);
        e[static_cast<std::size_t>(leg.k - 1)] = leg.to;
        out.push_back(e);
    }
    return out;
}

Couplings CouplingPath::end() const { return corners().back(); }

bool CouplingPath::closed(double tol) const {
    const Couplings e = end();
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(e[i] - start[i]) > tol * epsilon_bar) return false;
    }
    return true;
}

double CouplingPath::min_gap() const {
    double best = norm3(start);
    Couplings e = start;
    for (const CouplingLeg& leg : legs) {
        check_index(leg.k);
        const auto idx = static_cast<std::size_t>(leg.k - 1);
        double perp2 = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i != idx) perp2 += e[i] * e[i];
        }
        const double lo = std::min(leg.from, leg.to);
        const double hi = std::max(leg.from, leg.to);
        const double x = (lo <= 0.0 && hi >= 0.0) ? 0.0 : std::min(std::abs(lo), std::abs(hi));
        best = std::min(best, std::sqrt(perp2 + x * x));
        e[idx] = leg.to;
    }
    return best;
}

void CouplingPath::validate() const {
    if (!(epsilon_bar > 0.0)) throw Error(ErrorCode::InvalidPath, "epsilon_bar must be positive");
    Couplings e = start;
    for (std::size_t n = 0; n < legs.size(); ++n) {
        const CouplingLeg& leg = legs[n];
        if (leg.k < 1 || leg.k > 3) {
            throw Error(ErrorCode::InvalidPath, "leg " + std::to_string(n) + ": coupling index must be 1, 2 or 3");
        }
        const auto idx = static_cast<std::size_t>(leg.k - 1);
        if (std::abs(e[idx] - leg.from) > 1e-12 * epsilon_bar) {
            throw Error(ErrorCode::InvalidPath, "leg " + std::to_string(n) + " does not start where the path is");
        }
        e[idx] = leg.to;
    }
    if (min_gap() < kGapThreshold * epsilon_bar) throw Error(ErrorCode::InvalidPath, "path closes the junction gap");
}

const MajoranaAlgebra& junction_algebra() {
    static const MajoranaAlgebra alg(4);
    return alg;
}

const Matrix& junction_gamma(int k) {
    if (k < 0 || k > 3) throw Error(ErrorCode::IndexOutOfRange, "junction Majoranas are gamma_0 .. gamma_3");
    return junction_algebra().gamma(k + 1);
}

Matrix junction_hamiltonian(const Couplings& eps) {
    Matrix h = Matrix::Zero(4, 4);
    for (int j = 1; j <= 3; ++j) h += kI * eps[static_cast<std::size_t>(j - 1)] * junction_gamma(0) * junction_gamma(j);
    return h;
}

Matrix ground_projector(const Couplings& eps, double epsilon_bar) {
    check_gap(eps, epsilon_bar);
    const double e = norm3(eps);
    return (e * Matrix::Identity(4, 4) - junction_hamiltonian(eps)) / (2.0 * e);
}

Matrix kato_field(const Couplings& eps, int k, double epsilon_bar) {
    check_index(k);
    check_gap(eps, epsilon_bar);
    const double e2 = eps[0] * eps[0] + eps[1] * eps[1] + eps[2] * eps[2];
    Matrix transverse = Matrix::Zero(4, 4);
    for (int j = 1; j <= 3; ++j) {
        if (j != k) transverse += eps[static_cast<std::size_t>(j - 1)] * junction_gamma(j);
    }
    return (kI / (2.0 * e2)) * transverse * junction_gamma(k);
}

Matrix kato_field_fd(const Couplings& eps, int k, double h, double epsilon_bar) {
    check_index(k);
    Couplings plus = eps;
    Couplings minus = eps;
    plus[static_cast<std::size_t>(k - 1)] += h;
    minus[static_cast<std::size_t>(k - 1)] -= h;
    const Matrix dp = (ground_projector(plus, epsilon_bar) - ground_projector(minus, epsilon_bar)) / (2.0 * h);
    return kI * commutator(ground_projector(eps, epsilon_bar), dp);
}

Matrix evolve_path(const CouplingPath& path, const KatoConfig& cfg) {
    if (cfg.steps_per_leg < 2) throw Error(ErrorCode::InvalidArgument, "steps_per_leg must be at least 2");
    path.validate();
    Matrix u = Matrix::Identity(4, 4);
    Couplings e = path.start;
    for (const CouplingLeg& leg : path.legs) {
        const auto idx = static_cast<std::size_t>(leg.k - 1);
        const double step = (leg.to - leg.from) / cfg.steps_per_leg;
        for (int s = 0; s < cfg.steps_per_leg; ++s) {
            e[idx] = leg.from + (s + 0.5) * step;
            u = expi_hermitian(kato_field(e, leg.k, path.epsilon_bar), step) * u;
        }
        e[idx] = leg.to;
    }
    return u;
}

CouplingPath exchange_path(bool mirror, double epsilon_bar) {
    const int a = mirror ? 2 : 1;
    const int b = mirror ? 1 : 2;
    const double eb = epsilon_bar;
    CouplingPath path;
    path.start = {0.0, 0.0, eb};
    path.epsilon_bar = eb;
    path.legs = {{a, 0.0, eb}, {3, eb, 0.0}, {b, 0.0, eb}, {a, eb, 0.0}, {3, 0.0, eb}, {b, eb, 0.0}};
    return path;
}

CouplingPath single_move_path(double epsilon_bar) {
    CouplingPath path;
    path.start = {0.0, 0.0, epsilon_bar};
    path.epsilon_bar = epsilon_bar;
    path.legs = {{1, 0.0, epsilon_bar}, {3, epsilon_bar, 0.0}};
    return path;
}

Matrix ground_basis(const Couplings& eps, double epsilon_bar) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(ground_projector(eps, epsilon_bar));
    Matrix basis(4, 2);
    int col = 0;
    for (Eigen::Index i = 0; i < 4 && col < 2; ++i) {
        if (es.eigenvalues()(i) > 0.5) basis.col(col++) = es.eigenvectors().col(i);
    }
    if (col != 2) throw Error(ErrorCode::GapClosed, "ground space is not two-dimensional");
    for (Eigen::Index c = 0; c < 2; ++c) {
        for (Eigen::Index r = 0; r < 4; ++r) {
            if (std::abs(basis(r, c)) > 1e-12) {
                basis.col(c) *= std::abs(basis(r, c)) / basis(r, c);
                break;
            }
        }
    }
    return basis;
}

Matrix nearest_unitary(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

HolonomyReport compare_holonomy(const CouplingPath& path, const KatoConfig& cfg, const Matrix& reference) {
    HolonomyReport r;
    r.unitary = evolve_path(path, cfg);
    const Couplings end = path.end();
    const Matrix b_start = ground_basis(path.start, path.epsilon_bar);
    const Matrix b_end = ground_basis(end, path.epsilon_bar);
    r.ground_block = b_end.adjoint() * r.unitary * b_start;
    r.reference_block = b_end.adjoint() * reference * b_start;
    r.block_unitarity_defect = unitarity_defect(r.ground_block);
    r.leakage = op_norm(ground_projector(end, path.epsilon_bar) * r.unitary -
                        r.unitary * ground_projector(path.start, path.epsilon_bar));
    r.distance = distance(nearest_unitary(r.ground_block), nearest_unitary(r.reference_block));
    return r;
}

Matrix exchange_reference(bool mirror) {
    const Matrix g12 = junction_gamma(1) * junction_gamma(2);
    const Matrix id = Matrix::Identity(4, 4);
    return (mirror ? Matrix(id + g12) : Matrix(id - g12)) / std::sqrt(2.0);
}

Matrix single_move_reference() {
    return (Matrix::Identity(4, 4) + junction_gamma(1) * junction_gamma(3)) / std::sqrt(2.0);
}

double single_leg_integral(double from, double to, double perp) {
    if (!(perp > 0.0)) throw Error(ErrorCode::GapClosed, "perpendicular coupling must be positive");
    return (std::atan(to / perp) - std::atan(from / perp)) / (2.0 * perp);
}

}  // namespace anyonsim
