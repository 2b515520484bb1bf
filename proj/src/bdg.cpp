#include "anyonsim/bdg.hpp"

#include "anyonsim/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace anyonsim {

namespace {

constexpr double kSplittingFloor = 1e-13;

}  // namespace

std::pair<double, double> jr_dispersion(double k, double m_bar, double v_f) {
    const double e = std::hypot(v_f * k, m_bar);
    return {e, -e};
}

MassProfile MassProfile::tanh(double m_bar, double width, double half_extent, double spacing) {
    MassProfile p;
    p.kind = MassKind::Tanh;
    p.m_bar = m_bar;
    p.width = width;
    p.spacing = spacing;
    p.n_points = static_cast<int>(std::lround(2.0 * half_extent / spacing)) + 1;
    p.x0 = -half_extent;
    return p;
}

MassProfile MassProfile::step(double m_bar, double half_extent, double spacing) {
    MassProfile p = tanh(m_bar, 0.0, half_extent, spacing);
    p.kind = MassKind::Step;
    return p;
}

MassProfile MassProfile::sampled(std::vector<double> values, double x0, double spacing) {
    MassProfile p;
    p.kind = MassKind::Sampled;
    p.x0 = x0;
    p.spacing = spacing;
    p.n_points = static_cast<int>(values.size());
    p.m_bar = values.empty() ? 0.0 : std::max(std::abs(values.front()), std::abs(values.back()));
    p.samples = std::move(values);
    return p;
}

std::vector<double> MassProfile::grid() const {
    std::vector<double> g(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) g[static_cast<std::size_t>(i)] = x(i);
    return g;
}

std::vector<double> MassProfile::values() const {
    if (kind == MassKind::Sampled) return samples;
    std::vector<double> m(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double xi = x(i);
        m[static_cast<std::size_t>(i)] =
            kind == MassKind::Tanh ? -m_bar * std::tanh(xi / width) : (xi < 0.0 ? m_bar : (xi > 0.0 ? -m_bar : 0.0));
    }
    return m;
}

Eigen::Vector2cd chi_plus_y() {
    const double s = 1.0 / std::sqrt(2.0);
    return Eigen::Vector2cd(std::polar(s, -kPi / 4.0), std::polar(s, kPi / 4.0));
}

ZeroMode jr_zero_mode(const MassProfile& profile, double v_f) {
    if (!(v_f > 0.0)) throw Error(ErrorCode::InvalidArgument, "v_f must be positive");
    if (profile.n_points < 5 || !(profile.spacing > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "mass profile needs at least 5 points and positive spacing");
    }
    if (profile.kind == MassKind::Tanh && !(profile.width > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tanh width must be positive");
    }
    const std::vector<double> m = profile.values();
    if (static_cast<int>(m.size()) != profile.n_points) throw Error(ErrorCode::WrongSize, "sample count mismatch");
    if (!(profile.m_bar > 0.0) || !(m.front() > 0.9 * profile.m_bar) || !(m.back() < -0.9 * profile.m_bar)) {
        throw Error(ErrorCode::NotNormalizable, "mass must go from +m_bar on the left to -m_bar on the right");
    }

    const auto n = static_cast<std::size_t>(profile.n_points);
    std::vector<double> exponent(n);
    switch (profile.kind) {
        case MassKind::Tanh:
            for (std::size_t i = 0; i < n; ++i) {
                const double u = std::abs(profile.x(static_cast<int>(i))) / profile.width;
                // ln cosh u, overflow-safe
                exponent[i] = -(profile.m_bar * profile.width / v_f) * (u + std::log1p(std::exp(-2.0 * u)) - std::log(2.0));
            }
            break;
        case MassKind::Step:
            for (std::size_t i = 0; i < n; ++i) exponent[i] = -profile.m_bar * std::abs(profile.x(static_cast<int>(i))) / v_f;
            break;
        case MassKind::Sampled:
            exponent[0] = 0.0;
            for (std::size_t i = 1; i < n; ++i) exponent[i] = exponent[i - 1] + 0.5 * profile.spacing * (m[i - 1] + m[i]) / v_f;
            break;
    }
    const double peak = *std::max_element(exponent.begin(), exponent.end());

    ZeroMode z;
    z.x = profile.grid();
    z.chi = chi_plus_y();
    z.spinor.resize(static_cast<Eigen::Index>(n), 2);
    z.density.resize(n);
    double norm2 = 0.0;
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = std::exp(exponent[i] - peak);
        norm2 += f[i] * f[i];
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] *= scale;
        z.spinor.row(static_cast<Eigen::Index>(i)) = (f[i] * z.chi).transpose();
        z.density[i] = f[i] * f[i];
    }

    double res2 = 0.0;
    double psi2 = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        const Eigen::Vector2cd d = (z.spinor.row(r + 1) - z.spinor.row(r - 1)).transpose() / (2.0 * profile.spacing);
        const Eigen::Vector2cd psi = z.spinor.row(r).transpose();
        const cplx up = -kI * v_f * d(0) + m[i] * psi(1);
        const cplx down = m[i] * psi(0) + kI * v_f * d(1);
        res2 += std::norm(up) + std::norm(down);
        psi2 += psi.squaredNorm();
    }
    z.residual = std::sqrt(res2 / psi2);
    return z;
}

ChainSpec ChainSpec::uniform(int n_sites, double t, double delta, double mu) {
    ChainSpec s;
    s.t = t;
    s.delta = delta;
    s.mu.assign(static_cast<std::size_t>(std::max(n_sites, 0)), mu);
    return s;
}

void ChainSpec::validate() const {
    if (n_sites() < 4) throw Error(ErrorCode::InvalidArgument, "chain needs at least 4 sites");
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "hopping t must be positive");
    if (!(delta >= 0.0)) throw Error(ErrorCode::InvalidArgument, "pairing delta must be nonnegative");
}

Eigen::MatrixXd bdg_matrix(const ChainSpec& spec) {
    spec.validate();
    const Eigen::Index l = spec.n_sites();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(l, l);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(l, l);
    for (Eigen::Index i = 0; i < l; ++i) {
        h(i, i) = 2.0 * spec.t - spec.mu[static_cast<std::size_t>(i)];
        if (i + 1 < l) {
            h(i, i + 1) = h(i + 1, i) = -spec.t;
            d(i, i + 1) = spec.delta;
            d(i + 1, i) = -spec.delta;
        }
    }
    Eigen::MatrixXd m(2 * l, 2 * l);
    m << h, d, -d, -h;
    return m;
}

double kitaev_decay_length(double t, double delta, double mu) {
    const double a = t + delta;
    const double b = -(2.0 * t - mu);
    const double c = t - delta;
    const cplx disc = std::sqrt(cplx(b * b - 4.0 * a * c, 0.0));
    const double r = std::max(std::abs((-b + disc) / (2.0 * a)), std::abs((-b - disc) / (2.0 * a)));
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    if (r == 0.0) return 0.0;
    return -1.0 / std::log(r);
}

double continuum_decay_length(double t, double delta, double mu) {
    if (!(mu > 0.0) || !(delta > 0.0) || !(t > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "continuum decay length needs t, delta, mu > 0");
    }
    const double disc = delta * delta - t * mu;
    const double kappa = disc >= 0.0 ? (delta - std::sqrt(disc)) / t : delta / t;
    return 1.0 / kappa;
}

double guide_decay_length(double delta, double mu) {
    if (!(mu > 0.0)) throw Error(ErrorCode::InvalidArgument, "mu must be positive");
    return 2.0 * delta / mu;
}

SpectrumResult chain_spectrum(const ChainSpec& spec, double zero_tol, double end_window) {
    const Eigen::MatrixXd m = bdg_matrix(spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::InvalidArgument, "diagonalization failed");
    SpectrumResult r;
    const Eigen::Index n = m.rows();
    const Eigen::Index l = n / 2;
    r.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    r.eigenvectors = es.eigenvectors();
    for (Eigen::Index i = 0; i < n; ++i) {
        r.ph_defect = std::max(r.ph_defect, std::abs(r.eigenvalues[static_cast<std::size_t>(i)] +
                                                     r.eigenvalues[static_cast<std::size_t>(n - 1 - i)]));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        const double e = r.eigenvalues[static_cast<std::size_t>(i)];
        if (std::abs(e) >= zero_tol * spec.t) continue;
        const Eigen::VectorXd u = r.eigenvectors.col(i).head(l);
        const Eigen::VectorXd v = r.eigenvectors.col(i).tail(l);
        NearZeroMode z;
        z.energy = e;
        double mean_end = 0.0;
        for (Eigen::Index s = 0; s < l; ++s) {
            const double w = u(s) * u(s) + v(s) * v(s);
            z.center += w * static_cast<double>(s);
            mean_end += w * static_cast<double>(std::min(s, l - 1 - s));
            z.majorana_left += 0.5 * (u(s) + v(s)) * (u(s) + v(s));
            z.majorana_right += 0.5 * (u(s) - v(s)) * (u(s) - v(s));
        }
        // exact inverse for a geometric intensity profile w_s ~ e^{-2s/xi}
        z.decay_length = mean_end > 0.0 ? 2.0 / std::log1p(1.0 / mean_end) : 0.0;
        const double window = end_window > 0.0 ? end_window : 5.0 * z.decay_length;
        for (Eigen::Index s = 0; s < l; ++s) {
            if (static_cast<double>(std::min(s, l - 1 - s)) < window) z.end_weight += u(s) * u(s) + v(s) * v(s);
        }
        r.near_zero.push_back(z);
    }
    return r;
}

ChainSpec splitting_geometry(const SplittingScanSpec& spec, int d) {
    if (d < 1 || spec.buffer_sites < 0) throw Error(ErrorCode::InvalidArgument, "segment lengths must be positive");
    ChainSpec c;
    c.t = spec.t;
    c.delta = spec.delta;
    c.mu.assign(static_cast<std::size_t>(spec.buffer_sites), -spec.mu_bar);
    c.mu.insert(c.mu.end(), static_cast<std::size_t>(d), spec.mu_bar);
    c.mu.insert(c.mu.end(), static_cast<std::size_t>(spec.buffer_sites), -spec.mu_bar);
    return c;
}

SplittingResult splitting_scan(const SplittingScanSpec& spec) {
    if (!(spec.mu_bar > 0.0)) throw Error(ErrorCode::InvalidArgument, "mu_bar must be positive");
    if (spec.envelope_window < 1) throw Error(ErrorCode::InvalidArgument, "envelope window must be at least 1");
    std::vector<int> lengths = spec.lengths;
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    for (int d : lengths) splitting_geometry(spec, d).validate();

    SplittingResult r;
    r.points.resize(lengths.size());
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < lengths.size(); i += stride) {
            const Eigen::MatrixXd m = bdg_matrix(splitting_geometry(spec, lengths[i]));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
            r.points[i].d = lengths[i];
            r.points[i].epsilon = es.eigenvalues().cwiseAbs().minCoeff();
        }
    };
    const auto workers = static_cast<std::size_t>(std::max(1, spec.workers));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w, workers);
    }

    const auto half = static_cast<std::ptrdiff_t>(spec.envelope_window / 2);
    const auto count = static_cast<std::ptrdiff_t>(r.points.size());
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        double env = 0.0;
        for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(0, i - half); j <= std::min(count - 1, i + half); ++j) {
            env = std::max(env, r.points[static_cast<std::size_t>(j)].epsilon);
        }
        SplittingPoint& p = r.points[static_cast<std::size_t>(i)];
        p.ln_envelope = std::log(env);
        p.used_in_fit = p.epsilon > kSplittingFloor * spec.t && env > kSplittingFloor * spec.t;
        if (p.used_in_fit) {
            xs.push_back(p.d);
            ys.push_back(p.ln_envelope);
        }
    }
    if (xs.size() < 3) throw Error(ErrorCode::DegenerateFit, "fewer than three usable splitting points");

    const double nx = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / nx;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / nx;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    r.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
    r.prefactor = std::exp(r.intercept);
    if (!(r.slope < 0.0)) throw Error(ErrorCode::DegenerateFit, "splitting does not decay with d");
    r.xi_fit = -1.0 / r.slope;
    return r;
}

}  // namespace anyonsim
