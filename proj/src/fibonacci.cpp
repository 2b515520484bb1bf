#include "anyonsim/fibonacci.hpp"

#include "anyonsim/error.hpp"

#include <algorithm>
#include <cmath>

namespace anyonsim {

namespace {

constexpr Charge k0 = Charge::Vacuum;
constexpr Charge kT = Charge::Tau;

void enumerate_paths(std::vector<Charge>& prefix, int n_anyons, std::optional<Charge> filter,
                     std::vector<FusionPath>& out) {
    if (static_cast<int>(prefix.size()) == n_anyons + 1) {
        if (!filter || prefix.back() == *filter) out.push_back(FusionPath{prefix});
        return;
    }
    for (Charge next : {k0, kT}) {
        if (next == k0 && prefix.back() == k0) continue;
        prefix.push_back(next);
        enumerate_paths(prefix, n_anyons, filter, out);
        prefix.pop_back();
    }
}

}  // namespace

char to_char(Charge c) noexcept { return c == Charge::Vacuum ? '0' : 't'; }

std::optional<Charge> parse_charge(std::string_view text) {
    if (text == "0" || text == "vacuum") return Charge::Vacuum;
    if (text == "t" || text == "tau") return Charge::Tau;
    return std::nullopt;
}

std::string FusionPath::to_string() const {
    std::string s;
    s.reserve(labels.size());
    for (Charge c : labels) s.push_back(to_char(c));
    return s;
}

FusionPath FusionPath::parse(std::string_view text) {
    FusionPath p;
    for (char ch : text) {
        if (ch == '0') {
            p.labels.push_back(Charge::Vacuum);
        } else if (ch == 't') {
            p.labels.push_back(Charge::Tau);
        } else {
            throw Error(ErrorCode::MalformedToken, std::string("fusion path character '") + ch + "'");
        }
    }
    if (!p.valid()) throw Error(ErrorCode::InvalidArgument, "invalid fusion path '" + std::string(text) + "'");
    return p;
}

bool FusionPath::valid() const noexcept {
    if (labels.size() < 2 || labels[0] != k0 || labels[1] != kT) return false;
    for (std::size_t i = 1; i < labels.size(); ++i) {
        if (labels[i] == k0 && labels[i - 1] == k0) return false;
    }
    return true;
}

FusionBasis::FusionBasis(int n_anyons, std::optional<Charge> total_charge)
    : n_anyons_(n_anyons), filter_(total_charge) {
    if (n_anyons < 1) throw Error(ErrorCode::InvalidArgument, "need at least one anyon");
    if (n_anyons > kMaxAnyons) {
        throw Error(ErrorCode::TooLarge, "at most " + std::to_string(kMaxAnyons) + " anyons supported");
    }
    std::vector<Charge> prefix{k0, kT};
    enumerate_paths(prefix, n_anyons, total_charge, paths_);
    index_.reserve(paths_.size());
    for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(paths_[i].to_string(), i);
}

std::optional<std::size_t> FusionBasis::index_of(const FusionPath& p) const {
    auto it = index_.find(p.to_string());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

FusionBasis enumerate_basis(int n_anyons, std::optional<Charge> total_charge) {
    return FusionBasis(n_anyons, total_charge);
}

std::pair<std::uint64_t, std::uint64_t> basis_counts(int n_anyons) {
    std::uint64_t z = 1, o = 0;
    for (int j = 0; j < n_anyons; ++j) {
        const std::uint64_t z_next = o;
        const std::uint64_t o_next = o + z;
        z = z_next;
        o = o_next;
    }
    return {z, o};
}

cplx FibConstants::omega() { return -std::polar(1.0, 2.0 * kPi / 5.0); }

double FibConstants::phi() { return (1.0 + std::sqrt(5.0)) / 2.0; }

LocalAction local_braid_action(Charge left, Charge middle, Charge right) {
    const cplx w = FibConstants::omega();
    const double phi = FibConstants::phi();
    LocalAction act;
    auto add = [&](Charge label, cplx amp) { act.terms[static_cast<std::size_t>(act.n_terms++)] = {label, amp}; };
    if (left == k0 && middle == kT && right == kT) {
        add(kT, 1.0 / w);
    } else if (left == kT && middle == kT && right == k0) {
        add(kT, 1.0 / w);
    } else if (left == k0 && middle == kT && right == k0) {
        add(kT, 1.0 / (w * w));
    } else if (left == kT && middle == k0 && right == kT) {
        add(k0, w * w / phi);
        add(kT, w / std::sqrt(phi));
    } else if (left == kT && middle == kT && right == kT) {
        add(k0, w / std::sqrt(phi));
        add(kT, -1.0 / phi);
    } else {
        throw Error(ErrorCode::InvalidArgument, "neighbouring labels contain two vacua in a row");
    }
    return act;
}

FibonacciAction::FibonacciAction(FusionBasis basis) : basis_(std::move(basis)) {}

Vector FibonacciAction::apply(int j, const Vector& state, bool inverse) const {
    const int n = basis_.n_anyons();
    if (j < 1 || j >= n) throw Error(ErrorCode::IndexOutOfRange, "no generator B_" + std::to_string(j));
    if (state.size() != static_cast<Eigen::Index>(basis_.size())) {
        throw Error(ErrorCode::DimensionMismatch, "state does not match the fusion basis");
    }
    const auto ju = static_cast<std::size_t>(j);
    Vector out = Vector::Zero(state.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const cplx amp = state(static_cast<Eigen::Index>(i));
        if (amp == cplx{}) continue;
        const FusionPath& p = basis_.paths()[i];
        const LocalAction act = local_braid_action(p.labels[ju - 1], p.labels[ju], p.labels[ju + 1]);
        FusionPath target = p;
        for (int t = 0; t < act.n_terms; ++t) {
            const auto& [label, c] = act.terms[static_cast<std::size_t>(t)];
            target.labels[ju] = label;
            const auto k = basis_.index_of(target);
            // The local blocks are complex symmetric, so the inverse (adjoint)
            // has the conjugated amplitudes on the same transitions.
            out(static_cast<Eigen::Index>(*k)) += amp * (inverse ? std::conj(c) : c);
        }
    }
    return out;
}

Vector FibonacciAction::apply_word(const BraidWord& word, const Vector& state) const {
    if (word.n_strands != basis_.n_anyons()) {
        throw Error(ErrorCode::DimensionMismatch, "word and basis have different strand counts");
    }
    Vector v = state;
    for (int letter : word.letters) v = apply(std::abs(letter), v, letter < 0);
    return v;
}

Representation fibonacci_rep(int n_anyons, std::optional<Charge> total_charge) {
    if (n_anyons < 2) throw Error(ErrorCode::InvalidArgument, "need at least two anyons to braid");
    if (n_anyons > kDenseMaxAnyons) {
        throw Error(ErrorCode::TooLarge, "dense generators are limited to " + std::to_string(kDenseMaxAnyons) +
                                             " anyons; use FibonacciAction");
    }
    const FibonacciAction action(FusionBasis(n_anyons, total_charge));
    const auto dim = static_cast<Eigen::Index>(action.basis().size());
    std::vector<Matrix> gens;
    for (int j = 1; j < n_anyons; ++j) {
        Matrix g(dim, dim);
        for (Eigen::Index k = 0; k < dim; ++k) {
            g.col(k) = action.apply(j, Vector::Unit(dim, k));
        }
        gens.push_back(std::move(g));
    }
    return Representation("fibonacci", n_anyons, std::move(gens));
}

BlockMatrices block_matrices() {
    auto block = [](Charge a, Charge b, bool second) {
        std::vector<std::pair<Charge, Charge>> states;
        for (Charge x : {k0, kT}) {
            for (Charge y : {k0, kT}) {
                if ((a == k0 && x == k0) || (x == k0 && y == k0) || (y == k0 && b == k0)) continue;
                states.emplace_back(x, y);
            }
        }
        const auto dim = static_cast<Eigen::Index>(states.size());
        Matrix m = Matrix::Zero(dim, dim);
        for (Eigen::Index col = 0; col < dim; ++col) {
            const auto [x, y] = states[static_cast<std::size_t>(col)];
            const LocalAction act = second ? local_braid_action(x, y, b) : local_braid_action(a, x, y);
            for (int t = 0; t < act.n_terms; ++t) {
                const auto& [label, c] = act.terms[static_cast<std::size_t>(t)];
                const std::pair<Charge, Charge> target = second ? std::make_pair(x, label) : std::make_pair(label, y);
                const auto row = std::find(states.begin(), states.end(), target) - states.begin();
                m(row, col) += c;
            }
        }
        return m;
    };
    BlockMatrices b;
    b.u00 = block(k0, k0, false);
    b.v00 = block(k0, k0, true);
    b.u0t = block(k0, kT, false);
    b.v0t = block(k0, kT, true);
    b.ut0 = block(kT, k0, false);
    b.vt0 = block(kT, k0, true);
    b.utt = block(kT, kT, false);
    b.vtt = block(kT, kT, true);
    return b;
}

Matrix f_matrix() {
    const double phi = FibConstants::phi();
    Matrix f(2, 2);
    f << 1.0 / phi, 1.0 / std::sqrt(phi), 1.0 / std::sqrt(phi), -1.0 / phi;
    return f;
}

AxisAngle axis_angle(const Matrix& u) {
    if (u.rows() != 2 || u.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "axis_angle needs a 2x2 matrix");
    AxisAngle out;
    out.global_phase = std::arg(u.determinant()) / 2.0;
    const Matrix w = u * std::polar(1.0, -out.global_phase);
    const double c = std::clamp(0.5 * (w(0, 0) + w(1, 1)).real(), -1.0, 1.0);
    out.angle = 2.0 * std::acos(c);
    const double s = std::sin(out.angle / 2.0);
    if (std::abs(s) < 1e-14) {
        out.axis = Eigen::Vector3d::UnitZ();
        return out;
    }
    // w = cos(a/2) - i sin(a/2) n.sigma  =>  n_k = Re(i tr(w sigma_k)) / (2 sin(a/2))
    const cplx tr_x = w(0, 1) + w(1, 0);
    const cplx tr_y = kI * w(0, 1) - kI * w(1, 0);
    const cplx tr_z = w(0, 0) - w(1, 1);
    out.axis = Eigen::Vector3d((kI * tr_x).real(), (kI * tr_y).real(), (kI * tr_z).real()) / (2.0 * s);
    return out;
}

QubitGates qubit_gates() {
    const Representation rep = fibonacci_rep(3, Charge::Tau);
    QubitGates g;
    g.u_gate = rep.generator(1);
    g.v_gate = rep.generator(2);
    g.u_axis_angle = axis_angle(g.u_gate);
    g.v_axis_angle = axis_angle(g.v_gate);
    return g;
}

CompositeLoop composite_loop_check() {
    const Representation rep = fibonacci_rep(3);
    CompositeLoop out;
    out.matrix = word_unitary(rep, BraidWord({2, 1, 1, 2}, 3));
    out.w_0t = out.matrix(0, 0);
    out.w_t0 = out.matrix(1, 1);
    out.w_tt = out.matrix(2, 2);
    for (Eigen::Index r = 0; r < out.matrix.rows(); ++r) {
        for (Eigen::Index c = 0; c < out.matrix.cols(); ++c) {
            if (r != c) out.off_diagonal = std::max(out.off_diagonal, std::abs(out.matrix(r, c)));
        }
    }
    return out;
}

}  // namespace anyonsim
