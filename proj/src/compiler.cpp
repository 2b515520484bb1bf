#include "anyonsim/compiler.hpp"

#include "anyonsim/error.hpp"
#include "anyonsim/fibonacci.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

namespace anyonsim {

namespace {

using Mat2 = Eigen::Matrix2cd;

constexpr double kUnitarityTol = 1e-10;
constexpr int kPrefixLength = 2;
constexpr std::array<Eigen::Index, 2> kTauSector{0, 2};
constexpr Eigen::Index kZeroSector = 1;

// Smallest arc of the unit circle containing every phase; the optimal global
// phase centres the arc, so the distance is |1 - e^{i L/2}| = 2 sin(L/4).
double arc_distance(std::vector<double> phases) {
    if (phases.size() < 2) return 0.0;
    std::sort(phases.begin(), phases.end());
    double max_gap = 2.0 * kPi - (phases.back() - phases.front());
    for (std::size_t i = 0; i + 1 < phases.size(); ++i) max_gap = std::max(max_gap, phases[i + 1] - phases[i]);
    const double arc = std::max(0.0, 2.0 * kPi - max_gap);
    return 2.0 * std::sin(arc / 4.0);
}

// 2x2 fast path. w = e^{i alpha} [[a, b], [-conj b, conj a]] with |a|^2 + |b|^2 = 1
// has eigenphases alpha +- h where cos h = Re a; computing h through atan2
// keeps full relative accuracy for nearly equal matrices.
double distance2(const Mat2& w) {
    const cplx half_phase = std::polar(1.0, -0.5 * std::arg(w.determinant()));
    const Mat2 s = w * half_phase;
    const cplx a = 0.5 * (s(0, 0) + std::conj(s(1, 1)));
    const cplx b = 0.5 * (s(0, 1) - std::conj(s(1, 0)));
    const double h = std::atan2(std::sqrt(a.imag() * a.imag() + std::norm(b)), a.real());
    const double theta = 2.0 * h;
    const double arc = std::min(theta, 2.0 * kPi - theta);
    return 2.0 * std::sin(arc / 4.0);
}

struct Candidate {
    double cost = std::numeric_limits<double>::infinity();
    std::vector<int> moves;

    bool better_than(const Candidate& other) const {
        if (cost != other.cost) return cost < other.cost;
        return std::lexicographical_compare(moves.begin(), moves.end(), other.moves.begin(), other.moves.end());
    }
};

// Move index i <-> Move ordering: 0 (1,-2), 1 (1,+2), 2 (2,-2), 3 (2,+2).
constexpr std::array<Move, 4> kMoves{Move{1, -2}, Move{1, 2}, Move{2, -2}, Move{2, 2}};

constexpr bool cancels(int prev, int next) { return prev >= 0 && (prev ^ 1) == next; }

struct SearchTables {
    std::array<Mat2, 4> tau;
    Mat2 target_tau_adjoint;
};

class SubtreeSearch {
public:
    SubtreeSearch(const SearchTables& tables, int depth) : tables_(tables), depth_(depth) {
        path_.reserve(static_cast<std::size_t>(depth));
    }

    void run(const std::vector<int>& prefix) {
        Mat2 m = Mat2::Identity();
        for (int idx : prefix) m = tables_.tau[static_cast<std::size_t>(idx)] * m;
        path_ = prefix;
        descend(m);
    }

    const Candidate& best() const noexcept { return best_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    void descend(const Mat2& m) {
        if (static_cast<int>(path_.size()) == depth_) {
            ++nodes_;
            const double cost = distance2(tables_.target_tau_adjoint * m);
            if (cost < best_.cost || (cost == best_.cost && std::lexicographical_compare(
                                                                 path_.begin(), path_.end(), best_.moves.begin(),
                                                                 best_.moves.end()))) {
                best_.cost = cost;
                best_.moves = path_;
            }
            return;
        }
        const int prev = path_.empty() ? -1 : path_.back();
        for (int idx = 0; idx < 4; ++idx) {
            if (cancels(prev, idx)) continue;
            path_.push_back(idx);
            descend(tables_.tau[static_cast<std::size_t>(idx)] * m);
            path_.pop_back();
        }
    }

    const SearchTables& tables_;
    int depth_;
    std::vector<int> path_;
    Candidate best_;
    std::uint64_t nodes_ = 0;
};

void canonical_prefixes(int length, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == length) {
        out.push_back(current);
        return;
    }
    const int prev = current.empty() ? -1 : current.back();
    for (int idx = 0; idx < 4; ++idx) {
        if (cancels(prev, idx)) continue;
        current.push_back(idx);
        canonical_prefixes(length, current, out);
        current.pop_back();
    }
}

Matrix tau_block(const Matrix& full) {
    Matrix b(2, 2);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) b(r, c) = full(kTauSector[r], kTauSector[c]);
    }
    return b;
}

const Representation& three_anyon_rep() {
    static const Representation rep = fibonacci_rep(3);
    return rep;
}

Matrix move_matrix(const Move& m) {
    const Matrix& g = three_anyon_rep().generator(m.generator);
    return m.power > 0 ? Matrix(g * g) : Matrix(g.adjoint() * g.adjoint());
}

}  // namespace

double distance(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "distance needs two square matrices of equal size");
    }
    if (unitarity_defect(u) > kUnitarityTol || unitarity_defect(v) > kUnitarityTol) {
        throw Error(ErrorCode::NotUnitary, "distance is only defined for unitaries");
    }
    const Matrix w = u.adjoint() * v;
    if (w.rows() == 2) return distance2(Mat2(w));
    Eigen::ComplexEigenSolver<Matrix> es(w, false);
    std::vector<double> phases;
    for (Eigen::Index i = 0; i < w.rows(); ++i) phases.push_back(std::arg(es.eigenvalues()(i)));
    return arc_distance(std::move(phases));
}

bool Weave::canonical() const noexcept {
    int prev = -1;
    for (const Move& m : moves) {
        int idx = -1;
        for (int i = 0; i < 4; ++i) {
            if (kMoves[static_cast<std::size_t>(i)] == m) idx = i;
        }
        if (idx < 0 || cancels(prev, idx)) return false;
        prev = idx;
    }
    return true;
}

BraidWord Weave::to_word() const {
    std::vector<int> letters;
    for (const Move& m : moves) {
        const int letter = m.power > 0 ? m.generator : -m.generator;
        for (int k = 0; k < std::abs(m.power); ++k) letters.push_back(letter);
    }
    return BraidWord(std::move(letters), 3);
}

SectorTarget target_from_matrix(const Matrix& full, std::string name) {
    if (full.rows() != 3 || full.cols() != 3) {
        throw Error(ErrorCode::DimensionMismatch, "three-anyon targets are 3x3");
    }
    if (unitarity_defect(full) > kUnitarityTol) throw Error(ErrorCode::NotUnitary, "target is not unitary");
    for (Eigen::Index s : kTauSector) {
        if (std::abs(full(s, kZeroSector)) > kUnitarityTol || std::abs(full(kZeroSector, s)) > kUnitarityTol) {
            throw Error(ErrorCode::InvalidArgument, "target mixes total-charge sectors");
        }
    }
    return SectorTarget{std::move(name), tau_block(full), full(kZeroSector, kZeroSector)};
}

SectorTarget target_from_word(const BraidWord& word, std::string name) {
    return target_from_matrix(word_unitary(three_anyon_rep(), word), std::move(name));
}

Matrix weave_unitary(const Weave& weave) {
    if (!weave.canonical()) throw Error(ErrorCode::InvalidWeave, "weave is not in canonical form");
    Matrix u = Matrix::Identity(3, 3);
    for (const Move& m : weave.moves) u = move_matrix(m) * u;
    return u;
}

SectorDistances weave_distances(const Weave& weave, const SectorTarget& target) {
    const Matrix u = weave_unitary(weave);
    SectorDistances d;
    d.tau = distance(tau_block(u), target.tau_block);
    d.zero = distance(Matrix::Constant(1, 1, u(kZeroSector, kZeroSector)),
                      Matrix::Constant(1, 1, target.zero_sector));
    return d;
}

CompilationResult search_weave(const SectorTarget& target, const SearchBudget& budget) {
    if (budget.max_moves < 0) throw Error(ErrorCode::InvalidArgument, "max_moves must be nonnegative");
    if (!(budget.target_distance > 0.0)) throw Error(ErrorCode::InvalidArgument, "target_distance must be positive");
    if (target.tau_block.rows() != 2 || target.tau_block.cols() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "tau-sector target must be 2x2");
    }
    if (unitarity_defect(target.tau_block) > kUnitarityTol) {
        throw Error(ErrorCode::NotUnitary, "tau-sector target is not unitary");
    }
    const int workers = std::max(1, budget.worker_partitions);

    SearchTables tables;
    for (std::size_t i = 0; i < kMoves.size(); ++i) tables.tau[i] = Mat2(tau_block(move_matrix(kMoves[i])));
    tables.target_tau_adjoint = Mat2(target.tau_block).adjoint();

    Candidate best;
    std::uint64_t nodes = 0;
    for (int depth = 0; depth <= budget.max_moves; ++depth) {
        std::vector<std::vector<int>> prefixes;
        std::vector<int> scratch;
        canonical_prefixes(std::min(depth, kPrefixLength), scratch, prefixes);

        std::vector<Candidate> worker_best(static_cast<std::size_t>(workers));
        std::vector<std::uint64_t> worker_nodes(static_cast<std::size_t>(workers), 0);
        auto work = [&](int w) {
            SubtreeSearch search(tables, depth);
            for (std::size_t p = static_cast<std::size_t>(w); p < prefixes.size(); p += static_cast<std::size_t>(workers)) {
                search.run(prefixes[p]);
            }
            worker_best[static_cast<std::size_t>(w)] = search.best();
            worker_nodes[static_cast<std::size_t>(w)] = search.nodes();
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::jthread> threads;
            for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
        }
        for (int w = 0; w < workers; ++w) {
            nodes += worker_nodes[static_cast<std::size_t>(w)];
            if (worker_best[static_cast<std::size_t>(w)].better_than(best)) best = worker_best[static_cast<std::size_t>(w)];
        }
        if (best.cost <= budget.target_distance) break;
    }

    CompilationResult result;
    for (int idx : best.moves) result.weave.moves.push_back(kMoves[static_cast<std::size_t>(idx)]);
    result.target_name = target.name;
    result.matrix = weave_unitary(result.weave);
    const SectorDistances d = weave_distances(result.weave, target);
    result.tau_distance = d.tau;
    result.zero_distance = d.zero;
    result.distance = d.cost();
    result.nodes_explored = nodes;
    result.budget_exhausted = best.cost > budget.target_distance;
    return result;
}

Matrix controlled_gate(const Weave& weave) {
    if (!weave.canonical()) throw Error(ErrorCode::InvalidWeave, "weave is not in canonical form");
    const Matrix block = tau_block(weave_unitary(weave));
    Matrix g = Matrix::Zero(4, 4);
    for (int a = 0; a < 2; ++a) {
        g(2 * a, 2 * a) = 1.0;
        for (int a_in = 0; a_in < 2; ++a_in) g(2 * a + 1, 2 * a_in + 1) = block(a, a_in);
    }
    return g;
}

}  // namespace anyonsim
