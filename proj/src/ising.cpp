#include "anyonsim/ising.hpp"

#include "anyonsim/error.hpp"
#include "anyonsim/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace anyonsim {

namespace {

constexpr double kNormalizationTol = 1e-10;
// Projected norms below this are rounding noise of an exactly forbidden outcome.
constexpr double kProbabilityFloor = 1e-24;

// Annihilator c_j (1-based mode) with its Jordan-Wigner string over modes < j.
Matrix annihilator(int mode, int n_modes) {
    const Eigen::Index dim = Eigen::Index{1} << n_modes;
    Matrix c = Matrix::Zero(dim, dim);
    const std::uint64_t bit = std::uint64_t{1} << (mode - 1);
    const std::uint64_t lower = bit - 1;
    for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(dim); ++s) {
        if (!(s & bit)) continue;
        const double sign = (std::popcount(s & lower) % 2) ? -1.0 : 1.0;
        c(static_cast<Eigen::Index>(s & ~bit), static_cast<Eigen::Index>(s)) = sign;
    }
    return c;
}

std::string outcome_label(std::uint64_t bits, std::size_t n_pairs) {
    std::string label(n_pairs, '0');
    for (std::size_t j = 0; j < n_pairs; ++j) {
        if (bits & (std::uint64_t{1} << j)) label[j] = '1';
    }
    return label;
}

// Sign of the permutation a1 b1 a2 b2 ... of 1..2M.
int pairing_sign(const Pairing& pairing) {
    std::vector<int> perm;
    for (const auto& [a, b] : pairing) {
        perm.push_back(a);
        perm.push_back(b);
    }
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inversions;
        }
    }
    return inversions % 2 ? -1 : 1;
}

void validate_pairing(const Pairing& pairing, int n_majoranas) {
    std::vector<int> seen(static_cast<std::size_t>(n_majoranas) + 1, 0);
    for (const auto& [a, b] : pairing) {
        for (int idx : {a, b}) {
            if (idx < 1 || idx > n_majoranas) {
                throw Error(ErrorCode::NotAMatching, "Majorana index " + std::to_string(idx) + " out of range");
            }
            if (seen[static_cast<std::size_t>(idx)]++) {
                throw Error(ErrorCode::NotAMatching, "Majorana " + std::to_string(idx) + " appears twice");
            }
        }
    }
    if (static_cast<int>(pairing.size()) * 2 != n_majoranas) {
        throw Error(ErrorCode::NotAMatching, "pairing does not cover every Majorana");
    }
}

}  // namespace

MajoranaAlgebra::MajoranaAlgebra(int n_majoranas) : n_majoranas_(n_majoranas), dim_(0) {
    if (n_majoranas < 2 || n_majoranas % 2 != 0) {
        throw Error(ErrorCode::OddCount, "need a positive even number of Majoranas, got " +
                                             std::to_string(n_majoranas));
    }
    if (n_majoranas > kMaxMajoranas) {
        throw Error(ErrorCode::TooLarge, "at most " + std::to_string(kMaxMajoranas) + " Majoranas supported");
    }
    const int m = n_majoranas / 2;
    dim_ = Eigen::Index{1} << m;
    gammas_.reserve(static_cast<std::size_t>(n_majoranas));
    for (int j = 1; j <= m; ++j) {
        const Matrix c = annihilator(j, m);
        const Matrix cd = c.adjoint();
        gammas_.push_back(c + cd);
        gammas_.push_back(-kI * (c - cd));
    }
}

const Matrix& MajoranaAlgebra::gamma(int i) const {
    if (i < 1 || i > n_majoranas_) throw Error(ErrorCode::IndexOutOfRange, "no Majorana " + std::to_string(i));
    return gammas_[static_cast<std::size_t>(i - 1)];
}

Matrix MajoranaAlgebra::pair_parity(int a, int b) const { return -kI * gamma(a) * gamma(b); }

Matrix MajoranaAlgebra::mode_parity(int j) const { return pair_parity(2 * j - 1, 2 * j); }

Matrix MajoranaAlgebra::total_parity() const {
    Matrix p = Matrix::Identity(dim_, dim_);
    for (int j = 1; j <= n_modes(); ++j) p = p * mode_parity(j);
    return p;
}

MajoranaAlgebra build_algebra(int n_majoranas) { return MajoranaAlgebra(n_majoranas); }

Representation ising_rep(const MajoranaAlgebra& alg) {
    const Matrix id = Matrix::Identity(alg.dim(), alg.dim());
    std::vector<Matrix> gens;
    for (int j = 1; j < alg.n_majoranas(); ++j) {
        gens.push_back((id - alg.gamma(j) * alg.gamma(j + 1)) / std::sqrt(2.0));
    }
    return Representation("ising", alg.n_majoranas(), std::move(gens));
}

Matrix LogicalEncoding::restrict(const Matrix& op) const {
    Matrix block(2, 2);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) block(r, c) = op(sector_basis[r], sector_basis[c]);
    }
    return block;
}

Vector LogicalEncoding::embed(const Vector& logical) const {
    if (logical.size() != 2) throw Error(ErrorCode::DimensionMismatch, "logical state must have 2 entries");
    Vector state = Vector::Zero(algebra.dim());
    state(sector_basis[0]) = logical(0);
    state(sector_basis[1]) = logical(1);
    return state;
}

LogicalEncoding logical_encoding(const MajoranaAlgebra& alg) {
    if (alg.n_majoranas() != 4) {
        throw Error(ErrorCode::WrongSize, "the logical qubit needs exactly 4 Majoranas");
    }
    LogicalEncoding enc{alg, {0, 3}, Matrix(), Matrix()};
    enc.sigma_z = enc.restrict(alg.pair_parity(1, 2));
    enc.sigma_x = enc.restrict(alg.pair_parity(2, 3));
    return enc;
}

Pairing parse_pairing(std::string_view text) {
    Pairing pairing;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto read_int = [&]() -> int {
        skip_space();
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (start == pos) throw Error(ErrorCode::NotAMatching, "expected an index in '" + std::string(text) + "'");
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    auto expect = [&](char ch) {
        skip_space();
        if (pos >= text.size() || text[pos] != ch) {
            throw Error(ErrorCode::NotAMatching, std::string("expected '") + ch + "' in '" + std::string(text) + "'");
        }
        ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        expect('(');
        const int a = read_int();
        expect(',');
        const int b = read_int();
        expect(')');
        pairing.emplace_back(a, b);
        skip_space();
    }
    if (pairing.empty()) throw Error(ErrorCode::NotAMatching, "empty pairing");
    std::vector<int> seen;
    for (const auto& [a, b] : pairing) {
        for (int i : {a, b}) {
            if (std::find(seen.begin(), seen.end(), i) != seen.end()) {
                throw Error(ErrorCode::NotAMatching, "index " + std::to_string(i) + " appears twice");
            }
            seen.push_back(i);
        }
    }
    return pairing;
}

std::string format_pairing(const Pairing& pairing) {
    std::ostringstream os;
    for (const auto& [a, b] : pairing) os << '(' << a << ',' << b << ')';
    return os.str();
}

std::vector<Matrix> fusion_parities(const MajoranaAlgebra& alg, const Pairing& pairing) {
    validate_pairing(pairing, alg.n_majoranas());
    std::vector<Matrix> parities;
    for (const auto& [a, b] : pairing) parities.push_back(alg.pair_parity(a, b));
    if (pairing_sign(pairing) < 0) parities.back() *= -1.0;
    return parities;
}

FusionDistribution fusion_distribution(const MajoranaAlgebra& alg, const Vector& state, const Pairing& pairing,
                                       std::optional<std::uint64_t> shots, std::optional<std::uint64_t> seed) {
    if (state.size() != alg.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state dimension does not match the algebra");
    }
    if (std::abs(state.norm() - 1.0) > kNormalizationTol) {
        throw Error(ErrorCode::NotNormalized, "state norm is " + std::to_string(state.norm()));
    }
    const std::vector<Matrix> parities = fusion_parities(alg, pairing);
    const Matrix id = Matrix::Identity(alg.dim(), alg.dim());
    const std::size_t n_pairs = parities.size();

    FusionDistribution dist;
    dist.pairing = pairing;
    std::vector<double> probs;
    std::vector<std::string> labels;
    double total = 0.0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n_pairs); ++bits) {
        Vector projected = state;
        for (std::size_t j = 0; j < n_pairs; ++j) {
            const double sign = (bits & (std::uint64_t{1} << j)) ? -1.0 : 1.0;
            projected = 0.5 * (id + sign * parities[j]) * projected;
        }
        double p = projected.squaredNorm();
        if (p < kProbabilityFloor) p = 0.0;
        total += p;
        probs.push_back(p);
        labels.push_back(outcome_label(bits, n_pairs));
    }
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] /= total;
        dist.probabilities[labels[i]] = probs[i];
    }
    if (shots) {
        dist.seed = seed.value_or(0);
        dist.sampler = std::string(kSamplerAlgorithm);
        const auto counts = sample_counts(probs, *shots, *dist.seed);
        std::map<std::string, std::uint64_t> by_label;
        for (std::size_t i = 0; i < counts.size(); ++i) by_label[labels[i]] = counts[i];
        dist.counts = std::move(by_label);
    }
    return dist;
}

std::vector<int> final_positions(const BraidWord& word) {
    std::vector<int> at(static_cast<std::size_t>(word.n_strands));
    std::iota(at.begin(), at.end(), 1);
    for (int letter : word.letters) {
        const auto k = static_cast<std::size_t>(std::abs(letter));
        std::swap(at[k - 1], at[k]);
    }
    std::vector<int> pos(at.size());
    for (std::size_t i = 0; i < at.size(); ++i) pos[static_cast<std::size_t>(at[i] - 1)] = static_cast<int>(i) + 1;
    return pos;
}

FusionDistribution braid_then_fuse(const BraidWord& word, const Pairing& pairing, std::optional<std::uint64_t> shots,
                                   std::optional<std::uint64_t> seed) {
    const MajoranaAlgebra alg(word.n_strands);
    const Representation rep = ising_rep(alg);
    Vector vacuum = Vector::Zero(alg.dim());
    vacuum(0) = 1.0;
    const Vector state = word_unitary(rep, word) * vacuum;
    const std::vector<int> pos = final_positions(word);
    Pairing located;
    for (const auto& [a, b] : pairing) {
        if (a < 1 || b < 1 || a > word.n_strands || b > word.n_strands) {
            throw Error(ErrorCode::NotAMatching, "pairing label outside 1.." + std::to_string(word.n_strands));
        }
        const int pa = pos[static_cast<std::size_t>(a - 1)];
        const int pb = pos[static_cast<std::size_t>(b - 1)];
        located.emplace_back(std::min(pa, pb), std::max(pa, pb));
    }
    FusionDistribution d = fusion_distribution(alg, state, located, shots, seed);
    d.pairing = pairing;
    return d;
}

}  // namespace anyonsim
