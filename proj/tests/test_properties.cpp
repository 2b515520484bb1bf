#include "anyonsim/bdg.hpp"
#include "anyonsim/compiler.hpp"
#include "anyonsim/fibonacci.hpp"
#include "anyonsim/ising.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <numeric>

using namespace anyonsim;
using testutil::max_abs;

namespace {

BraidWord random_word(std::mt19937_64& rng, int n_strands, int length) {
    std::uniform_int_distribution<int> gen(1, n_strands - 1);
    std::bernoulli_distribution sign(0.5);
    std::vector<int> letters;
    for (int i = 0; i < length; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return BraidWord(letters, n_strands);
}

Pairing random_pairing(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    Pairing p;
    for (std::size_t i = 0; i < perm.size(); i += 2) p.emplace_back(perm[i], perm[i + 1]);
    return p;
}

}  // namespace

TEST_CASE("fusion outcomes respect parity superselection") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 * (2 + trial % 3);
        const BraidWord w = random_word(rng, n, 1 + trial % 9);
        const Pairing p = random_pairing(rng, n);
        const FusionDistribution d = braid_then_fuse(w, p);
        double total = 0.0;
        for (const auto& [bits, prob] : d.probabilities) {
            total += prob;
            CHECK(prob >= 0.0);
            if (std::count(bits.begin(), bits.end(), '1') % 2 == 1) CHECK(prob < 1e-20);
        }
        CHECK(std::abs(total - 1.0) < 1e-12);
    }
}

TEST_CASE("Ising generators have order eight") {
    for (int n = 2; n <= 10; n += 2) {
        const MajoranaAlgebra alg(n);
        const Representation rep = ising_rep(alg);
        const Matrix id = Matrix::Identity(rep.dim(), rep.dim());
        for (int j = 1; j < n; ++j) {
            Matrix b = rep.generator(j);
            Matrix p = b * b;
            p = p * p;
            CHECK(max_abs(p + id) < 1e-12);
            CHECK(max_abs(p * p - id) < 1e-12);
        }
    }
}

TEST_CASE("braid relations hold in every supported size") {
    for (int n = 2; n <= 10; n += 2) {
        const RelationReport r = check_relations(ising_rep(MajoranaAlgebra(n)));
        CHECK(r.pass);
    }
    for (int n = 2; n <= 8; ++n) {
        for (const auto charge : {std::optional<Charge>{}, std::optional<Charge>{Charge::Vacuum},
                                  std::optional<Charge>{Charge::Tau}}) {
            const Representation rep = fibonacci_rep(n, charge);
            if (rep.dim() == 0) continue;
            CHECK(check_relations(rep).pass);
        }
    }
}

TEST_CASE("random words act unitarily and sparse matches dense") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 5;
        const BraidWord w = random_word(rng, n, 12);
        const Representation rep = fibonacci_rep(n);
        const Matrix u = word_unitary(rep, w);
        CHECK(unitarity_defect(u) < 1e-12);
        const FibonacciAction act(enumerate_basis(n));
        const Vector e0 = Vector::Unit(u.rows(), trial % u.rows());
        CHECK((act.apply_word(w, e0) - u * e0).norm() < 1e-12);
        const Matrix back = word_unitary(rep, inverse(w)) * u;
        CHECK(max_abs(back - Matrix::Identity(u.rows(), u.rows())) < 1e-12);
    }
}

TEST_CASE("distance is a pseudo-metric on projective unitaries") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 2 + trial % 2;
        const Matrix a = testutil::random_unitary(n, rng);
        const Matrix b = testutil::random_unitary(n, rng);
        const Matrix c = testutil::random_unitary(n, rng);
        const double ab = distance(a, b);
        CHECK(ab >= 0.0);
        CHECK(ab <= 2.0 + 1e-12);
        CHECK(std::abs(ab - distance(b, a)) < 1e-12);
        CHECK(distance(a, std::polar(1.0, phase(rng)) * a) < 1e-7);
        CHECK(std::abs(distance(std::polar(1.0, phase(rng)) * a, b) - ab) < 1e-10);
        CHECK(distance(a, c) <= ab + distance(b, c) + 1e-10);
    }
}

TEST_CASE("weave search does not depend on the worker count") {
    const SectorTarget t = target_from_word(parse_word("1 2", 3), "1 2");
    SearchBudget b;
    b.max_moves = 8;
    b.target_distance = 1e-6;
    b.worker_partitions = 1;
    const CompilationResult r1 = search_weave(t, b);
    for (int w : {2, 3, 8}) {
        b.worker_partitions = w;
        const CompilationResult r = search_weave(t, b);
        CHECK(r.weave == r1.weave);
        CHECK(r.distance == r1.distance);
        CHECK(r.nodes_explored == r1.nodes_explored);
    }
}

TEST_CASE("BdG spectra are particle-hole symmetric") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        ChainSpec s;
        s.t = 0.5 + 0.1 * trial;
        s.delta = 0.05 * trial;
        for (int i = 0; i < 30 + trial; ++i) s.mu.push_back(u(rng));
        const SpectrumResult r = chain_spectrum(s);
        CHECK(r.ph_defect < 1e-10);
        CHECK(r.near_zero.size() % 2 == 0);
    }
}
