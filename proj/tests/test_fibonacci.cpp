#include "anyonsim/fibonacci.hpp"

#include "test_util.hpp"

#include <functional>

using namespace anyonsim;
using testutil::max_abs;

namespace {

const cplx w = -std::polar(1.0, 2.0 * kPi / 5.0);
const double phi = (1.0 + std::sqrt(5.0)) / 2.0;

// Counts label strings f_0 ... f_N over {0, t} by brute force: f_0 = 0 and
// f_j must lie in f_{j-1} x t (0 x t = t, t x t = 0 + t).
std::pair<std::uint64_t, std::uint64_t> brute_force_counts(int n) {
    std::uint64_t z = 0;
    std::uint64_t t = 0;
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
        bool ok = true;
        bool prev_tau = false;
        for (int j = 0; j < n && ok; ++j) {
            const bool tau = (bits >> j) & 1ULL;
            if (!prev_tau && !tau) ok = false;
            prev_tau = tau;
        }
        if (!ok) continue;
        (prev_tau ? t : z) += 1;
    }
    return {z, t};
}

Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST_CASE("charge and path text") {
    CHECK(parse_charge("0") == Charge::Vacuum);
    CHECK(parse_charge("tau") == Charge::Tau);
    CHECK(parse_charge("t") == Charge::Tau);
    CHECK_FALSE(parse_charge("1").has_value());
    CHECK(FusionPath::parse("0ttt").to_string() == "0ttt");
    CHECK(FusionPath::parse("0ttt").n_anyons() == 3);
    REQUIRE_CODE(FusionPath::parse("0x"), MalformedToken);
    REQUIRE_CODE(FusionPath::parse("0t00"), InvalidArgument);
}

TEST_CASE("three-anyon qubit basis") {
    const FusionBasis b = enumerate_basis(3, Charge::Tau);
    REQUIRE(b.size() == 2);
    CHECK(b.paths()[0].to_string() == "0t0t");
    CHECK(b.paths()[1].to_string() == "0ttt");
    CHECK(b.index_of(FusionPath::parse("0ttt")) == std::optional<std::size_t>(1));
    CHECK_FALSE(b.index_of(FusionPath::parse("0tt0")).has_value());
    const FusionBasis all = enumerate_basis(3);
    REQUIRE(all.size() == 3);
    CHECK(all.paths()[1].to_string() == "0tt0");
}

TEST_CASE("basis sizes match brute-force enumeration") {
    for (int n = 1; n <= 16; ++n) {
        const auto [z, t] = brute_force_counts(n);
        CHECK(basis_counts(n) == std::make_pair(z, t));
        CHECK(enumerate_basis(n, Charge::Vacuum).size() == z);
        CHECK(enumerate_basis(n, Charge::Tau).size() == t);
    }
    REQUIRE_CODE(enumerate_basis(25), TooLarge);
}

TEST_CASE("local braid rules") {
    const Charge z = Charge::Vacuum;
    const Charge t = Charge::Tau;
    auto single = [](const LocalAction& a, Charge label, cplx value) {
        REQUIRE(a.n_terms == 1);
        CHECK(a.terms[0].first == label);
        CHECK(std::abs(a.terms[0].second - value) < 1e-15);
    };
    single(local_braid_action(z, t, t), t, 1.0 / w);
    single(local_braid_action(t, t, z), t, 1.0 / w);
    single(local_braid_action(z, t, z), t, 1.0 / (w * w));
    const LocalAction a = local_braid_action(t, z, t);
    REQUIRE(a.n_terms == 2);
    CHECK(std::abs(a.terms[0].second - w * w / phi) < 1e-15);
    CHECK(std::abs(a.terms[1].second - w / std::sqrt(phi)) < 1e-15);
    const LocalAction b = local_braid_action(t, t, t);
    REQUIRE(b.n_terms == 2);
    CHECK(std::abs(b.terms[0].second - w / std::sqrt(phi)) < 1e-15);
    CHECK(std::abs(b.terms[1].second + 1.0 / phi) < 1e-15);
}

TEST_CASE("block matrices match the closed-form entries") {
    const BlockMatrices b = block_matrices();
    const double ip = 1.0 / phi;
    const double isp = 1.0 / std::sqrt(phi);
    const Matrix u0t = mat2(1.0 / (w * w), 0.0, 0.0, 1.0 / w);
    const Matrix v0t = mat2(ip * w * w, isp * w, isp * w, -ip);
    Matrix utt(3, 3), vtt(3, 3);
    utt << ip * w * w, 0.0, isp * w, 0.0, 1.0 / w, 0.0, isp * w, 0.0, -ip;
    vtt << 1.0 / w, 0.0, 0.0, 0.0, ip * w * w, isp * w, 0.0, isp * w, -ip;
    CHECK(std::abs(b.u00(0, 0) - 1.0 / w) < 1e-12);
    CHECK(std::abs(b.v00(0, 0) - 1.0 / w) < 1e-12);
    CHECK(max_abs(b.u0t - u0t) < 1e-12);
    CHECK(max_abs(b.v0t - v0t) < 1e-12);
    CHECK(max_abs(b.ut0 - v0t) < 1e-12);
    CHECK(max_abs(b.vt0 - u0t) < 1e-12);
    CHECK(max_abs(b.utt - utt) < 1e-12);
    CHECK(max_abs(b.vtt - vtt) < 1e-12);
    const Matrix f = f_matrix();
    CHECK(max_abs(f * f - Matrix::Identity(2, 2)) < 1e-15);
    CHECK(max_abs(f * b.u0t * f - b.v0t) < 1e-12);
}

TEST_CASE("qubit gates are 252 degree rotations") {
    const QubitGates g = qubit_gates();
    CHECK(std::abs(g.u_axis_angle.angle * 180.0 / kPi - 252.0) < 1e-9);
    CHECK((g.u_axis_angle.axis - Eigen::Vector3d::UnitZ()).norm() < 1e-12);
    CHECK(std::abs(g.u_axis_angle.global_phase + kPi / 10.0) < 1e-12);
    const Eigen::Vector3d v(2.0 * std::pow(phi, -1.5), 0.0, std::pow(phi, -2.0) - 1.0 / phi);
    CHECK(std::abs(g.v_axis_angle.angle * 180.0 / kPi - 252.0) < 1e-9);
    CHECK(g.v_axis_angle.axis.cross(v.normalized()).norm() < 1e-9);
    CHECK(g.v_axis_angle.axis.dot(v) > 0.0);
}

TEST_CASE("fourth power of the first braid") {
    const Matrix u = block_matrices().u0t;
    const Matrix u4 = u * u * u * u;
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = std::polar(1.0, 4.0 * kPi / 5.0);
    expected(1, 1) = std::polar(1.0, 2.0 * kPi / 5.0);
    CHECK(max_abs(u4 - expected) < 1e-12);
}

TEST_CASE("composite object around a third anyon") {
    const CompositeLoop c = composite_loop_check();
    CHECK(std::abs(c.w_0t - 1.0) < 1e-12);
    CHECK(std::abs(c.w_t0 - std::pow(w, -4)) < 1e-12);
    CHECK(std::abs(c.w_tt - std::pow(w, -2)) < 1e-12);
    CHECK(c.off_diagonal < 1e-12);
}

TEST_CASE("sparse action agrees with dense generators") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 8; ++n) {
        for (auto filter : {std::optional<Charge>{}, std::optional<Charge>{Charge::Tau}}) {
            const Representation rep = fibonacci_rep(n, filter);
            const FibonacciAction act(enumerate_basis(n, filter));
            std::uniform_int_distribution<int> pick(1, n - 1);
            std::vector<int> letters;
            for (int i = 0; i < 12; ++i) letters.push_back(pick(rng) * (i % 3 == 0 ? -1 : 1));
            const BraidWord word(letters, n);
            Vector psi = Vector::Random(rep.dim());
            psi.normalize();
            CHECK((act.apply_word(word, psi) - word_unitary(rep, word) * psi).norm() < 1e-12);
        }
    }
    REQUIRE_CODE(fibonacci_rep(11), TooLarge);
}
