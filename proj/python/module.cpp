#include "anyonsim/bdg.hpp"
#include "anyonsim/berry.hpp"
#include "anyonsim/braid.hpp"
#include "anyonsim/compiler.hpp"
#include "anyonsim/error.hpp"
#include "anyonsim/fibonacci.hpp"
#include "anyonsim/ising.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace anyonsim;

namespace {

std::optional<Charge> charge_arg(const std::string& text) {
    if (text == "any") return std::nullopt;
    const auto c = parse_charge(text);
    if (!c) throw Error(ErrorCode::MalformedToken, "charge must be 0, t or any");
    return c;
}

Representation rep_arg(const std::string& rep, int n, const std::string& charge) {
    if (rep == "ising") return ising_rep(MajoranaAlgebra(n));
    if (rep == "fibonacci") return fibonacci_rep(n, charge_arg(charge));
    throw Error(ErrorCode::InvalidArgument, "rep must be 'ising' or 'fibonacci'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Core bindings of the anyonsim C++ library";
    m.attr("__version__") = ANYONSIM_VERSION;
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    m.def(
        "check_relations",
        [](const std::string& rep, int n, const std::string& charge, double tol) {
            const RelationReport r = check_relations(rep_arg(rep, n, charge), tol);
            return py::dict(py::arg("max_commutation_defect") = r.max_commutation_defect,
                            py::arg("max_yang_baxter_defect") = r.max_yang_baxter_defect, py::arg("pass") = r.pass);
        },
        py::arg("rep"), py::arg("n"), py::arg("charge") = "any", py::arg("tol") = kDefaultRelationTolerance);

    m.def(
        "ising_unitary",
        [](const std::string& word, int n_majoranas) {
            return Matrix(word_unitary(ising_rep(MajoranaAlgebra(n_majoranas)), parse_word(word, n_majoranas)));
        },
        py::arg("word"), py::arg("n_majoranas") = 4);

    m.def(
        "fusion_distribution",
        [](const std::string& word, const std::string& pairing, std::optional<std::uint64_t> shots,
           std::optional<std::uint64_t> seed) {
            const Pairing p = parse_pairing(pairing);
            const FusionDistribution d =
                braid_then_fuse(parse_word(word, 2 * static_cast<int>(p.size())), p, shots, seed);
            py::dict out;
            out["probabilities"] = d.probabilities;
            if (d.counts) out["counts"] = *d.counts;
            return out;
        },
        py::arg("word"), py::arg("pairing"), py::arg("shots") = py::none(), py::arg("seed") = py::none());

    m.def(
        "enumerate_basis",
        [](int n, const std::string& charge) {
            std::vector<std::string> out;
            const FusionBasis basis = enumerate_basis(n, charge_arg(charge));
            for (const FusionPath& p : basis.paths()) out.push_back(p.to_string());
            return out;
        },
        py::arg("n"), py::arg("charge") = "any");

    m.def(
        "fib_braid",
        [](int n, const std::string& word, const std::string& charge) {
            return Matrix(word_unitary(fibonacci_rep(n, charge_arg(charge)), parse_word(word, n)));
        },
        py::arg("n"), py::arg("word"), py::arg("charge") = "any");

    m.def("block_matrices", [] {
        const BlockMatrices b = block_matrices();
        py::dict out;
        out["u00"] = b.u00;
        out["v00"] = b.v00;
        out["u0t"] = b.u0t;
        out["v0t"] = b.v0t;
        out["ut0"] = b.ut0;
        out["vt0"] = b.vt0;
        out["utt"] = b.utt;
        out["vtt"] = b.vtt;
        out["f"] = f_matrix();
        return out;
    });

    m.def("composite_loop", [] {
        const CompositeLoop c = composite_loop_check();
        return py::make_tuple(c.w_0t, c.w_t0, c.w_tt);
    });

    m.def("distance", [](const Matrix& u, const Matrix& v) { return distance(u, v); });

    m.def(
        "compile_weave",
        [](const std::string& word, int max_moves, double target_distance, int workers) {
            const SectorTarget target = target_from_word(parse_word(word, 3), word);
            const CompilationResult r = search_weave(target, SearchBudget{max_moves, target_distance, workers});
            std::vector<std::pair<int, int>> moves;
            for (const Move& mv : r.weave.moves) moves.emplace_back(mv.generator, mv.power);
            py::dict out;
            out["moves"] = moves;
            out["distance"] = r.distance;
            out["nodes"] = r.nodes_explored;
            out["controlled_gate"] = controlled_gate(r.weave);
            return out;
        },
        py::arg("word") = "1 1 1 1", py::arg("max_moves") = 12, py::arg("target_distance") = 0.02,
        py::arg("workers") = 1);

    m.def(
        "berry_exchange",
        [](int steps, bool mirror) {
            const HolonomyReport r = compare_holonomy(exchange_path(mirror), KatoConfig{steps}, exchange_reference(mirror));
            py::dict out;
            out["distance"] = r.distance;
            out["leakage"] = r.leakage;
            out["ground_block"] = r.ground_block;
            return out;
        },
        py::arg("steps") = 1000, py::arg("mirror") = false);

    m.def(
        "bdg_spectrum",
        [](int sites, double t, double delta, double mu) {
            const SpectrumResult r = chain_spectrum(ChainSpec::uniform(sites, t, delta, mu));
            std::vector<double> near;
            for (const NearZeroMode& z : r.near_zero) near.push_back(z.energy);
            py::dict out;
            out["eigenvalues"] = r.eigenvalues;
            out["ph_defect"] = r.ph_defect;
            out["near_zero"] = near;
            return out;
        },
        py::arg("sites") = 200, py::arg("t") = 1.0, py::arg("delta") = 0.5, py::arg("mu") = 1.0);

    m.def(
        "splitting_scan",
        [](std::vector<int> lengths, double t, double delta, double mu_bar, int buffer) {
            SplittingScanSpec s;
            s.t = t;
            s.delta = delta;
            s.mu_bar = mu_bar;
            s.buffer_sites = buffer;
            s.lengths = std::move(lengths);
            const SplittingResult r = splitting_scan(s);
            std::vector<double> eps;
            for (const SplittingPoint& p : r.points) eps.push_back(p.epsilon);
            py::dict out;
            out["epsilon"] = eps;
            out["xi_fit"] = r.xi_fit;
            out["r_squared"] = r.r_squared;
            return out;
        },
        py::arg("lengths"), py::arg("t") = 1.0, py::arg("delta") = 0.5, py::arg("mu_bar") = 0.05,
        py::arg("buffer") = 100);

    m.def(
        "jr_zero_mode",
        [](double m_bar, double width, double v_f, double half_extent, double spacing) {
            const ZeroMode z = jr_zero_mode(MassProfile::tanh(m_bar, width, half_extent, spacing), v_f);
            return py::make_tuple(z.x, z.density, z.residual);
        },
        py::arg("m_bar") = 1.0, py::arg("width") = 1.0, py::arg("v_f") = 1.0, py::arg("half_extent") = 10.0,
        py::arg("spacing") = 0.01);
}
