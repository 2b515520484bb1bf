#include "anyonsim/cli.hpp"

#include "anyonsim/bdg.hpp"
#include "anyonsim/berry.hpp"
#include "anyonsim/braid.hpp"
#include "anyonsim/compiler.hpp"
#include "anyonsim/error.hpp"
#include "anyonsim/fibonacci.hpp"
#include "anyonsim/ising.hpp"
#include "anyonsim/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

namespace anyonsim::cli {

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::string output;
    std::string format = "json";
};

struct Outcome {
    json parameters = json::object();
    json results = json::object();
    std::optional<CsvTable> csv;
};

using Handler = std::function<Outcome(const Globals&)>;

bool is_usage_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedToken:
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::NotAMatching:
        case ErrorCode::OddCount:
        case ErrorCode::TooLarge:
        case ErrorCode::WrongSize:
        case ErrorCode::InvalidPath:
        case ErrorCode::InvalidArgument:
            return true;
        default:
            return false;
    }
}

std::optional<Charge> charge_filter(const std::string& text) {
    if (text == "any") return std::nullopt;
    const auto c = parse_charge(text);
    if (!c) throw Error(ErrorCode::MalformedToken, "charge must be 0, vacuum, t, tau or any");
    return c;
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
    return out;
}

void add_relations(CLI::App& app, Handler& handler) {
    auto* sub = app.add_subcommand("relations",
                                   "Check far commutation and the Yang-Baxter relation for the Ising (Majorana) "
                                   "or Fibonacci braid representation.");
    auto rep = std::make_shared<std::string>();
    auto anyons = std::make_shared<int>(4);
    auto charge = std::make_shared<std::string>("any");
    auto tol = std::make_shared<double>(kDefaultRelationTolerance);
    sub->add_option("--rep", *rep, "ising | fibonacci | abelian")->required()->check(
        CLI::IsMember({"ising", "fibonacci", "abelian"}));
    sub->add_option("--anyons", *anyons, "number of strands (Majoranas for ising)")->capture_default_str();
    sub->add_option("--charge", *charge, "fibonacci total charge filter: 0 | t | any")->capture_default_str();
    sub->add_option("--tol", *tol, "pass tolerance on the operator-norm defects")->capture_default_str();
    sub->callback([=, &handler] {
        handler = [=](const Globals&) {
            Outcome o;
            o.parameters = {{"rep", *rep}, {"anyons", *anyons}, {"charge", *charge}, {"tol", *tol}};
            std::optional<Representation> r;
            if (*rep == "ising") {
                r = ising_rep(MajoranaAlgebra(*anyons));
            } else if (*rep == "fibonacci") {
                r = fibonacci_rep(*anyons, charge_filter(*charge));
            } else {
                r = abelian_rep(kPi / 8.0, *anyons);
            }
            o.results = to_json(check_relations(*r, *tol));
            o.results["dim"] = r->dim();
            return o;
        };
    });
}

void add_ising_braid(CLI::App& app, Handler& handler) {
    auto* sub = app.add_subcommand("ising-braid",
                                   "Apply a braid word to Majorana zero modes split out of the vacuum; reports the "
                                   "braid unitary, the final state and, for four Majoranas, the logical-qubit gate.");
    auto word = std::make_shared<std::string>();
    auto n = std::make_shared<int>(4);
    sub->add_option("--word", *word, "braid word, e.g. \"1 -2 1\"")->required();
    sub->add_option("--majoranas", *n, "number of Majoranas (even)")->capture_default_str();
    sub->callback([=, &handler] {
        handler = [=](const Globals&) {
            Outcome o;
            o.parameters = {{"word", *word}, {"majoranas", *n}};
            const MajoranaAlgebra alg(*n);
            const BraidWord w = parse_word(*word, *n);
            const Matrix u = word_unitary(ising_rep(alg), w);
            Vector vac = Vector::Zero(alg.dim());
            vac(0) = 1.0;
            const Vector state = u * vac;
            o.results = {{"unitary", to_json(u)}, {"state", vector_json(state)}};
            json parities = json::array();
            for (int j = 1; j <= alg.n_modes(); ++j) {
                parities.push_back(state.dot(alg.mode_parity(j) * state).real());
            }
            o.results["mode_parities"] = parities;
            if (*n == 4) o.results["logical"] = to_json(logical_encoding(alg).restrict(u));
            return o;
        };
    });
}

void add_ising_fuse(CLI::App& app, Handler& handler) {
    auto* sub = app.add_subcommand("ising-fuse",
                                   "Braid Majoranas created pairwise from the vacuum and fuse them in a chosen "
                                   "pairing; exact outcome probabilities plus optional seeded shot counts.");
    auto word = std::make_shared<std::string>();
    auto pairing = std::make_shared<std::string>();
    auto shots = std::make_shared<std::optional<std::uint64_t>>();
    auto shots_value = std::make_shared<std::uint64_t>(0);
    sub->add_option("--word", *word, "braid word applied before fusion (may be empty)");
    sub->add_option("--pairing", *pairing, "fusion pairing, e.g. \"(1,3)(2,4)\"")->required();
    auto* shots_opt = sub->add_option("--shots", *shots_value, "number of sampled measurements");
    sub->callback([=, &handler] {
        if (shots_opt->count() > 0) *shots = *shots_value;
        handler = [=](const Globals& g) {
            Outcome o;
            o.parameters = {{"word", *word}, {"pairing", *pairing}};
            if (*shots) o.parameters["shots"] = **shots;
            const Pairing p = parse_pairing(*pairing);
            const int n = 2 * static_cast<int>(p.size());
            const BraidWord w = parse_word(*word, n);
            o.results = to_json(braid_then_fuse(w, p, *shots, *shots ? std::optional<std::uint64_t>(g.seed)
                                                                    : std::nullopt));
            return o;
        };
    });
}

void add_fib_basis(CLI::App& app, Handler& handler) {
    auto* sub = app.add_subcommand("fib-basis",
                                   "Enumerate the Fibonacci fusion-tree basis of N anyons, optionally restricted "
                                   "to a total charge; the dimensions follow the Fibonacci numbers.");
    auto anyons = std::make_shared<int>(3);
    auto charge = std::make_shared<std::string>("any");
    auto list = std::make_shared<bool>(true);
    sub->add_option("--anyons", *anyons, "number of anyons")->required();
    sub->add_option("--charge", *charge, "total charge: 0 | t | any")->capture_default_str();
    sub->add_flag("--no-paths{false}", *list, "only report counts");
    sub->callback([=, &handler] {
        handler = [=](const Globals&) {
            Outcome o;
            o.parameters = {{"anyons", *anyons}, {"charge", *charge}, {"paths", *list}};
            const FusionBasis b = enumerate_basis(*anyons, charge_filter(*charge));
            const auto [z, t] = basis_counts(*anyons);
            o.results = {{"count", b.size()}, {"counts", {{"vacuum", z}, {"tau", t}}}};
            if (*list) {
                json paths = json::array();
                for (const FusionPath& fp : b.paths()) paths.push_back(fp.to_string());
                o.results["paths"] = paths;
            }
            return o;
        };
    });
}

void add_fib_braid(CLI::App& app, Handler& handler) {
    auto* sub = app.add_subcommand("fib-braid",
                                   "Braid Fibonacci anyons in the fusion-tree basis using the local braid rules; "
                                   "reports the final amplitudes and optionally the dense braid matrix.");
    auto anyons = std::make_shared<int>(3);
    auto word = std::make_shared<std::string>();
    auto charge = std::make_shared<std::string>("any");
    auto initial = std::make_shared<std::string>();
    auto matrix = std::make_shared<bool>(false);
    sub->add_option("--anyons", *anyons, "number of anyons")->required();
    sub->add_option("--word", *word, "braid word")->required();
    sub->add_option("--charge", *charge, "total charge: 0 | t | any")->capture_default_str();
    sub->add_option("--initial", *initial, "initial fusion path, e.g. 0t0t (default: first basis path)");
    sub->add_flag("--matrix", *matrix, "also print the dense braid matrix");
    sub->callback([=, &handler] {
        handler = [=](const Globals&) {
            Outcome o;
            o.parameters = {{"anyons", *anyons}, {"word", *word}, {"charge", *charge}, {"initial", *initial},
                            {"matrix", *matrix}};
            const BraidWord w = parse_word(*word, *anyons);
            const FibonacciAction act(enumerate_basis(*anyons, charge_filter(*charge)));
            const FusionBasis& b = act.basis();
            std::size_t start = 0;
            if (!initial->empty()) {
                const auto idx = b.index_of(FusionPath::parse(*initial));
                if (!idx) throw Error(ErrorCode::InvalidArgument, "initial path is not in the basis");
                start = *idx;
            }
            Vector psi = Vector::Zero(static_cast<Eigen::Index>(b.size()));
            psi(static_cast<Eigen::Index>(start)) = 1.0;
            const Vector out = act.apply_word(w, psi);
            json amps = json::object();
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (std::abs(out(static_cast<Eigen::Index>(i))) > 0.0) {
                    amps[b.paths()[i].to_string()] = to_json(out(static_cast<Eigen::Index>(i)));
                }
            }
            o.results = {{"initial", b.paths()[start].to_string()}, {"amplitudes", amps}};
            if (*matrix) {
                o.results["matrix"] = to_json(word_unitary(fibonacci_rep(*anyons, charge_filter(*charge)), w));
            }
            return o;
        };
    });
}

void add_compile_weave(CLI::App& app, Handler& handler) {
    auto* sub = app.add_subcommand("compile-weave",
                                   "Brute-force search for a weave (one mobile Fibonacci anyon looping around two "
                                   "static ones) approximating a target braid, and the controlled gate it yields.");
    auto word = std::make_shared<std::string>("1 1 1 1");
    auto name = std::make_shared<std::string>();
    auto budget = std::make_shared<SearchBudget>();
    auto cache = std::make_shared<std::string>();
    sub->add_option("--word", *word, "target braid word on three anyons")->capture_default_str();
    sub->add_option("--name", *name, "target label (default B1^4 for the default word, else the word)");
    sub->add_option("--max-moves", budget->max_moves, "maximum number of weave moves")->capture_default_str();
    sub->add_option("--target-distance", budget->target_distance, "stop deepening below this distance")
        ->capture_default_str();
    sub->add_option("--workers", budget->worker_partitions, "search threads")->capture_default_str()->check(
        CLI::PositiveNumber);
    sub->add_option("--cache", *cache, "JSON cache file keyed by target and budget");
    sub->callback([=, &handler] {
        handler = [=](const Globals&) {
            Outcome o;
            const std::string label = !name->empty() ? *name : (*word == "1 1 1 1" ? "B1^4" : *word);
            o.parameters = {{"word", *word},
                            {"name", label},
                            {"max_moves", budget->max_moves},
                            {"target_distance", budget->target_distance},
                            {"workers", budget->worker_partitions},
                            {"cache", *cache}};
            const SectorTarget target = target_from_word(parse_word(*word, 3), label);
            std::optional<CompilationResult> result;
            bool hit = false;
            CompilationCache store;
            const std::string key = cache_key(target, *budget);
            if (!cache->empty()) {
                store = CompilationCache::load(*cache);
                result = store.lookup(key, target);
                hit = result.has_value();
            }
            if (!result) result = search_weave(target, *budget);
            if (!cache->empty() && !hit) {
                store.store(key, *result);
                store.save(*cache);
            }
            o.results = to_json(*result);
            o.results["cache_hit"] = hit;
            o.results["controlled_gate"] = to_json(controlled_gate(result->weave));
            return o;
        };
    });
}

void add_berry_exchange(CLI::App& app, Handler& handler) {
    auto* sub = app.add_subcommand("berry-exchange",
                                   "Adiabatic transport of Majorana zero modes around a Y junction by integrating "
                                   "the Kato generator; compares the holonomy with the Ising exchange operator.");
    auto steps = std::make_shared<int>(1000);
    auto mirror = std::make_shared<bool>(false);
    auto single = std::make_shared<bool>(false);
    auto path_file = std::make_shared<std::string>();
    sub->add_option("--steps", *steps, "discretization steps per leg")->capture_default_str();
    sub->add_flag("--mirror", *mirror, "mirrored junction (opposite exchange orientation)");
    sub->add_flag("--single-move", *single, "only move the zero mode from leg 1 to leg 3");
    sub->add_option("--path", *path_file, "custom coupling path (JSON); no analytic reference");
    sub->callback([=, &handler] {
        handler = [=](const Globals&) {
            Outcome o;
            o.parameters = {{"steps", *steps}, {"mirror", *mirror}, {"single_move", *single}, {"path", *path_file}};
            KatoConfig cfg{*steps};
            if (!path_file->empty()) {
                std::ifstream in(*path_file);
                if (!in) throw Error(ErrorCode::InvalidPath, "cannot read " + *path_file);
                json spec;
                try {
                    spec = json::parse(in);
                } catch (const json::exception& e) {
                    throw Error(ErrorCode::InvalidPath, e.what());
                }
                const CouplingPath p = path_from_json(spec, cfg);
                const HolonomyReport r = compare_holonomy(p, cfg, Matrix::Identity(4, 4));
                o.results = {{"path", to_json(p)},
                             {"steps_per_leg", cfg.steps_per_leg},
                             {"closed", p.closed()},
                             {"min_gap", p.min_gap()},
                             {"leakage", r.leakage},
                             {"ground_block", to_json(r.ground_block)},
                             {"unitary", to_json(r.unitary)}};
                return o;
            }
            const CouplingPath p = *single ? single_move_path() : exchange_path(*mirror);
            const Matrix ref = *single ? single_move_reference() : exchange_reference(*mirror);
            const HolonomyReport r = compare_holonomy(p, cfg, ref);
            o.results = to_json(r);
            o.results["path"] = to_json(p);
            o.results["steps_per_leg"] = cfg.steps_per_leg;
            o.results["min_gap"] = p.min_gap();
            if (!*single) {
                const Matrix& g1 = junction_gamma(1);
                const Matrix& g2 = junction_gamma(2);
                const double s = *mirror ? -1.0 : 1.0;
                o.results["gamma1_to_gamma2_defect"] = op_norm(r.unitary * g1 * r.unitary.adjoint() - s * g2);
                o.results["gamma2_to_minus_gamma1_defect"] = op_norm(r.unitary * g2 * r.unitary.adjoint() + s * g1);
            }
            return o;
        };
    });
}

void add_bdg_spectrum(CLI::App& app, Handler& handler) {
    auto* sub = app.add_subcommand("bdg-spectrum",
                                   "Diagonalize the Bogoliubov-de Gennes matrix of an open Kitaev chain and report "
                                   "the particle-hole symmetric spectrum and the Majorana end modes.");
    auto sites = std::make_shared<int>(200);
    auto t = std::make_shared<double>(1.0);
    auto delta = std::make_shared<double>(0.5);
    auto mu = std::make_shared<double>(1.0);
    auto tol = std::make_shared<double>(1e-6);
    sub->add_option("--sites", *sites, "chain length")->capture_default_str();
    sub->add_option("--t", *t, "hopping")->capture_default_str();
    sub->add_option("--delta", *delta, "p-wave pairing")->capture_default_str();
    sub->add_option("--mu", *mu, "chemical potential above the band bottom")->capture_default_str();
    sub->add_option("--zero-tol", *tol, "near-zero threshold in units of t")->capture_default_str();
    sub->callback([=, &handler] {
        handler = [=](const Globals&) {
            Outcome o;
            o.parameters = {{"sites", *sites}, {"t", *t}, {"delta", *delta}, {"mu", *mu}, {"zero_tol", *tol}};
            const ChainSpec spec = ChainSpec::uniform(*sites, *t, *delta, *mu);
            o.results = to_json(chain_spectrum(spec, *tol));
            o.results["decay_length"] = kitaev_decay_length(*t, *delta, *mu);
            return o;
        };
    });
}

void add_bdg_splitting(CLI::App& app, Handler& handler) {
    auto* sub = app.add_subcommand("bdg-splitting",
                                   "Energy splitting of two Majorana modes at the ends of a topological segment of "
                                   "length d embedded in vacuum, with an exponential fit of the envelope.");
    auto spec = std::make_shared<SplittingScanSpec>();
    auto d_min = std::make_shared<int>(40);
    auto d_max = std::make_shared<int>(200);
    auto d_step = std::make_shared<int>(10);
    sub->add_option("--t", spec->t, "hopping")->capture_default_str();
    sub->add_option("--delta", spec->delta, "p-wave pairing")->capture_default_str();
    sub->add_option("--mu-bar", spec->mu_bar, "|mu| inside (+) and outside (-) the segment")->capture_default_str();
    sub->add_option("--buffer", spec->buffer_sites, "trivial sites on each side")->capture_default_str();
    sub->add_option("--d-min", *d_min, "shortest segment")->capture_default_str();
    sub->add_option("--d-max", *d_max, "longest segment")->capture_default_str();
    sub->add_option("--d-step", *d_step, "segment length step")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--window", spec->envelope_window, "envelope window")->capture_default_str();
    sub->add_option("--workers", spec->workers, "diagonalization threads")->capture_default_str()->check(
        CLI::PositiveNumber);
    sub->callback([=, &handler] {
        handler = [=](const Globals&) {
            Outcome o;
            o.parameters = {{"t", spec->t},         {"delta", spec->delta},   {"mu_bar", spec->mu_bar},
                            {"buffer", spec->buffer_sites}, {"d_min", *d_min}, {"d_max", *d_max},
                            {"d_step", *d_step},    {"window", spec->envelope_window}, {"workers", spec->workers}};
            SplittingScanSpec s = *spec;
            for (int d = *d_min; d <= *d_max; d += *d_step) s.lengths.push_back(d);
            SplittingResult r;
            if (!s.lengths.empty()) r = splitting_scan(s);
            o.results = to_json(r);
            o.results["xi_continuum"] = continuum_decay_length(s.t, s.delta, s.mu_bar);
            o.results["xi_guide"] = guide_decay_length(s.delta, s.mu_bar);
            o.csv = splitting_csv(r);
            return o;
        };
    });
}

void add_jr_zero_mode(CLI::App& app, Handler& handler) {
    auto* sub = app.add_subcommand("jr-zero-mode",
                                   "Bound state of the Jackiw-Rebbi model at a mass domain wall: density profile "
                                   "and finite-difference residual.");
    auto profile = std::make_shared<std::string>("tanh");
    auto m_bar = std::make_shared<double>(1.0);
    auto width = std::make_shared<double>(1.0);
    auto v_f = std::make_shared<double>(1.0);
    auto half = std::make_shared<double>(10.0);
    auto spacing = std::make_shared<double>(0.01);
    sub->add_option("--profile", *profile, "tanh | step")->capture_default_str()->check(
        CLI::IsMember({"tanh", "step"}));
    sub->add_option("--m-bar", *m_bar, "asymptotic mass")->capture_default_str();
    sub->add_option("--width", *width, "tanh width")->capture_default_str();
    sub->add_option("--v-f", *v_f, "Fermi velocity")->capture_default_str();
    sub->add_option("--half-extent", *half, "grid covers [-L, L]")->capture_default_str();
    sub->add_option("--spacing", *spacing, "grid spacing")->capture_default_str();
    sub->callback([=, &handler] {
        handler = [=](const Globals&) {
            Outcome o;
            o.parameters = {{"profile", *profile}, {"m_bar", *m_bar},     {"width", *width},
                            {"v_f", *v_f},         {"half_extent", *half}, {"spacing", *spacing}};
            if (!(*spacing > 0.0) || !(*half > 0.0)) {
                throw Error(ErrorCode::InvalidArgument, "spacing and half-extent must be positive");
            }
            const MassProfile p = *profile == "tanh" ? MassProfile::tanh(*m_bar, *width, *half, *spacing)
                                                     : MassProfile::step(*m_bar, *half, *spacing);
            const ZeroMode z = jr_zero_mode(p, *v_f);
            o.results = to_json(z);
            o.csv = zero_mode_csv(z);
            return o;
        };
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulator for braiding Majorana and Fibonacci anyons and the underlying 1D models.", "anyonsim"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "seed for sampled measurements")->capture_default_str();
    app.add_option("--output", g.output, "write the result to this file instead of standard output");
    app.add_option("--format", g.format, "json | csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
    app.set_version_flag("--version", ANYONSIM_VERSION);

    Handler handler;
    add_relations(app, handler);
    add_ising_braid(app, handler);
    add_ising_fuse(app, handler);
    add_fib_basis(app, handler);
    add_fib_braid(app, handler);
    add_compile_weave(app, handler);
    add_berry_exchange(app, handler);
    add_bdg_spectrum(app, handler);
    add_bdg_splitting(app, handler);
    add_jr_zero_mode(app, handler);
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Outcome o = handler(g);
        std::string text;
        if (g.format == "csv") {
            if (!o.csv) throw Error(ErrorCode::InvalidArgument, "--format csv is only available for bdg-splitting and jr-zero-mode");
            text = csv_text(*o.csv);
        } else {
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            json envelope{{"tool_version", ANYONSIM_VERSION},
                          {"subcommand", name},
                          {"parameters", o.parameters},
                          {"seed", g.seed},
                          {"results", o.results},
                          {"wall_time_ms", ms}};
            text = envelope.dump(2) + "\n";
        }
        if (g.output.empty()) {
            out << text;
        } else {
            write_text_file(g.output, text);
        }
        return 0;
    } catch (const Error& e) {
        err << "anyonsim " << name << ": " << e.what() << "\n";
        return is_usage_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "anyonsim " << name << ": " << e.what() << "\n";
        return 1;
    }
}

}  // namespace anyonsim::cli
