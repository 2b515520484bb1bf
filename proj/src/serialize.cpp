#include "anyonsim/serialize.hpp"

#include "anyonsim/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace anyonsim {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        throw Error(ErrorCode::MalformedToken, "matrix must be a nonempty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw Error(ErrorCode::WrongSize, "ragged matrix rows");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            const json& e = row[static_cast<std::size_t>(c)];
            if (e.is_number()) {
                m(r, c) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
            } else {
                throw Error(ErrorCode::MalformedToken, "matrix entries are numbers or [re, im] pairs");
            }
        }
    }
    return m;
}

json to_json(const RelationReport& r) {
    return json{{"max_commutation_defect", r.max_commutation_defect},
                {"max_yang_baxter_defect", r.max_yang_baxter_defect},
                {"tolerance", r.tolerance},
                {"pass", r.pass}};
}

json to_json(const FusionDistribution& d) {
    json pairing = json::array();
    for (const auto& [a, b] : d.pairing) pairing.push_back(json::array({a, b}));
    json out{{"pairing", pairing}, {"probabilities", json::object()}};
    for (const auto& [k, p] : d.probabilities) out["probabilities"][k] = p;
    if (d.counts) {
        out["counts"] = json::object();
        for (const auto& [k, c] : *d.counts) out["counts"][k] = c;
    }
    if (d.seed) out["seed"] = *d.seed;
    if (d.counts) out["sampler"] = d.sampler;
    return out;
}

json to_json(const Weave& w) {
    json moves = json::array();
    for (const Move& m : w.moves) moves.push_back(json::array({m.generator, m.power}));
    return moves;
}

Weave weave_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::InvalidWeave, "moves must be an array");
    Weave w;
    for (const json& m : j) {
        if (!m.is_array() || m.size() != 2 || !m[0].is_number_integer() || !m[1].is_number_integer()) {
            throw Error(ErrorCode::InvalidWeave, "each move is [generator, power]");
        }
        w.moves.push_back(Move{m[0].get<int>(), m[1].get<int>()});
    }
    if (!w.canonical()) throw Error(ErrorCode::InvalidWeave, "moves do not form a canonical weave");
    return w;
}

json to_json(const CompilationResult& r) {
    return json{{"target", r.target_name},
                {"moves", to_json(r.weave)},
                {"word", r.weave.to_word().to_string()},
                {"distance", r.distance},
                {"tau_distance", r.tau_distance},
                {"zero_distance", r.zero_distance},
                {"nodes", r.nodes_explored},
                {"budget_exhausted", r.budget_exhausted},
                {"matrix", to_json(r.matrix)}};
}

json to_json(const CouplingPath& p) {
    json legs = json::array();
    for (const CouplingLeg& l : p.legs) legs.push_back(json{{"k", l.k}, {"from", l.from}, {"to", l.to}});
    return json{{"start", json::array({p.start[0], p.start[1], p.start[2]})},
                {"legs", legs},
                {"epsilon_bar", p.epsilon_bar}};
}

CouplingPath path_from_json(const json& j, KatoConfig& cfg) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidPath, "path specification must be a JSON object");
    for (const auto& item : j.items()) {
        const std::string& k = item.key();
        if (k != "legs" && k != "start" && k != "steps_per_leg" && k != "epsilon_bar") {
            throw Error(ErrorCode::InvalidPath, "unknown key '" + k + "'");
        }
    }
    CouplingPath p;
    try {
        p.epsilon_bar = j.value("epsilon_bar", 1.0);
        p.start = {0.0, 0.0, p.epsilon_bar};
        if (j.contains("start")) {
            const json& s = j.at("start");
            if (!s.is_array() || s.size() != 3) throw Error(ErrorCode::InvalidPath, "start must have 3 entries");
            for (std::size_t i = 0; i < 3; ++i) p.start[i] = s[i].get<double>();
        }
        if (!j.contains("legs") || !j.at("legs").is_array()) throw Error(ErrorCode::InvalidPath, "legs array missing");
        for (const json& l : j.at("legs")) {
            p.legs.push_back(CouplingLeg{l.at("k").get<int>(), l.at("from").get<double>(), l.at("to").get<double>()});
        }
        if (j.contains("steps_per_leg")) cfg.steps_per_leg = j.at("steps_per_leg").get<int>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidPath, e.what());
    }
    p.validate();
    return p;
}

json to_json(const HolonomyReport& r) {
    return json{{"distance", r.distance},
                {"leakage", r.leakage},
                {"block_unitarity_defect", r.block_unitarity_defect},
                {"ground_block", to_json(r.ground_block)},
                {"reference_block", to_json(r.reference_block)},
                {"unitary", to_json(r.unitary)}};
}

json to_json(const SpectrumResult& r) {
    json near = json::array();
    for (const NearZeroMode& z : r.near_zero) {
        near.push_back(json{{"energy", z.energy},
                            {"center", z.center},
                            {"decay_length", z.decay_length},
                            {"end_weight", z.end_weight},
                            {"majorana_weights", json::array({z.majorana_left, z.majorana_right})}});
    }
    return json{{"eigenvalues", r.eigenvalues}, {"ph_defect", r.ph_defect}, {"near_zero", near}};
}

json to_json(const SplittingResult& r) {
    json pts = json::array();
    for (const SplittingPoint& p : r.points) {
        pts.push_back(json{{"d", p.d}, {"epsilon", p.epsilon}, {"ln_epsilon_envelope", p.ln_envelope},
                           {"used_in_fit", p.used_in_fit}});
    }
    return json{{"points", pts},
                {"slope", r.slope},
                {"intercept", r.intercept},
                {"xi_fit", r.xi_fit},
                {"r_squared", r.r_squared},
                {"prefactor", r.prefactor}};
}

json to_json(const ZeroMode& z) {
    return json{{"x", z.x},
                {"density", z.density},
                {"residual", z.residual},
                {"spinor", json::array({to_json(z.chi(0)), to_json(z.chi(1))})}};
}

std::string stable_hash(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string cache_key(const SectorTarget& target, const SearchBudget& budget) {
    json j{{"tau", to_json(target.tau_block)}, {"zero", to_json(target.zero_sector)}};
    return stable_hash(j.dump()) + ":" + std::to_string(budget.max_moves) + ":" + json(budget.target_distance).dump();
}

CompilationCache CompilationCache::load(const std::filesystem::path& path) {
    CompilationCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::IoError, "cannot parse cache " + path.string() + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_object()) {
        throw Error(ErrorCode::IoError, "cache " + path.string() + " has no entries object");
    }
    for (const auto& item : j["entries"].items()) cache.entries_[item.key()] = item.value();
    return cache;
}

void CompilationCache::save(const std::filesystem::path& path) const {
    json entries = json::object();
    for (const auto& [k, v] : entries_) entries[k] = v;
    write_text_file(path, json{{"entries", entries}}.dump(2) + "\n");
}

std::optional<CompilationResult> CompilationCache::lookup(const std::string& key, const SectorTarget& target) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    const json& e = it->second;
    CompilationResult r;
    r.weave = weave_from_json(e.at("moves"));
    r.target_name = target.name;
    r.matrix = weave_unitary(r.weave);
    const SectorDistances d = weave_distances(r.weave, target);
    r.tau_distance = d.tau;
    r.zero_distance = d.zero;
    r.distance = d.cost();
    r.nodes_explored = e.value("nodes", std::uint64_t{0});
    r.budget_exhausted = e.value("budget_exhausted", false);
    return r;
}

void CompilationCache::store(const std::string& key, const CompilationResult& result) {
    entries_[key] = json{{"target", result.target_name},
                         {"moves", to_json(result.weave)},
                         {"distance", result.distance},
                         {"nodes", result.nodes_explored},
                         {"budget_exhausted", result.budget_exhausted}};
}

std::string csv_text(const CsvTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += ',';
        out += table.header[i];
    }
    out += '\n';
    char buf[32];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write to " + path.string() + " failed");
}

CsvTable splitting_csv(const SplittingResult& r) {
    CsvTable t{{"d", "epsilon", "ln_epsilon_envelope"}, {}};
    for (const SplittingPoint& p : r.points) t.rows.push_back({static_cast<double>(p.d), p.epsilon, p.ln_envelope});
    return t;
}

CsvTable zero_mode_csv(const ZeroMode& z) {
    CsvTable t{{"x", "density"}, {}};
    for (std::size_t i = 0; i < z.x.size(); ++i) t.rows.push_back({z.x[i], z.density[i]});
    return t;
}

}  // namespace anyonsim
