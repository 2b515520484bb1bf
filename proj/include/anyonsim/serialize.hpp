#pragma once

#include "anyonsim/bdg.hpp"
#include "anyonsim/berry.hpp"
#include "anyonsim/braid.hpp"
#include "anyonsim/compiler.hpp"
#include "anyonsim/fibonacci.hpp"
#include "anyonsim/ising.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace anyonsim {

using json = nlohmann::ordered_json;

json to_json(cplx z);
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const RelationReport& r);
json to_json(const FusionDistribution& d);
json to_json(const Weave& w);
Weave weave_from_json(const json& j);
json to_json(const CompilationResult& r);
json to_json(const CouplingPath& p);
/// {"start": [..], "legs": [{"k","from","to"}...], "steps_per_leg": n, "epsilon_bar": e}; start
/// defaults to (0, 0, epsilon_bar), steps_per_leg to cfg's current value.
CouplingPath path_from_json(const json& j, KatoConfig& cfg);
json to_json(const HolonomyReport& r);
json to_json(const SpectrumResult& r);
json to_json(const SplittingResult& r);
json to_json(const ZeroMode& z);

/// Stable 64-bit FNV-1a hash, rendered as 16 hex digits.
std::string stable_hash(const std::string& text);
/// Cache key of a (target, budget) pair. worker_partitions is excluded: results do not depend on it.
std::string cache_key(const SectorTarget& target, const SearchBudget& budget);

/// JSON file {"entries": {key: {"target", "moves", "distance", "nodes", ...}}}.
/// Loaded distances are never trusted: they are recomputed from the stored moves.
class CompilationCache {
public:
    static CompilationCache load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    std::optional<CompilationResult> lookup(const std::string& key, const SectorTarget& target) const;
    void store(const std::string& key, const CompilationResult& result);
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::map<std::string, json> entries_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Header row plus one line per row; numbers with 17 significant digits, LF endings.
std::string csv_text(const CsvTable& table);
/// Throws IoError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

CsvTable splitting_csv(const SplittingResult& r);
CsvTable zero_mode_csv(const ZeroMode& z);

}  // namespace anyonsim
