#include "anyonsim/serialize.hpp"

#include "test_util.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace anyonsim;
using testutil::max_abs;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("anyonsim_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("complex numbers and matrices") {
    CHECK(to_json(cplx(1.5, -2.0)).dump() == "[1.5,-2.0]");
    std::mt19937_64 rng(3);
    const Matrix u = testutil::random_unitary(3, rng);
    const json j = to_json(u);
    REQUIRE(j.size() == 3);
    CHECK(j[0].size() == 3);
    CHECK(max_abs(matrix_from_json(j) - u) == 0.0);
    CHECK(max_abs(matrix_from_json(json::parse(j.dump())) - u) == 0.0);
}

TEST_CASE("weave round trip") {
    const Weave w{{{1, 2}, {2, -2}, {1, 2}}};
    const json j = to_json(w);
    CHECK(j.dump() == "[[1,2],[2,-2],[1,2]]");
    CHECK(weave_from_json(j) == w);
    REQUIRE_CODE(weave_from_json(json::parse("[[1,2,3]]")), InvalidWeave);
    REQUIRE_CODE(weave_from_json(json::parse("{\"a\":1}")), InvalidWeave);
}

TEST_CASE("coupling path parsing") {
    KatoConfig cfg;
    const CouplingPath p = exchange_path();
    json j = to_json(p);
    j["steps_per_leg"] = 250;
    const CouplingPath q = path_from_json(j, cfg);
    CHECK(cfg.steps_per_leg == 250);
    REQUIRE(q.legs.size() == p.legs.size());
    for (std::size_t i = 0; i < q.legs.size(); ++i) {
        CHECK(q.legs[i].k == p.legs[i].k);
        CHECK(q.legs[i].from == p.legs[i].from);
        CHECK(q.legs[i].to == p.legs[i].to);
    }
    CHECK(q.start == p.start);

    const CouplingPath d = path_from_json(json::parse(R"({"legs": [{"k": 1, "from": 0, "to": 1}]})"), cfg);
    CHECK(d.start == Couplings{0.0, 0.0, 1.0});

    REQUIRE_CODE(path_from_json(json::parse(R"({"legs": [], "extra": 1})"), cfg), InvalidPath);
    REQUIRE_CODE(path_from_json(json::parse(R"({"start": [0, 1]})"), cfg), InvalidPath);
    REQUIRE_CODE(path_from_json(json::parse(R"({"legs": [{"k": 1}]})"), cfg), InvalidPath);
    REQUIRE_CODE(path_from_json(json::parse(R"({"legs": [{"k": 3, "from": 1, "to": -1}]})"), cfg), InvalidPath);
    REQUIRE_CODE(path_from_json(json::parse("[1, 2]"), cfg), InvalidPath);
}

TEST_CASE("stable hash") {
    // FNV-1a 64 reference values
    CHECK(stable_hash("") == "cbf29ce484222325");
    CHECK(stable_hash("a") == "af63dc4c8601ec8c");
    CHECK(stable_hash("foobar") == "85944171f73967e8");
}

TEST_CASE("cache keys ignore worker count") {
    const SectorTarget t = target_from_word(parse_word("1 1 1 1", 3), "b");
    SearchBudget a;
    SearchBudget b = a;
    b.worker_partitions = 8;
    CHECK(cache_key(t, a) == cache_key(t, b));
    b.max_moves = 11;
    CHECK(cache_key(t, a) != cache_key(t, b));
    const SectorTarget u = target_from_word(parse_word("1", 3), "b");
    CHECK(cache_key(t, a) != cache_key(u, a));
}

TEST_CASE("compilation cache round trip recomputes distances") {
    const SectorTarget t = target_from_word(parse_word("1 1 1 1", 3), "b1^4");
    SearchBudget budget;
    budget.max_moves = 4;
    const CompilationResult r = search_weave(t, budget);
    const std::filesystem::path file = temp_path("cache.json");
    std::filesystem::remove(file);

    CHECK(CompilationCache::load(file).size() == 0);
    CompilationCache cache;
    const std::string key = cache_key(t, budget);
    cache.store(key, r);
    cache.save(file);

    // tamper with the stored distance: it must not be trusted
    json j = json::parse(slurp(file));
    j["entries"][key]["distance"] = 123.0;
    write_text_file(file, j.dump());

    const CompilationCache loaded = CompilationCache::load(file);
    CHECK(loaded.size() == 1);
    const auto hit = loaded.lookup(key, t);
    REQUIRE(hit.has_value());
    CHECK(hit->weave == r.weave);
    CHECK(std::abs(hit->distance - r.distance) < 1e-15);
    CHECK(hit->nodes_explored == r.nodes_explored);
    CHECK_FALSE(loaded.lookup("nope", t).has_value());

    write_text_file(file, "not json");
    REQUIRE_CODE(CompilationCache::load(file), IoError);
    std::filesystem::remove(file);
}

TEST_CASE("csv output") {
    CsvTable t{{"d", "epsilon"}, {}};
    CHECK(csv_text(t) == "d,epsilon\n");
    t.rows.push_back({40.0, 0.1});
    CHECK(csv_text(t) == "d,epsilon\n40,0.10000000000000001\n");

    SplittingResult r;
    r.points.push_back({40, 1e-3, std::log(1e-3), true});
    const CsvTable s = splitting_csv(r);
    CHECK(s.header == std::vector<std::string>{"d", "epsilon", "ln_epsilon_envelope"});
    REQUIRE(s.rows.size() == 1);
    CHECK(s.rows[0][0] == 40.0);

    const ZeroMode z = jr_zero_mode(MassProfile::tanh(1.0, 1.0, 5.0, 0.1), 1.0);
    const CsvTable zc = zero_mode_csv(z);
    CHECK(zc.header == std::vector<std::string>{"x", "density"});
    CHECK(zc.rows.size() == z.x.size());

    REQUIRE_CODE(write_text_file("/nonexistent_dir/x/y.csv", "a"), IoError);
}

TEST_CASE("json documents for results") {
    const SpectrumResult s = chain_spectrum(ChainSpec::uniform(20, 1.0, 0.5, 1.0));
    const json j = to_json(s);
    CHECK(j.contains("near_zero"));
    const HolonomyReport h = compare_holonomy(single_move_path(), KatoConfig{100}, single_move_reference());
    const json hj = to_json(h);
    CHECK(hj["distance"].get<double>() == h.distance);
    CHECK(max_abs(matrix_from_json(hj["unitary"]) - h.unitary) == 0.0);
}
