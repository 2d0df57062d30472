// Copyright 2026 The dgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dgrover/errors.hpp"
#include "dgrover/experiments.hpp"

using namespace dgrover;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("dgrover_test_" + std::to_string(::getpid()) + "_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

bool has_message(const std::vector<Diagnostic>& ds, Diagnostic::Severity sev, const std::string& needle) {
    for (const auto& d : ds)
        if (d.severity == sev && d.message.find(needle) != std::string::npos) return true;
    return false;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(DGROVER_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("every preset is a valid config") {
    for (const auto& id : figure_ids()) {
        const auto c = preset(id);
        CHECK(c.figure_id == id);
        CHECK_NOTHROW(check_config(c));
        CHECK(config_from_json(to_json(c)).figure_id == id);
        CHECK(to_json(config_from_json(to_json(c))) == to_json(c));
    }
    CHECK_THROWS_AS(preset("fig9z"), UsageError);
}

TEST_CASE("validate reports derived quantities") {
    const auto ds = validate(preset("fig2a"));
    CHECK(has_message(ds, Diagnostic::Severity::info, "gamma = 0.42951"));
    CHECK(has_message(ds, Diagnostic::Severity::info, "tau = 62.832"));
    CHECK(has_message(ds, Diagnostic::Severity::info, "Gamma = 0.042725"));
    CHECK(has_message(ds, Diagnostic::Severity::warning, "crosses 2 revivals"));

    ExperimentConfig c = preset("fig2a");
    c.reservoir_qubits = {1};
    c.delta = 10.0;
    CHECK(has_message(validate(c), Diagnostic::Severity::warning, "revival-separation criterion violated"));

    c = preset("fig2a");
    c.t_max = 130.0;
    CHECK(has_message(validate(c), Diagnostic::Severity::warning, "crosses 2 revivals"));
    c.t_max = 60.0;
    CHECK_FALSE(has_message(validate(c), Diagnostic::Severity::warning, "crosses"));

    c.n = 12;
    c.reservoir_qubits = {4};
    CHECK(has_message(validate(c), Diagnostic::Severity::warning, "n + r <= 14"));
    CHECK_THROWS_AS(check_config(c), UsageError);
}

TEST_CASE("config parsing") {
    json j = {{"figure_id", "custom"}, {"kind", "trotter"}, {"n", 4}, {"M", 3}, {"reservoir_qubits", {2}},
              {"delta", 0.2}, {"dt", 1.0}, {"steps", 5}};
    const auto c = config_from_json(j);
    CHECK(c.solutions == std::vector<std::uint64_t>{0, 1, 2});
    CHECK(c.kind == ExperimentKind::trotter);
    CHECK_NOTHROW(check_config(c));

    json missing = j;
    missing.erase("steps");
    CHECK_THROWS_AS(config_from_json(missing), UsageError);

    json bad_kind = j;
    bad_kind["kind"] = "warp";
    CHECK_THROWS_AS(config_from_json(bad_kind), UsageError);

    json wrong_type = j;
    wrong_type["n"] = "four";
    CHECK_THROWS_AS(config_from_json(wrong_type), UsageError);

    const auto over = config_from_json(json{{"figure_id", "fig2c"}, {"steps", 7}});
    CHECK(over.steps == 7);
    CHECK(over.delta == 0.1);

    json manifest = {{"tool", "dgrover"}, {"config", to_json(preset("fig5a"))}};
    CHECK(to_json(config_from_json(manifest)) == to_json(preset("fig5a")));
}

TEST_CASE("series naming and CSV format") {
    const auto series = compute_series(preset("fig2c"));
    std::vector<std::string> names;
    for (const auto& s : series) names.push_back(s.name);
    CHECK(names == std::vector<std::string>{"bj_r4", "trotter_r0", "trotter_r4"});

    const std::string csv = to_csv(series[1]);
    CHECK(csv.rfind("abscissa,value\n0,", 0) == 0);
    CHECK(std::stod(csv.substr(csv.find(",", 15) + 1)) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 50);

    Series s;
    s.abscissa = {1.0};
    s.value = {0.1};
    s.stderr_values = std::vector<double>{0.01};
    CHECK(to_csv(s) == "abscissa,value,stderr\n1,0.10000000000000001,0.01\n");
}

TEST_CASE("runs are deterministic and manifests replay") {
    const fs::path a = scratch("a"), b = scratch("b"), c = scratch("c");
    for (const std::string id : {"fig2a", "fig4a", "fig5a", "fig6a"}) {
        ExperimentConfig cfg = preset(id);
        cfg.out_dir = a.string();
        const auto first = run_experiment(cfg);
        cfg.out_dir = b.string();
        const auto second = run_experiment(cfg);
        REQUIRE(first.size() == second.size());
        CHECK(first.back().filename() == "manifest.json");
        for (std::size_t i = 0; i + 1 < first.size(); ++i) CHECK(slurp(first[i]) == slurp(second[i]));

        ExperimentConfig replay = load_config(first.back());
        replay.out_dir = c.string();
        const auto third = run_experiment(replay);
        for (std::size_t i = 0; i + 1 < first.size(); ++i) CHECK(slurp(first[i]) == slurp(third[i]));

        const json m = json::parse(slurp(first.back()));
        CHECK(m["figure_id"] == id);
        CHECK(m["seed"] == cfg.seed);
        CHECK(m["series"].size() == first.size() - 1);
        for (const auto& entry : m["series"]) CHECK(entry.contains("provenance"));
    }
    ExperimentConfig seeded = preset("fig4a");
    seeded.out_dir = a.string();
    seeded.seed = 1;
    const auto other = compute_series(seeded);
    const auto base = compute_series(preset("fig4a"));
    CHECK(to_csv(other.back()) != to_csv(base.back()));
    fs::remove_all(a);
    fs::remove_all(b);
    fs::remove_all(c);
}

TEST_CASE("command line") {
    const fs::path out = scratch("cli");
    CHECK(run_cli("list-figures") == 0);
    CHECK(run_cli("run --figure fig2d --out " + out.string()) == 0);
    CHECK(fs::exists(out / "fig2d" / "manifest.json"));
    CHECK(fs::exists(out / "fig2d" / "trotter_r3.csv"));
    CHECK(run_cli("validate --config " + (out / "fig2d" / "manifest.json").string()) == 0);
    CHECK(run_cli("run --figure nope") == 2);
    CHECK(run_cli("run") == 2);
    CHECK(run_cli("frobnicate") == 2);

    const fs::path blocker = out / "file";
    std::ofstream(blocker) << "x";
    CHECK(run_cli("run --figure fig2d --out " + blocker.string()) == 3);

    const fs::path bad = out / "bad.json";
    std::ofstream(bad) << "{ not json";
    CHECK(run_cli("run --config " + bad.string()) == 2);
    fs::remove_all(out);
}
