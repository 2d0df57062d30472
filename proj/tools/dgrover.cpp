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

// dgrover command-line front end.
//
//   dgrover run --figure fig2a [--out DIR] [--seed N]
//   dgrover run --config cfg.json [--out DIR] [--seed N]
//   dgrover validate (--figure ID | --config FILE)
//   dgrover list-figures
//
// Exit codes: 0 ok, 1 numerical/internal failure, 2 usage, 3 i/o.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dgrover/errors.hpp"
#include "dgrover/experiments.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Source {
    std::string figure;
    std::string config;
};

dgrover::ExperimentConfig resolve(const Source& src) {
    if (src.figure.empty() == src.config.empty())
        throw dgrover::UsageError("give exactly one of --figure or --config");
    return src.figure.empty() ? dgrover::load_config(src.config) : dgrover::preset(src.figure);
}

int cmd_run(const Source& src, const std::optional<std::string>& out,
            const std::optional<std::uint64_t>& seed) {
    dgrover::ExperimentConfig config = resolve(src);
    if (out) config.out_dir = *out;
    if (seed) config.seed = *seed;
    for (const auto& d : dgrover::validate(config))
        if (d.severity == dgrover::Diagnostic::Severity::warning) std::cerr << "warning: " << d.message << "\n";
    for (const auto& path : dgrover::run_experiment(config)) std::cout << path.string() << "\n";
    return 0;
}

int cmd_validate(const Source& src) {
    const dgrover::ExperimentConfig config = resolve(src);
    bool clean = true;
    for (const auto& d : dgrover::validate(config)) {
        const bool warn = d.severity == dgrover::Diagnostic::Severity::warning;
        clean = clean && !warn;
        std::cout << (warn ? "warning: " : "info: ") << d.message << "\n";
    }
    std::cout << (clean ? "ok" : "ok with warnings") << "\n";
    return 0;
}

int cmd_list() {
    for (const auto& id : dgrover::figure_ids()) {
        const auto c = dgrover::preset(id);
        std::cout << id << "\t" << dgrover::kind_name(c.kind) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dissipative search simulator"};
    app.set_version_flag("--version", dgrover::kToolVersion);
    app.require_subcommand(1);

    Source run_src;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    auto* run = app.add_subcommand("run", "Run a preset figure or a config file");
    run->add_option("--figure", run_src.figure, "Preset id (see list-figures)");
    run->add_option("--config", run_src.config, "Config JSON file")->check(CLI::ExistingFile);
    run->add_option("--out", out, "Output directory (default: results)");
    run->add_option("--seed", seed, "Master seed override");

    Source val_src;
    auto* val = app.add_subcommand("validate", "Check a config and print derived parameters");
    val->add_option("--figure", val_src.figure, "Preset id");
    val->add_option("--config", val_src.config, "Config JSON file")->check(CLI::ExistingFile);

    auto* list = app.add_subcommand("list-figures", "List preset figure ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run) return cmd_run(run_src, out, seed);
        if (*val) return cmd_validate(val_src);
        if (*list) return cmd_list();
    } catch (const dgrover::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dgrover::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dgrover::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
