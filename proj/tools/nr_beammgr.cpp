/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The nr-beammgr Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// nr_beammgr: command-line front end for the beam management evaluator.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "nrbm/csv.hpp"
#include "nrbm/error.hpp"
#include "nrbm/evaluate.hpp"
#include "nrbm/figures.hpp"
#include "nrbm/params.hpp"
#include "nrbm/sweep.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

/// Options shared by every parameter-consuming subcommand.
struct ParamOptions {
    std::string config;
    std::map<std::string, std::string> overrides;
    std::vector<CLI::Option*> options;

    void attach(CLI::App* app) {
        app->add_option("--config", config, "configuration file");
        for (const auto& spec : nrbm::parameter_registry()) {
            auto* opt = app->add_option("--" + spec.key, overrides[spec.key],
                                        fmt::format("{} [{}]", spec.help, spec.default_value));
            opt->group(fmt::format("[{}]", spec.section));
            options.push_back(opt);
        }
    }

    [[nodiscard]] nrbm::ParamSet resolve() const {
        nrbm::ParamSet ps = nrbm::ParamSet::defaults();
        if (!config.empty()) ps.load_file(config);
        for (const auto* opt : options) {
            if (opt->count() == 0) continue;
            const std::string key = opt->get_name().substr(2);
            ps.set(key, overrides.at(key));
        }
        return ps;
    }
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw nrbm::IoError("cannot write to standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) throw nrbm::IoError(fmt::format("cannot write '{}'", path));
}

std::string to_csv(const nrbm::Cells& header, const std::vector<nrbm::Cells>& rows) {
    std::ostringstream out;
    nrbm::write_csv(out, header, rows);
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beam management evaluator for NR mmWave: initial access, tracking and overhead metrics."};
    app.require_subcommand(1);
    app.set_version_flag("--version", "nr_beammgr 1.0.0");

    struct MetricCommand {
        const nrbm::Metric* metric;
        CLI::App* app;
        ParamOptions params;
        std::string out;
    };
    std::vector<std::unique_ptr<MetricCommand>> metric_commands;
    for (const auto& metric : nrbm::metric_registry()) {
        auto cmd = std::make_unique<MetricCommand>();
        cmd->metric = &metric;
        cmd->app = app.add_subcommand(metric.name, metric.summary);
        cmd->params.attach(cmd->app);
        cmd->app->add_option("--out", cmd->out, "output CSV file (default: stdout)");
        metric_commands.push_back(std::move(cmd));
    }

    ParamOptions sweep_params;
    std::string sweep_metric;
    std::vector<std::string> sweep_axes;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "evaluate a metric over a parameter grid");
    sweep->add_option("--metric", sweep_metric, "metric to evaluate")->required();
    sweep->add_option("--axis", sweep_axes,
                      "grid axis key=v1,v2 (use ';' between values that contain commas, "
                      "'+' to vary keys together: gnb+ue=4+4,64+16)")
        ->required();
    sweep->add_option("--out", sweep_out, "output CSV file (default: stdout)");
    sweep_params.attach(sweep);

    std::string figures_dir = "figures";
    auto* figures = app.add_subcommand("figures", "regenerate every analytic figure and table as CSV");
    figures->add_option("--out-dir", figures_dir, "output directory");

    ParamOptions validate_params;
    auto* validate = app.add_subcommand("validate", "list every constraint the configuration violates");
    validate_params.attach(validate);

    auto* defaults = app.add_subcommand("defaults", "print a configuration file holding every default");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        for (auto& cmd : metric_commands) {
            if (!cmd->app->parsed()) continue;
            const nrbm::ParamSet ps = cmd->params.resolve();
            const nrbm::Cells row = nrbm::metric_row(*cmd->metric, ps, nrbm::worker_count());
            emit(cmd->out, to_csv(nrbm::metric_header(*cmd->metric), {row}));
            return 0;
        }
        if (sweep->parsed()) {
            nrbm::SweepSpec spec;
            spec.metric = sweep_metric;
            spec.fixed = sweep_params.resolve();
            for (const auto& text : sweep_axes) spec.axes.push_back(nrbm::SweepAxis::parse(text));
            spec.validate();
            std::cerr << fmt::format("sweep: {} grid points\n", spec.size());
            const nrbm::SweepResult result = nrbm::run_sweep(spec, nrbm::worker_count());
            emit(sweep_out, to_csv(result.header, result.rows));
            return 0;
        }
        if (figures->parsed()) {
            for (const auto& file : nrbm::write_figures(figures_dir, nrbm::worker_count())) {
                std::cerr << fmt::format("wrote {} ({} rows)\n", file.path.string(), file.rows);
            }
            return 0;
        }
        if (validate->parsed()) {
            const auto violations = nrbm::validate(validate_params.resolve());
            for (const auto& v : violations) std::cout << fmt::format("{}: {}\n", v.field, v.message);
            return violations.empty() ? 0 : kExitValidation;
        }
        if (defaults->parsed()) {
            std::cout << nrbm::default_config_text();
            return 0;
        }
    } catch (const nrbm::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}
