// SPDX-License-Identifier: Apache-2.0
//
// kapatch - Ka-band rectangular microstrip patch and planar array design toolkit
// Copyright (C) 2026 kapatch contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// kapatch: design, match, sweep, pattern, array, paper-repro.
// Data goes to stdout; diagnostics go to stderr. Exit codes: 0 success,
// 2 invalid arguments or malformed input files, 3 model/domain failures.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kapatch/array.hpp"
#include "kapatch/circuit.hpp"
#include "kapatch/geometry.hpp"
#include "kapatch/io.hpp"
#include "kapatch/radiation.hpp"

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kapatch::InvalidInput("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw kapatch::InvalidInput("cannot write file: " + path);
    out << text;
    out.flush();
    if (!out) throw kapatch::InvalidInput("failed while writing file: " + path);
}

/// JSON config files: {"subcommand": {"flag": value, ...}, ...}. Values may
/// be numbers, strings, booleans, or arrays of those. Command-line flags
/// always win over config values.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const
        override {
        return emit(app, default_also).dump(2) + "\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        ordered_json j;
        try {
            j = ordered_json::parse(input);
        } catch (const nlohmann::json::exception& e) {
            throw kapatch::InvalidInput(std::string("malformed config JSON: ") + e.what());
        }
        if (!j.is_object()) throw kapatch::InvalidInput("config JSON must be an object");
        std::vector<CLI::ConfigItem> items;
        flatten(j, {}, items);
        return items;
    }

  private:
    static ordered_json emit(const CLI::App* app, bool default_also) {
        ordered_json j = ordered_json::object();
        for (const CLI::Option* opt : app->get_options()) {
            if (!opt->get_configurable() || opt->get_lnames().empty()) continue;
            const std::string name = opt->get_lnames()[0];
            if (!opt->results().empty())
                j[name] = opt->results().size() == 1 ? ordered_json(opt->results()[0])
                                                     : ordered_json(opt->results());
            else if (default_also && !opt->get_default_str().empty())
                j[name] = opt->get_default_str();
        }
        for (const CLI::App* sub : app->get_subcommands({}))
            j[sub->get_name()] = emit(sub, default_also);
        return j;
    }

    static std::string scalar(const ordered_json& value) {
        if (value.is_string()) return value.get<std::string>();
        return value.dump();
    }

    static void flatten(const ordered_json& node, std::vector<std::string> parents,
                        std::vector<CLI::ConfigItem>& items) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object()) {
                auto deeper = parents;
                deeper.push_back(key);
                flatten(value, std::move(deeper), items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array())
                for (const auto& entry : value) item.inputs.push_back(scalar(entry));
            else
                item.inputs.push_back(scalar(value));
            items.push_back(std::move(item));
        }
    }
};

void warn_if_thick(const kapatch::PatchGeometry& geo) {
    if (kapatch::electrically_thick(geo))
        std::cerr << "warning: substrate is electrically thick (h >= 0.1 wavelengths); "
                     "the thin-substrate circuit models degrade\n";
}

kapatch::Cut cut_from_string(const std::string& text) {
    if (text == "E") return kapatch::Cut::E;
    if (text == "H") return kapatch::Cut::H;
    throw kapatch::InvalidInput("unknown cut '" + text + "' (expected 'E' or 'H')");
}

// ----------------------------------------------------------------------------

struct DesignArgs {
    double f0_hz = 29e9;
    double epsilon_r = 2.2;
    double height_mm = 0.784;
    double loss_tangent = 0.0;
    std::string width_formula = "standard";
    std::string label = "RT-duroid-5880";
    std::string out;
};

void add_design(CLI::App& app, DesignArgs& args) {
    CLI::App* cmd = app.add_subcommand("design",
                                       "Size a rectangular patch from frequency and substrate");
    cmd->add_option("--f0", args.f0_hz, "Design frequency in Hz")->capture_default_str();
    cmd->add_option("--er", args.epsilon_r, "Substrate relative permittivity")
        ->capture_default_str();
    cmd->add_option("--h-mm", args.height_mm, "Substrate thickness in mm")->capture_default_str();
    cmd->add_option("--tand", args.loss_tangent, "Substrate loss tangent")->capture_default_str();
    cmd->add_option("--width-formula", args.width_formula,
                    "Width sizing rule: standard | paper-literal")
        ->check(CLI::IsMember({"standard", "paper-literal"}))
        ->capture_default_str();
    cmd->add_option("--label", args.label, "Substrate label recorded in the output")
        ->capture_default_str();
    cmd->add_option("--out", args.out, "Also write the geometry JSON to this file");
    cmd->callback([&args] {
        const kapatch::Substrate substrate{args.epsilon_r, args.height_mm, args.loss_tangent,
                                           args.label};
        const kapatch::DesignSpec spec{args.f0_hz,
                                       kapatch::width_formula_from_string(args.width_formula),
                                       50.0};
        const std::string text = kapatch::geometry_to_json(kapatch::design_patch(spec, substrate));
        std::cout << text;
        if (!args.out.empty()) write_file(args.out, text);
    });
}

struct MatchArgs {
    std::string geometry;
    double z0_ohm = 50.0;
    double resonator_q = 30.0;
    std::string out;
};

void add_match(CLI::App& app, MatchArgs& args) {
    CLI::App* cmd = app.add_subcommand("match",
                                       "Find the inset depth matching a patch to a target "
                                       "impedance");
    cmd->add_option("--geometry", args.geometry, "Geometry JSON file")->required();
    cmd->add_option("--z0", args.z0_ohm, "Target impedance in ohm")->capture_default_str();
    cmd->add_option("--q", args.resonator_q, "Loaded resonator quality factor")
        ->capture_default_str();
    cmd->add_option("--out", args.out, "Also write the feed JSON to this file");
    cmd->callback([&args] {
        const kapatch::PatchGeometry geo = kapatch::geometry_from_json(slurp(args.geometry));
        warn_if_thick(geo);
        const kapatch::FeedModel feed = kapatch::match_feed(geo, args.z0_ohm, args.resonator_q);
        const std::string text = kapatch::feed_to_json(feed);
        std::cout << text;
        if (!args.out.empty()) write_file(args.out, text);
    });
}

struct SweepArgs {
    std::string geometry;
    std::string feed;
    double f_start_hz = 27e9;
    double f_stop_hz = 31e9;
    int n_points = 401;
    double z0_ohm = 50.0;
    double resonator_q = 30.0;
    std::string format = "s1p";
    std::string out;
};

void add_sweep(CLI::App& app, SweepArgs& args) {
    CLI::App* cmd = app.add_subcommand("sweep", "Sweep the one-port reflection coefficient");
    cmd->add_option("--geometry", args.geometry, "Geometry JSON file")->required();
    cmd->add_option("--feed", args.feed,
                    "Feed JSON file; omitted means an unmatched edge feed");
    cmd->add_option("--from", args.f_start_hz, "Sweep start in Hz")->capture_default_str();
    cmd->add_option("--to", args.f_stop_hz, "Sweep stop in Hz")->capture_default_str();
    cmd->add_option("--points", args.n_points, "Number of sweep points")->capture_default_str();
    cmd->add_option("--z0", args.z0_ohm, "Reference impedance in ohm")->capture_default_str();
    cmd->add_option("--q", args.resonator_q, "Quality factor for the default edge feed")
        ->capture_default_str();
    cmd->add_option("--format", args.format, "Output file format: s1p | csv")
        ->check(CLI::IsMember({"s1p", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", args.out, "Write the sweep to this file");
    cmd->callback([&args] {
        const kapatch::PatchGeometry geo = kapatch::geometry_from_json(slurp(args.geometry));
        warn_if_thick(geo);
        const kapatch::FeedModel feed = args.feed.empty()
                                            ? kapatch::edge_feed(geo, args.resonator_q)
                                            : kapatch::feed_from_json(slurp(args.feed));
        const kapatch::FrequencyResponse response = kapatch::s11_sweep(
            feed, geo, args.f_start_hz, args.f_stop_hz, args.n_points, args.z0_ohm);
        const kapatch::SweepPoint& best = kapatch::min_s11(response);
        ordered_json summary;
        summary["f_min_hz"] = best.f_hz;
        summary["s11_min_db"] = kapatch::s11_db(best.s11);
        std::cout << summary.dump(2) << "\n";
        if (!args.out.empty())
            write_file(args.out, args.format == "s1p" ? kapatch::sweep_to_touchstone(response)
                                                      : kapatch::sweep_to_csv(response));
    });
}

struct PatternArgs {
    std::string geometry;
    double step_deg = 0.5;
    std::string cut = "full";
    double efficiency = 1.0;
    bool obliquity = false;
    std::string out;
};

void add_pattern(CLI::App& app, PatternArgs& args) {
    CLI::App* cmd = app.add_subcommand("pattern", "Sample the far-field pattern of one patch");
    cmd->add_option("--geometry", args.geometry, "Geometry JSON file")->required();
    cmd->add_option("--step", args.step_deg, "Angular step in degrees")->capture_default_str();
    cmd->add_option("--cut", args.cut, "CSV content: full | E | H")
        ->check(CLI::IsMember({"full", "E", "H"}))
        ->capture_default_str();
    cmd->add_option("--efficiency", args.efficiency, "Radiation efficiency in (0, 1]")
        ->capture_default_str();
    cmd->add_flag("--obliquity", args.obliquity,
                  "Multiply the aperture amplitude by cos(theta)");
    cmd->add_option("--out", args.out, "Write the sampled pattern CSV to this file");
    cmd->callback([&args] {
        const kapatch::PatchGeometry geo = kapatch::geometry_from_json(slurp(args.geometry));
        const kapatch::AngularGrid grid(args.step_deg);
        const kapatch::FarFieldPattern pattern =
            kapatch::sample_pattern(geo, grid, args.obliquity);
        const kapatch::ArrayMetrics metrics = kapatch::pattern_metrics(pattern, args.efficiency);
        ordered_json summary;
        summary["directivity_dbi"] = kapatch::directivity_dbi(pattern);
        summary["gain_dbi"] = metrics.gain_dbi;
        summary["efficiency"] = args.efficiency;
        summary["hpbw_e_deg"] = metrics.hpbw_e_deg;
        summary["hpbw_h_deg"] = metrics.hpbw_h_deg;
        if (metrics.sll_db)
            summary["sll_db"] = *metrics.sll_db;
        else
            summary["sll_db"] = nullptr;
        summary["peak_theta_deg"] = metrics.peak_theta_deg;
        summary["peak_phi_deg"] = metrics.peak_phi_deg;
        std::cout << summary.dump(2) << "\n";
        if (!args.out.empty())
            write_file(args.out,
                       args.cut == "full"
                           ? kapatch::pattern_to_csv(pattern, args.efficiency)
                           : kapatch::cut_to_csv(pattern, cut_from_string(args.cut),
                                                 args.efficiency));
    });
}

struct ArrayArgs {
    std::string geometry;
    std::string layout;
    int nx = 0;
    int ny = 0;
    double dx_lambda = 0.5;
    double dy_lambda = 0.5;
    double steer_theta_deg = 0.0;
    double steer_phi_deg = 0.0;
    double step_deg = 0.5;
    double efficiency = 1.0;
    bool obliquity = false;
    std::string out;
};

void add_array(CLI::App& app, ArrayArgs& args) {
    CLI::App* cmd = app.add_subcommand("array",
                                       "Synthesize a planar array of identical patches");
    cmd->add_option("--geometry", args.geometry, "Geometry JSON file")->required();
    CLI::Option* opt_nx = cmd->add_option("--nx", args.nx, "Elements along x");
    CLI::Option* opt_ny = cmd->add_option("--ny", args.ny, "Elements along y");
    CLI::Option* opt_dx =
        cmd->add_option("--dx", args.dx_lambda, "Spacing along x in wavelengths")
            ->capture_default_str();
    CLI::Option* opt_dy =
        cmd->add_option("--dy", args.dy_lambda, "Spacing along y in wavelengths")
            ->capture_default_str();
    CLI::Option* opt_layout =
        cmd->add_option("--layout", args.layout, "Layout JSON file (instead of --nx/--ny)");
    opt_layout->excludes(opt_nx)->excludes(opt_ny)->excludes(opt_dx)->excludes(opt_dy);
    CLI::Option* opt_steer_theta =
        cmd->add_option("--steer-theta", args.steer_theta_deg, "Steer the beam: theta in deg");
    cmd->add_option("--steer-phi", args.steer_phi_deg, "Steer the beam: phi in deg")
        ->capture_default_str();
    cmd->add_option("--step", args.step_deg, "Angular step in degrees")->capture_default_str();
    cmd->add_option("--efficiency", args.efficiency, "Radiation efficiency in (0, 1]")
        ->capture_default_str();
    cmd->add_flag("--obliquity", args.obliquity,
                  "Multiply the aperture amplitude by cos(theta)");
    cmd->add_option("--out", args.out, "Write the total pattern CSV to this file");
    cmd->callback([&args, opt_steer_theta] {
        const kapatch::PatchGeometry geo = kapatch::geometry_from_json(slurp(args.geometry));
        kapatch::ArrayLayout layout;
        if (!args.layout.empty()) {
            layout = kapatch::layout_from_json(slurp(args.layout));
        } else {
            if (args.nx < 1 || args.ny < 1)
                throw kapatch::InvalidInput("provide --nx and --ny (or --layout)");
            layout = kapatch::uniform_layout(args.nx, args.ny, args.dx_lambda, args.dy_lambda);
        }
        const bool steered = opt_steer_theta->count() > 0;
        if (steered) {
            const auto phases =
                kapatch::steering_phases(layout, args.steer_theta_deg, args.steer_phi_deg);
            if (layout.excitations.empty()) {
                layout.excitations = phases;
            } else {
                // Steering a tapered layout keeps the taper and adds the
                // progressive phase.
                for (std::size_t i = 0; i < phases.size(); ++i)
                    layout.excitations[i] *= phases[i];
            }
        }
        const double margin = kapatch::grating_lobe_margin(layout, steered ? args.steer_theta_deg
                                                                           : 0.0);
        if (margin < 0.0)
            std::cerr << "warning: grating lobe enters visible space (spacing margin "
                      << kapatch::format_double(margin) << " wavelengths)\n";
        const kapatch::AngularGrid grid(args.step_deg);
        const kapatch::FarFieldPattern pattern =
            kapatch::total_pattern(geo, layout, grid, args.obliquity);
        const kapatch::ArrayMetrics metrics = kapatch::pattern_metrics(pattern, args.efficiency);
        std::cout << kapatch::metrics_to_json(metrics);
        if (!args.out.empty())
            write_file(args.out, kapatch::pattern_to_csv(pattern, args.efficiency));
    });
}

struct ReproArgs {
    double f0_hz = 29e9;
    double epsilon_r = 2.2;
    double height_mm = 0.784;
    double efficiency = 1.0;
    double resonator_q = 30.0;
    double spacing_lambda = 0.5;
    double step_deg = 0.5;
    std::string format = "table";
    std::string out;
};

void add_paper_repro(CLI::App& app, ReproArgs& args) {
    CLI::App* cmd = app.add_subcommand(
        "paper-repro",
        "Reproduce the reference design progression (element, 2x2, 4x4, 8x8)");
    cmd->add_option("--f0", args.f0_hz, "Design frequency in Hz")->capture_default_str();
    cmd->add_option("--er", args.epsilon_r, "Substrate relative permittivity")
        ->capture_default_str();
    cmd->add_option("--h-mm", args.height_mm, "Substrate thickness in mm")->capture_default_str();
    cmd->add_option("--efficiency", args.efficiency, "Radiation efficiency in (0, 1]")
        ->capture_default_str();
    cmd->add_option("--q", args.resonator_q, "Loaded resonator quality factor")
        ->capture_default_str();
    cmd->add_option("--spacing", args.spacing_lambda, "Element spacing in wavelengths")
        ->capture_default_str();
    cmd->add_option("--step", args.step_deg, "Angular step in degrees")->capture_default_str();
    cmd->add_option("--format", args.format, "Output format: table | json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", args.out, "Also write the progression to this file");
    cmd->callback([&args] {
        const kapatch::Substrate substrate{args.epsilon_r, args.height_mm, 0.0,
                                           "RT-duroid-5880"};
        const kapatch::DesignSpec spec{args.f0_hz, kapatch::WidthFormula::Standard, 50.0};
        const kapatch::PatchGeometry geo = kapatch::design_patch(spec, substrate);
        const auto rows =
            kapatch::paper_progression(geo, args.efficiency, args.resonator_q,
                                       kapatch::AngularGrid(args.step_deg), args.spacing_lambda);
        const std::string text = args.format == "table" ? kapatch::progression_table(rows)
                                                        : kapatch::progression_to_json(rows);
        std::cout << text;
        if (!args.out.empty()) write_file(args.out, text);
    });
}

}  // namespace

int main(int argc, char** argv) {
    DesignArgs design_args;
    MatchArgs match_args;
    SweepArgs sweep_args;
    PatternArgs pattern_args;
    ArrayArgs array_args;
    ReproArgs repro_args;

    CLI::App app{"Ka-band rectangular microstrip patch and planar array design toolkit"};
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON config file supplying any flag")
        ->check(CLI::ExistingFile);
    app.allow_config_extras(CLI::config_extras_mode::error);

    add_design(app, design_args);
    add_match(app, match_args);
    add_sweep(app, sweep_args);
    add_pattern(app, pattern_args);
    add_array(app, array_args);
    add_paper_repro(app, repro_args);

    // Lets "--config" (and any other main-app flag) appear after the
    // subcommand name.
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
