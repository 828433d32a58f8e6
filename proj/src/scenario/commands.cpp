// SPDX-License-Identifier: Apache-2.0
//
// fdabeam: instantaneous space-time beampatterns of linear antenna arrays
// Copyright (C) 2026 The fdabeam authors
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

#include "fdabeam/commands.hpp"
#include "fdabeam/hash.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

namespace fdabeam::scenario
{
    using nlohmann::json;

    namespace
    {
        // Comma-separated line builder; floats use 17 significant digits
        class CsvBuilder
        {
        public:
            explicit CsvBuilder(std::initializer_list<const char *> header)
            {
                bool first = true;
                for (const char *h : header)
                {
                    if (!first)
                        text_ += ',';
                    text_ += h;
                    first = false;
                }
                text_ += '\n';
            }

            CsvBuilder &cell(double v) { return raw(format_double(v)); }
            CsvBuilder &cell(std::size_t v) { return raw(std::to_string(v)); }
            CsvBuilder &cell(const std::string &v) { return raw(v); }
            CsvBuilder &cell(bool v) { return raw(v ? "true" : "false"); }
            void end_row()
            {
                text_ += '\n';
                fresh_ = true;
            }
            void comment(const std::string &line) { text_ += "# " + line + '\n'; }
            std::string str() && { return std::move(text_); }

        private:
            CsvBuilder &raw(const std::string &v)
            {
                if (!fresh_)
                    text_ += ',';
                text_ += v;
                fresh_ = false;
                return *this;
            }
            std::string text_;
            bool fresh_ = true;
        };

        std::string sidelobe_text(const std::optional<double> &db)
        {
            return db ? format_double(*db) : std::string("none");
        }

        std::string path_for(const std::string &prefix, const std::string &name) { return prefix + "_" + name; }

        std::string bce_csv(const char *parameter, const BceTable &t)
        {
            CsvBuilder csv{parameter, "bce_fda", "bce_gaussian", "bce_rect"};
            for (std::size_t i = 0; i < t.parameter.size(); ++i)
            {
                csv.cell(t.parameter[i]).cell(t.fda[i]).cell(t.gaussian[i]).cell(t.rect[i]);
                csv.end_row();
            }
            return std::move(csv).str();
        }

        std::string normalized_cut_csv(const std::vector<double> &axis, const std::vector<double> &cut)
        {
            CsvBuilder csv{"range_m", "magnitude_norm", "magnitude_db"};
            for (std::size_t i = 0; i < axis.size(); ++i)
            {
                csv.cell(axis[i]).cell(cut[i]).cell(20.0 * std::log10(std::max(cut[i], relative_deviation_floor)));
                csv.end_row();
            }
            return std::move(csv).str();
        }
    }

    void write_run(const std::string &prefix, const std::string &command, const Scenario &scenario,
                   std::vector<OutputFile> files, const json &extra)
    {
        json outputs = json::array();
        for (const auto &file : files)
        {
            const std::filesystem::path path = path_for(prefix, file.name);
            if (path.has_parent_path())
                std::filesystem::create_directories(path.parent_path());
            std::ofstream out(path, std::ios::binary);
            out << file.content;
            if (!out)
                throw std::runtime_error("cannot write " + path.string());
            // names are relative to the prefix so manifests do not depend on where outputs were written
            outputs.push_back({{"name", file.name},
                               {"bytes", file.content.size()},
                               {"fnv1a64", to_hex(fnv1a64(file.content))}});
        }

        const json manifest = {
            {"schema", "fdabeam.manifest/1"},
            {"tool", "fdabeam"},
            {"version", tool_version},
            {"command", command},
            {"config_digest", to_hex(fnv1a64(scenario.expanded.dump()))},
            {"array_digest", config_digest(scenario.array, scenario.model, scenario.options)},
            {"constants", {{"speed_of_light_m_per_s", speed_of_light}}},
            {"seed", scenario.seed},
            {"model", to_string(scenario.model)},
            {"expanded_config", scenario.expanded},
            {"results", extra},
            {"outputs", outputs},
        };
        const std::filesystem::path path = path_for(prefix, "manifest.json");
        std::ofstream out(path, std::ios::binary);
        out << manifest.dump(2) << '\n';
        if (!out)
            throw std::runtime_error("cannot write " + path.string());
    }

    std::string cube_csv(const PatternCube &cube)
    {
        const auto &g = cube.grid;
        const double peak = cube.max_magnitude();
        CsvBuilder csv{"range_m", "angle_deg", "time_s", "magnitude", "magnitude_db"};
        for (std::size_t i = 0; i < g.n_range(); ++i)
            for (std::size_t j = 0; j < g.n_angle(); ++j)
                for (std::size_t k = 0; k < g.n_time(); ++k)
                {
                    const double m = cube.at(i, j, k);
                    const double ratio = peak > 0.0 ? m / peak : 0.0;
                    csv.cell(g.range_axis[i]).cell(rad_to_deg(g.angle_axis[j])).cell(g.time_axis[k]).cell(m);
                    csv.cell(20.0 * std::log10(std::max(ratio, relative_deviation_floor)));
                    csv.end_row();
                }
        return std::move(csv).str();
    }

    int cmd_simulate(const Scenario &scenario, const RunOptions &run, std::ostream &log)
    {
        const auto cube = evaluate_cube(scenario.array, scenario.grid, scenario.model, scenario.options, run.policy);
        write_run(run.prefix, "simulate", scenario, {{"cube.csv", cube_csv(cube)}},
                  {{"points", cube.magnitudes.size()}, {"max_magnitude", cube.max_magnitude()}});
        log << "simulate: " << cube.magnitudes.size() << " grid points -> " << run.prefix << "_cube.csv\n";
        return exit_ok;
    }

    int cmd_compare_fig1(const Scenario &scenario, const RunOptions &run, std::ostream &log)
    {
        const auto r = run_compare_fig1(scenario, run.policy);

        CsvBuilder summary{"pattern", "peak_magnitude", "fwhm_m", "expected_fwhm_m", "sidelobe_db", "bce_fwhm_target",
                           "bce_box"};
        for (const auto &s : r.summary)
        {
            double expected = std::nan("");
            if (s.name == "gaussian")
                expected = r.expected_gaussian_fwhm;
            else if (s.name == "rect")
                expected = speed_of_light * scenario.fig1.rect_duration;
            summary.cell(s.name).cell(s.peak_magnitude).cell(s.fwhm).cell(expected).cell(sidelobe_text(s.sidelobe_db));
            summary.cell(s.bce_fwhm_target).cell(s.bce_box);
            summary.end_row();
        }

        std::vector<OutputFile> files = {
            {"fig1_fda.csv", normalized_cut_csv(r.range_axis, r.fda)},
            {"fig1_gaussian.csv", normalized_cut_csv(r.range_axis, r.gaussian)},
            {"fig1_rect.csv", normalized_cut_csv(r.range_axis, r.rect)},
            {"fig1_summary.csv", std::move(summary).str()},
            {"fig1_bce_width.csv", bce_csv("target_width_m", r.by_width)},
            {"fig1_bce_center.csv", bce_csv("target_center_m", r.by_center)},
            {"fig1_bce_time.csv", bce_csv("time_offset_s", r.by_time)},
        };

        const auto &g = r.summary[1];
        const double rel_err = std::abs(g.fwhm - r.expected_gaussian_fwhm) / r.expected_gaussian_fwhm;
        const bool consistent = rel_err <= 5e-3 && !g.sidelobe_db.has_value();

        write_run(run.prefix, "compare-fig1", scenario, std::move(files),
                  {{"t0_s", r.t0},
                   {"expected_gaussian_fwhm_m", r.expected_gaussian_fwhm},
                   {"gaussian_fwhm_m", g.fwhm},
                   {"box_range_width_m", r.box_range_width},
                   {"box_angle_width_rad", r.box_angle_width},
                   {"claims_consistent", consistent}});

        log << "compare-fig1 at t0 = " << format_double(r.t0) << " s (pulse peak at window center)\n";
        for (const auto &s : r.summary)
            log << "  " << s.name << ": fwhm " << format_double(s.fwhm) << " m, sidelobe "
                << sidelobe_text(s.sidelobe_db) << (s.sidelobe_db ? " dB" : "") << ", bce(fwhm target) "
                << format_double(s.bce_fwhm_target) << ", bce(box) " << format_double(s.bce_box) << '\n';
        log << "  gaussian fwhm vs c*FDHM = " << format_double(r.expected_gaussian_fwhm) << " m: relative error "
            << format_double(rel_err) << '\n';
        return consistent ? exit_ok : exit_invariant_violated;
    }

    int cmd_check_invariance(const Scenario &scenario, const RunOptions &run, std::ostream &log)
    {
        const auto r = run_check_invariance(scenario, run.policy);
        const auto &rep = r.report;

        CsvBuilder csv{"model", "criterion", "max_relative_deviation", "max_peak_normalized_deviation", "checked_value",
                       "tolerance", "shift_law_holds", "samples_checked", "witness_range_m", "witness_angle_deg",
                       "witness_time_s", "witness_dt_s", "offsets_nonzero", "probe_window_s", "fixed_point_swing_db",
                       "exit_code"};
        csv.cell(std::string(to_string(scenario.model))).cell(r.criterion).cell(rep.max_relative_deviation);
        csv.cell(rep.max_peak_normalized_deviation).cell(r.checked_value).cell(r.tolerance).cell(r.shift_law_holds);
        csv.cell(rep.samples_checked).cell(rep.witness.point.range).cell(rad_to_deg(rep.witness.point.angle));
        csv.cell(rep.witness.time).cell(rep.witness_dt).cell(r.offsets_nonzero).cell(r.probe.window);
        csv.cell(r.probe.swing_db).cell(static_cast<std::size_t>(r.exit_code));
        csv.end_row();

        write_run(run.prefix, "check-invariance", scenario, {{"invariance.csv", std::move(csv).str()}},
                  {{"exit_code", r.exit_code},
                   {"max_relative_deviation", rep.max_relative_deviation},
                   {"fixed_point_swing_db", r.probe.swing_db}});

        log << "check-invariance (" << to_string(scenario.model) << "): " << rep.samples_checked << " shifted samples\n"
            << "  max relative deviation        " << format_double(rep.max_relative_deviation) << '\n'
            << "  max peak-normalized deviation " << format_double(rep.max_peak_normalized_deviation) << '\n'
            << "  " << r.criterion << ": " << format_double(r.checked_value) << " <= " << format_double(r.tolerance)
            << (r.shift_law_holds ? "  holds\n" : "  VIOLATED\n")
            << "  fixed-point swing over " << format_double(r.probe.window) << " s: " << format_double(r.probe.swing_db)
            << " dB" << (r.offsets_nonzero ? "" : " (no frequency offsets: degenerate probe)") << '\n';
        return r.exit_code;
    }

    int cmd_track_peak(const Scenario &scenario, const RunOptions &run, std::ostream &log)
    {
        const auto r = run_track_peak(scenario, run.policy);
        const auto &t = r.track;

        CsvBuilder csv{"time_s", "peak_range_m", "peak_angle_deg", "peak_magnitude"};
        for (const auto &s : t.samples)
        {
            csv.cell(s.time).cell(s.range).cell(rad_to_deg(s.angle)).cell(s.magnitude);
            csv.end_row();
        }
        csv.comment("fitted_speed_m_per_s=" + format_double(t.fitted_speed));
        csv.comment("fitted_speed_over_c=" + format_double(t.fitted_speed / speed_of_light));
        csv.comment("angle_drift_deg=" + format_double(rad_to_deg(t.angle_drift)));
        csv.comment(std::string("degenerate=") + (t.degenerate ? "true" : "false"));

        std::vector<OutputFile> files = {{"track.csv", std::move(csv).str()}};
        if (!r.sweep.empty())
        {
            CsvBuilder sweep{"duration_s", "angle_drift_deg", "first_peak_angle_deg", "last_peak_angle_deg"};
            for (const auto &row : r.sweep)
            {
                sweep.cell(row.duration).cell(rad_to_deg(row.angle_drift)).cell(rad_to_deg(row.first_angle));
                sweep.cell(rad_to_deg(row.last_angle));
                sweep.end_row();
            }
            files.push_back({"track_sweep.csv", std::move(sweep).str()});
        }
        write_run(run.prefix, "track-peak", scenario, std::move(files),
                  {{"fitted_speed_m_per_s", t.fitted_speed},
                   {"fitted_speed_over_c", t.fitted_speed / speed_of_light},
                   {"angle_drift_rad", t.angle_drift},
                   {"degenerate", t.degenerate}});

        log << "track-peak: " << t.samples.size() << " instants, fitted speed " << format_double(t.fitted_speed)
            << " m/s (" << format_double(t.fitted_speed / speed_of_light) << " c), angle drift "
            << format_double(rad_to_deg(t.angle_drift)) << " deg\n";
        if (t.degenerate)
            log << "  note: flat pattern slice(s); peak position is not defined\n";
        for (const auto &row : r.sweep)
            log << "  sweep duration " << format_double(row.duration) << " s: angle drift "
                << format_double(rad_to_deg(row.angle_drift)) << " deg\n";
        return exit_ok;
    }
}
