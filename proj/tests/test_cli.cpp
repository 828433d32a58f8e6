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

#include "doctest.h"

#include "fdabeam/hash.hpp"

#include "json.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace
{
    struct Run
    {
        int status = -1;
        std::string output;
    };

    fs::path scratch()
    {
        const auto dir = fs::temp_directory_path() / "fdabeam_cli_test";
        fs::create_directories(dir);
        return dir;
    }

    Run run(const std::string &args)
    {
        const auto log = scratch() / "log.txt";
        const std::string cmd = std::string(FDABEAM_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
        const int raw = std::system(cmd.c_str());
        Run r;
        r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
        std::ifstream in(log);
        std::stringstream ss;
        ss << in.rdbuf();
        r.output = ss.str();
        return r;
    }

    std::string slurp(const fs::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path write_config(const std::string &name, const std::string &text)
    {
        const auto path = scratch() / name;
        std::ofstream(path) << text;
        return path;
    }

    std::size_t data_rows(const std::string &csv)
    {
        std::size_t rows = 0;
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line))
            rows += !line.empty() && line[0] != '#';
        return rows;
    }
}

TEST_CASE("single-point grid gives one row at 0 dB")
{
    const auto cfg = write_config("one.json", R"({
        "schema": "fdabeam.scenario/1",
        "array": {"kind": "fda", "n_elements": 19, "carrier_hz": 1e10, "spacing_wavelengths": 0.5, "delta_f_hz": 1e4},
        "grid": {"range_m": 10000, "angle_deg": 0, "time_s": 0}
    })");
    const auto prefix = scratch() / "one";
    const auto r = run("simulate --config " + cfg.string() + " --out " + prefix.string());
    CHECK(r.status == 0);
    const auto csv = slurp(prefix.string() + "_cube.csv");
    CHECK(data_rows(csv) == 1);
    const auto last = csv.substr(csv.rfind(',', csv.size() - 2) + 1);
    CHECK(std::stod(last) == 0.0);
}

TEST_CASE("malformed configuration exits 2 and names the field")
{
    const auto cfg = write_config("bad.json", R"({
        "schema": "fdabeam.scenario/1",
        "array": {"kind": "fda", "n_elements": 19, "spacing_m": 0.015, "delta_f_hz": 1e4}
    })");
    const auto r = run("simulate --config " + cfg.string() + " --out " + (scratch() / "bad").string());
    CHECK(r.status == 2);
    CHECK(r.output.find("carrier_hz") != std::string::npos);

    const auto syntax = write_config("syntax.json", "{\n  \"schema\": \"fdabeam.scenario/1\",\n  \"array\": [\n");
    const auto s = run("simulate --config " + syntax.string() + " --out " + (scratch() / "bad").string());
    CHECK(s.status == 2);
    CHECK(s.output.find("line") != std::string::npos);

    CHECK(run("simulate --threads -1").status == 2);
    CHECK(run("no-such-command").status == 2);
    CHECK(run("simulate --config /nonexistent/x.json").status == 2);
}

TEST_CASE("runtime domain errors exit 3")
{
    const auto cfg = write_config("domain.json", R"({
        "schema": "fdabeam.scenario/1",
        "array": {"kind": "fda", "n_elements": 19, "carrier_hz": 1e10, "spacing_m": 0.015, "delta_f_hz": 1e4},
        "grid": {"range_m": {"values": [0.0, 0.01]}, "angle_deg": 60, "time_s": 0}
    })");
    CHECK(run("simulate --config " + cfg.string() + " --out " + (scratch() / "domain").string()).status == 3);
}

TEST_CASE("default simulate output is deterministic and matches its manifest")
{
    const auto a = scratch() / "det_a";
    const auto b = scratch() / "det_b";
    REQUIRE(run("simulate --out " + a.string()).status == 0);
    REQUIRE(run("simulate --threads 1 --out " + b.string()).status == 0);
    const auto csv = slurp(a.string() + "_cube.csv");
    CHECK(data_rows(csv) == 1001);
    CHECK(csv == slurp(b.string() + "_cube.csv"));
    CHECK(slurp(a.string() + "_manifest.json") == slurp(b.string() + "_manifest.json"));

    const auto manifest = json::parse(slurp(a.string() + "_manifest.json"));
    CHECK(manifest.at("command") == "simulate");
    for (const auto &entry : manifest.at("outputs"))
    {
        const auto content = slurp(a.string() + "_" + entry.at("name").get<std::string>());
        CHECK(entry.at("bytes").get<std::size_t>() == content.size());
        CHECK(entry.at("fnv1a64").get<std::string>() == fdabeam::to_hex(fdabeam::fnv1a64(content)));
    }
}

TEST_CASE("check-invariance exit codes")
{
    CHECK(run("check-invariance --out " + (scratch() / "inv").string()).status == 0);
    const auto cw = write_config("cw.json", R"({
        "schema": "fdabeam.scenario/1",
        "array": {"kind": "phased", "n_elements": 19, "carrier_hz": 1e10, "spacing_wavelengths": 0.5},
        "invariance": {"sample_count": 50}
    })");
    CHECK(run("check-invariance --config " + cw.string() + " --out " + (scratch() / "cw").string()).status == 4);
    CHECK(run("check-invariance --model exact --out " + (scratch() / "exact").string()).status == 0);
}
