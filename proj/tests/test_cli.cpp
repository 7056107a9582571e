// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mimocap Authors
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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mimocap/cli.hpp"
#include "mimocap/io.hpp"

using namespace mimocap;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"mimocap"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("mimocap-cli-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("capacity subcommand") {
  auto r = run({"capacity", "--model", "shannon", "--ntx", "1", "--nrx", "1", "--snr-db",
                "4.771212547196624", "--bandwidth", "1"});
  CHECK(r.code == kExitOk);
  CHECK(std::stod(r.out) == doctest::Approx(2.0).epsilon(1e-12));

  r = run({"capacity", "--model", "product_gain", "--ntx", "2", "--nrx", "2", "--snr-db", "0"});
  CHECK(r.code == kExitOk);
  CHECK(std::stod(r.out) == doctest::Approx(std::log2(5.0)));

  r = run({"capacity", "--model", "array_gain", "--ntx", "2", "--nrx", "2", "--snr-db", "0"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("array_gain") != std::string::npos);
}

TEST_CASE("validation failures name the flag") {
  auto r = run({"capacity", "--model", "shannon", "--ntx", "0", "--snr-db", "3"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("--ntx") != std::string::npos);

  r = run({"capacity", "--model", "bogus", "--snr-db", "3"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("--model") != std::string::npos);

  r = run({"capacity", "--model", "shannon", "--snr-db", "3", "--bandwidth", "-1"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("--bandwidth") != std::string::npos);

  r = run({"capacity", "--model", "shannon", "--snr-db", "abc"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("--snr-db") != std::string::npos);

  r = run({"combine", "--scheme", "mrc", "--amplitudes", "1,-2"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("--amplitudes") != std::string::npos);

  r = run({"ergodic", "--snr-db", "0", "--trials", "0"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("--trials") != std::string::npos);

  r = run({"sweep", "--series", "shannon:1x1", "--points", "1"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("points") != std::string::npos);
}

TEST_CASE("unknown subcommands and flags print usage and exit 1") {
  auto r = run({"frobnicate"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("Usage") != std::string::npos);

  r = run({"capacity", "--model", "shannon", "--snr-db", "1", "--antennas", "3"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("--antennas") != std::string::npos);

  r = run({});
  CHECK(r.code == kExitValidation);

  r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("figure") != std::string::npos);
}

TEST_CASE("figure writes csv and optional plot script") {
  const auto dir = scratch_dir("figure");
  const auto csv = dir / "f9.csv";
  auto r = run({"figure", "figure9", "--out", csv.string(), "--plot"});
  CHECK(r.code == kExitOk);
  const auto body = slurp(csv);
  CHECK(body.rfind("snr_db,siso_1x1_shannon,miso_2x1_array_gain,miso_3x1_array_gain,"
                   "mimo_2x2_product_gain,mimo_3x3_product_gain\n",
                   0) == 0);
  CHECK(fs::exists(dir / "f9.gp"));
  CHECK(slurp(dir / "f9.gp").find(csv.generic_string()) != std::string::npos);

  r = run({"figure", "figure8"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("snr_db,siso_1x1_shannon,", 0) == 0);

  r = run({"figure", "figure8", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"preset\": \"figure8\"") != std::string::npos);

  r = run({"figure", "figure12"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("figure7") != std::string::npos);

  r = run({"figure", "figure8", "--plot"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("--plot") != std::string::npos);
}

TEST_CASE("unwritable output exits 2") {
  const auto r = run({"figure", "figure7", "--out", "/nonexistent-mimocap-dir/f7.csv"});
  CHECK(r.code == kExitIo);
  CHECK(r.err.find("/nonexistent-mimocap-dir/f7.csv") != std::string::npos);
  CHECK(run({"sweep", "--config", "/nonexistent-mimocap-dir/run.json"}).code == kExitIo);
}

TEST_CASE("relative output goes under the output directory variable") {
  const auto dir = scratch_dir("env");
  ::setenv(kOutputDirEnv, dir.c_str(), 1);
  const auto r = run({"figure", "figure7", "--out", "f7.csv"});
  ::unsetenv(kOutputDirEnv);
  CHECK(r.code == kExitOk);
  CHECK(fs::exists(dir / "f7.csv"));
}

TEST_CASE("check exits 0 on pass and 3 on ordering failure") {
  auto r = run({"check", "figure9"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS: 81/81") != std::string::npos);

  r = run({"check", "figure8", "--order", "0,1,2,3"});
  CHECK(r.code == kExitOrdering);
  CHECK(r.out.find("FAIL: 0/81") != std::string::npos);

  r = run({"check", "figure8", "--order", "0,9"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("--order") != std::string::npos);
}

TEST_CASE("sweep from a config file with flag overrides") {
  const auto dir = scratch_dir("sweep");
  const auto config = dir / "run.json";
  {
    std::ofstream f(config);
    f << R"({"snr_start_db": 0, "snr_stop_db": 10, "points": 2, "series": ["shannon:1x1"]})";
  }
  auto r = run({"sweep", "--config", config.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "snr_db,siso_1x1_shannon\n0,1\n10,3.4594316186372978\n");

  r = run({"sweep", "--config", config.string(), "--points", "3", "--series",
           "shannon:1x1,stc:2x2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "snr_db,siso_1x1_shannon,mimo_2x2_stc\n0,1,2\n5,2.057373208606795,"
                 "4.11474641721359\n10,3.4594316186372978,6.9188632372745955\n");

  {
    std::ofstream f(config);
    f << R"({"series": ["shannon:1x1"], "colour": "red"})";
  }
  r = run({"sweep", "--config", config.string()});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("colour") != std::string::npos);
}

TEST_CASE("ergodic and combine subcommands") {
  auto r = run({"ergodic", "--snr-db", "0", "--trials", "20000", "--seed", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("trials=20000\nseed=4\n") != std::string::npos);
  CHECK(r.out == run({"ergodic", "--snr-db", "0", "--trials", "20000", "--seed", "4",
                      "--workers", "3"}).out);

  r = run({"combine", "--scheme", "maximal_ratio", "--amplitudes", "1,2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("snr=5\n") != std::string::npos);
  CHECK(r.out.find("capacity=2.584962500721156") != std::string::npos);

  r = run({"combine", "--scheme", "selection", "--amplitudes", "1,2", "--tx-power", "0"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("--tx-power") != std::string::npos);
}

TEST_CASE("gap-report is deterministic and states its scope") {
  const auto a = run({"gap-report", "--trials", "2000", "--seed", "6", "--workers", "1"});
  const auto b = run({"gap-report", "--trials", "2000", "--seed", "6", "--workers", "4"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("No quantitative agreement") != std::string::npos);
  CHECK(a.out.find("\n4x4,20,") != std::string::npos);
}
