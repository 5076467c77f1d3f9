// Copyright 2026 The lindff Authors
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

// End-to-end driver checks: byte-identical reruns, exit codes, config file
// handling. Invoked as: test_cli <path-to-lindff_cli>.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

int run(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) return "<missing " + path.string() + ">";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: test_cli <path-to-lindff_cli>\n";
        return 1;
    }
    const std::string cli = argv[1];
    const fs::path dir = fs::temp_directory_path() / "lindff_cli_tests";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string d = dir.string();

    // Deterministic experiment runs without a seed and passes its checks.
    const int sf = run(cli + " --experiment specfun-check --out " + d + "/sf > " + d + "/sf.log");
    expect(sf == 0, "specfun-check exits 0 (got " + std::to_string(sf) + ")");
    expect(fs::exists(dir / "sf.csv"), "specfun-check wrote sf.csv");
    expect(fs::exists(dir / "sf.manifest.json"), "specfun-check wrote manifest");
    const std::string sf_log = slurp(dir / "sf.log");
    expect(sf_log.find("wrote " + d + "/sf.csv") != std::string::npos, "stdout lists outputs");
    expect(sf_log.find("[PASS] all_within_tolerance") != std::string::npos, "stdout lists checks");

    // Same seed, two runs: the data files must be byte identical.
    const std::string scatter = " --experiment spectrum-scatter --seed 5 --set dim=6 --set n_samples=2";
    expect(run(cli + scatter + " --out " + d + "/s1 > /dev/null") == 0, "scatter run 1 exits 0");
    expect(run(cli + scatter + " --out " + d + "/s2 > /dev/null") == 0, "scatter run 2 exits 0");
    const std::string s1 = slurp(dir / "s1.csv");
    expect(s1 == slurp(dir / "s2.csv"), "seeded reruns byte identical");
    expect(s1.find("re,im\n") == 0, "scatter csv header");

    // Config file + overrides.
    {
        std::ofstream cfg(dir / "cfg.json");
        cfg << R"({"experiment":"density","kind":"mp","t_min":0.1,"t_max":3.9,)"
            << R"("t_points":8,"t_log":false,"out":")" << d << R"(/unused"})";
    }
    const int cfgrc =
        run(cli + " --config " + d + "/cfg.json --out " + d + "/dens > /dev/null");
    expect(cfgrc == 0, "config file run exits 0 (got " + std::to_string(cfgrc) + ")");
    expect(fs::exists(dir / "dens.csv"), "--out overrides the config file path");
    expect(!fs::exists(dir / "unused.csv"), "config file out path is not used when overridden");

    // Error paths exit 1 before writing anything.
    expect(run(cli + " --experiment spectrum-scatter --out " + d + "/noseed 2> /dev/null") == 1,
           "missing seed exits 1");
    expect(!fs::exists(dir / "noseed.csv"), "failed run writes no csv");
    expect(run(cli + " --experiment density --set bogus=1 --out " + d + "/bogus 2> /dev/null") == 1,
           "unknown --set key exits 1");
    expect(run(cli + " --experiment no-such-thing --seed 1 --out " + d + "/nope 2> /dev/null") == 1,
           "unknown experiment exits 1");

    // A failing boolean check exits 2: duplicate dims cannot strictly decrease.
    const int rc2 = run(cli +
                        " --experiment self-averaging --seed 3 --set dims=4,4"
                        " --set n_samples=4 --set t_min=1 --out " +
                        d + "/flat > " + d + "/flat.log");
    expect(rc2 == 2, "failed check exits 2 (got " + std::to_string(rc2) + ")");
    expect(slurp(dir / "flat.log").find("[FAIL] variance_strictly_decreasing") != std::string::npos,
           "failed check is reported on stdout");

    if (g_failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " check(s) failed\n";
    return 1;
}
