// Copyright 2026 The diraccat Authors
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

// diraccat RUN.cfg [--xi 0.25] [--output out.csv] ...
//
// Exit status: 0 success, 2 configuration error, 3 truncation guard,
// 4 i/o error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "diraccat/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Relativistic Landau level / Dirac cat simulator"};
  std::string config_path;
  app.add_option("config", config_path, "key = value run configuration")->required();

  // every configuration key can be overridden from the command line
  const std::map<std::string, std::string> flags{
      {"command", "--command"}, {"xi", "--xi"},           {"z_abs", "--z-abs"},
      {"pz", "--pz"},           {"cutoff", "--cutoff"},   {"t_max", "--t-max"},
      {"n_steps", "--n-steps"}, {"output", "--output"},   {"branch", "--branch"},
      {"resolution", "--resolution"}};
  std::map<std::string, std::string> overrides;
  for (const auto& [key, flag] : flags) {
    app.add_option_function<std::string>(
        flag, [&overrides, key = key](const std::string& v) { overrides[key] = v; },
        "override '" + key + "'");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return diraccat::kExitConfig;
  }

  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "i/o error: cannot read config '" << config_path << "'\n";
    return diraccat::kExitIo;
  }

  diraccat::RunConfig cfg;
  try {
    auto entries = diraccat::read_config_entries(in);
    for (const auto& [key, value] : overrides) entries[key] = value;
    cfg = diraccat::make_run_config(entries);
  } catch (const diraccat::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return diraccat::kExitConfig;
  }
  return diraccat::run(cfg, std::cerr);
}
