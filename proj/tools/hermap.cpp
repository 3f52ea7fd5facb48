// Copyright 2026 The hermap Authors
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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hermap/commands.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string command_list() {
  std::string out;
  for (const auto& c : hermap::command_names()) out += (out.empty() ? "" : ", ") + c;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze Hermitian-preserving maps between matrix algebras"};
  std::string command;
  std::string input = "-";
  hermap::CommandOptions options;
  app.add_option("command", command, "One of: " + command_list())->required();
  app.add_option("--input", input, "Map document (JSON); '-' reads standard input");
  app.add_option("--tol", options.tol, "Set eig/psd/recon tolerances to one absolute value");
  app.add_option("--tol-eig", options.tol_eig, "Eigenvalue zero threshold");
  app.add_option("--tol-psd", options.tol_psd, "Allowed negative eigenvalue for PSD checks");
  app.add_option("--tol-recon", options.tol_recon, "Max-entry reconstruction error");
  app.add_option("--seed", options.seed, "Random seed for verify")->capture_default_str();
  app.add_option("--samples", options.samples, "Random inputs for verify")->capture_default_str();
  app.add_option("--partition", options.partition, "Block partition 'm1,m2,.../n1,n2,...'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hermap::kExitUsage;
  }

  const auto emit = [](const hermap::CommandResult& result) {
    std::cout << result.report.dump(2) << '\n';
    if (result.report.contains("error")) std::cerr << "hermap: " << result.report["error"]["message"].get<std::string>() << '\n';
    return result.exit_code;
  };

  std::string text;
  if (input == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream file(input);
    if (!file) {
      std::cerr << "hermap: cannot open " << input << '\n';
      return hermap::kExitUsage;
    }
    text = read_all(file);
  }

  try {
    const auto doc = hermap::parse_map_document(text);
    return emit(hermap::run_command(command, doc, options));
  } catch (const hermap::ArgumentError& e) {
    return emit({hermap::kExitUsage, {{"error", {{"kind", "argument"}, {"message", e.what()}}}}});
  }
}
