// Command-line front end: check, split, constitutive, reciprocity.
// Exit status: 0 all checks passed, 1 some check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "premetric/verify/commands.hpp"
#include "premetric/verify/config.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of premetric electrodynamics identities"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format = "text";

  for (const char* name : {"check", "split", "constitutive", "reciprocity"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "overrides the config seed");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "structured"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  premetric::verify::Report report;
  try {
    premetric::verify::RunConfig cfg = premetric::verify::load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (out_path.empty() && cfg.output) out_path = cfg.output->string();
    report = premetric::verify::run_command(command, cfg);
  } catch (const premetric::verify::ConfigError& e) {
    std::cerr << "premetric: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string body = format == "structured" ? report.to_structured() : report.to_text();
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << body)) {
      std::cerr << "premetric: cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  return report.all_passed() ? kExitPass : kExitFail;
}
