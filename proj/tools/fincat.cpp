// fincat: command-line front end over the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fincat/fincat.h"

namespace {

constexpr const char* kVerbs =
    "Commands:\n"
    "  validate NAME\n"
    "  check monic|epic|iso CATEGORY ARROW\n"
    "  check functor|nattrans NAME\n"
    "  check adjunction F G [UNIT COUNIT]\n"
    "  check preserves-limit FUNCTOR DIAGRAM\n"
    "  limit DIAGRAM | colimit DIAGRAM\n"
    "  finset product|coproduct|exp A B\n"
    "  finset equalizer|coequalizer|pullback|pushout MAP MAP\n"
    "  finset curry A C MAP | name MAP | members A | classifier\n"
    "  finset char A ELEMENT... | invimage MAP ELEMENT... | subalg A | power A\n"
    "  slice CATEGORY OBJECT | arrowcat CATEGORY\n"
    "  topos check|kinds CATEGORY\n"
    "  fullsubcat SIZE...\n"
    "A CATEGORY is a declared name or fullsubcat:SIZE,SIZE,...; finite sets may be\n"
    "given as sizes.\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite category workbench"};
  app.footer(kVerbs);
  bool json = false;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::string file;
  std::vector<std::string> words;
  fincat_options options;
  fincat_options_init(&options);
  seed = options.seed;

  app.add_flag("--json", json, "Emit the JSON report");
  app.add_option("--budget", budget, "Arrow and cone enumeration budget");
  app.add_option("--seed", seed, "Seed echoed in the report")->capture_default_str();
  app.add_option("-f,--file", file, "Specification file");
  app.add_option("command", words, "Command and its arguments")->required();
  app.positionals_at_end(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string text;
  if (!file.empty()) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      std::cerr << "fincat: cannot read " << file << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  options.json = json ? 1 : 0;
  options.budget = budget;
  options.seed = seed;
  std::vector<const char*> args;
  for (const auto& w : words) args.push_back(w.c_str());

  fincat_report* report = nullptr;
  if (fincat_run_text(text.data(), text.size(), static_cast<int>(args.size()), args.data(),
                      &options, &report) != FINCAT_OK) {
    std::cerr << "fincat: " << fincat_last_error() << "\n";
    return 2;
  }
  std::fputs(fincat_report_text(report), stdout);
  const int rc = fincat_report_exit_code(report);
  fincat_report_free(report);
  return rc;
}
