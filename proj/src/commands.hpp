#pragma once

// Command dispatch behind the C API. Every command produces one JSON report;
// the human-readable text is rendered from that same report.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fincat/config.hpp"
#include "fincat/dsl.hpp"

namespace fincat::cli {

inline constexpr int kSchemaVersion = 1;

struct Options {
  bool json = false;
  Budget budget;
  std::uint64_t seed = kDefaultSeed;
};

struct Report {
  nlohmann::ordered_json body;
  int exit_code = 0;
};

/// Runs one command against a parsed document (may be empty).
Report run_command(const dsl::SpecDocument& doc, const std::vector<std::string>& args,
                   const Options& options);

/// Parses `text` first; parse errors become exit-2 reports.
Report run_text(std::string_view text, const std::vector<std::string>& args,
                const Options& options);

std::string render_human(const nlohmann::ordered_json& body);
std::string render(const Report& report, bool json);

}  // namespace fincat::cli
