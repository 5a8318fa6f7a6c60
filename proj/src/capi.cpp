#include "fincat/fincat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fincat/dsl.hpp"

struct fincat_document {
  fincat::dsl::SpecDocument doc;
};

struct fincat_report {
  fincat::cli::Report report;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;

fincat_status set_error(fincat_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

fincat_status status_of(fincat::ErrorCode code) {
  switch (code) {
    case fincat::ErrorCode::structural:
    case fincat::ErrorCode::composability: return FINCAT_STRUCTURAL_ERROR;
    case fincat::ErrorCode::contract: return FINCAT_CONTRACT_ERROR;
    case fincat::ErrorCode::capacity: return FINCAT_CAPACITY_ERROR;
    case fincat::ErrorCode::parse: return FINCAT_PARSE_ERROR;
    case fincat::ErrorCode::usage: return FINCAT_USAGE_ERROR;
  }
  return FINCAT_INTERNAL_ERROR;
}

fincat::cli::Options to_options(const fincat_options* o) {
  fincat::cli::Options out;
  if (!o) return out;
  out.json = o->json != 0;
  out.seed = o->seed;
  if (o->budget != 0) {
    out.budget.max_arrows = o->budget;
    out.budget.max_cones = o->budget;
  }
  return out;
}

template <typename F>
fincat_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const fincat::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FINCAT_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(FINCAT_INTERNAL_ERROR, e.what());
  } catch (...) {
    return set_error(FINCAT_INTERNAL_ERROR, "unknown failure");
  }
}

fincat_status finish(fincat::cli::Report r, const fincat::cli::Options& o, fincat_report** out) {
  auto* rep = new fincat_report{std::move(r), {}, {}};
  rep->json = fincat::cli::render(rep->report, true);
  rep->text = o.json ? rep->json : fincat::cli::render(rep->report, false);
  *out = rep;
  return FINCAT_OK;
}

std::vector<std::string> to_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 0; i < argc; ++i) args.emplace_back(argv[i] ? argv[i] : "");
  return args;
}

}  // namespace

extern "C" {

const char* fincat_version(void) { return "1.0.0"; }

const char* fincat_last_error(void) { return last_error.c_str(); }

void fincat_options_init(fincat_options* options) {
  if (!options) return;
  options->json = 0;
  options->budget = 0;
  options->seed = fincat::kDefaultSeed;
}

fincat_status fincat_document_parse(const char* text, size_t length, fincat_document** out,
                                    fincat_parse_error* error) {
  if (!out || (!text && length)) return set_error(FINCAT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (error) *error = fincat_parse_error{0, 0, 0};
  return guarded([&] {
    try {
      auto doc = fincat::dsl::parse_spec(std::string_view(text ? text : "", length));
      *out = new fincat_document{std::move(doc)};
      return FINCAT_OK;
    } catch (const fincat::dsl::ParseFailure& e) {
      if (error) *error = fincat_parse_error{e.error().code, e.error().line, e.error().column};
      return set_error(FINCAT_PARSE_ERROR, e.what());
    }
  });
}

void fincat_document_free(fincat_document* doc) { delete doc; }

size_t fincat_document_declaration_count(const fincat_document* doc) {
  return doc ? doc->doc.declarations.size() : 0;
}

fincat_status fincat_document_format(const fincat_document* doc, char** out) {
  if (!doc || !out) return set_error(FINCAT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto text = fincat::dsl::format_spec(doc->doc);
    char* s = static_cast<char*>(std::malloc(text.size() + 1));
    if (!s) throw std::bad_alloc();
    std::memcpy(s, text.c_str(), text.size() + 1);
    *out = s;
    return FINCAT_OK;
  });
}

void fincat_string_free(char* s) { std::free(s); }

fincat_status fincat_run(const fincat_document* doc, int argc, const char* const* argv,
                         const fincat_options* options, fincat_report** out) {
  if (!out || argc < 0 || (argc > 0 && !argv))
    return set_error(FINCAT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    static const fincat::dsl::SpecDocument empty;
    const auto o = to_options(options);
    return finish(fincat::cli::run_command(doc ? doc->doc : empty, to_args(argc, argv), o), o, out);
  });
}

fincat_status fincat_run_text(const char* text, size_t length, int argc, const char* const* argv,
                              const fincat_options* options, fincat_report** out) {
  if (!out || (!text && length) || argc < 0 || (argc > 0 && !argv))
    return set_error(FINCAT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto o = to_options(options);
    return finish(fincat::cli::run_text(std::string_view(text ? text : "", length),
                                        to_args(argc, argv), o),
                  o, out);
  });
}

int fincat_report_exit_code(const fincat_report* report) {
  return report ? report->report.exit_code : 2;
}

const char* fincat_report_text(const fincat_report* report) {
  return report ? report->text.c_str() : "";
}

const char* fincat_report_json(const fincat_report* report) {
  return report ? report->json.c_str() : "";
}

void fincat_report_free(fincat_report* report) { delete report; }

}  // extern "C"
