#ifndef FINCAT_FINCAT_H
#define FINCAT_FINCAT_H

/* C interface to the finite category workbench. All handles are opaque; all
 * strings are UTF-8 and NUL-terminated. Functions never throw. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FINCAT_API __declspec(dllexport)
#else
#define FINCAT_API __attribute__((visibility("default")))
#endif

typedef enum fincat_status {
  FINCAT_OK = 0,
  FINCAT_USAGE_ERROR = 2,
  FINCAT_PARSE_ERROR = 3,
  FINCAT_CAPACITY_ERROR = 4,
  FINCAT_CONTRACT_ERROR = 5,
  FINCAT_STRUCTURAL_ERROR = 6,
  FINCAT_INVALID_ARGUMENT = 7,
  FINCAT_INTERNAL_ERROR = 8
} fincat_status;

typedef struct fincat_document fincat_document;
typedef struct fincat_report fincat_report;

typedef struct fincat_parse_error {
  int code;       /* 1xx lexical, 2xx syntax, 3xx resolution */
  size_t line;    /* 1-based */
  size_t column;  /* 1-based, bytes */
} fincat_parse_error;

typedef struct fincat_options {
  int json;              /* nonzero: report text is JSON */
  size_t budget;         /* 0: default; otherwise arrow and cone budget */
  uint64_t seed;
} fincat_options;

FINCAT_API const char* fincat_version(void);

/* Message of the last failing call on this thread, or "". */
FINCAT_API const char* fincat_last_error(void);

FINCAT_API void fincat_options_init(fincat_options* options);

/* On FINCAT_PARSE_ERROR, *error (if non-null) receives the position. */
FINCAT_API fincat_status fincat_document_parse(const char* text, size_t length,
                                               fincat_document** out,
                                               fincat_parse_error* error);
FINCAT_API void fincat_document_free(fincat_document* doc);
FINCAT_API size_t fincat_document_declaration_count(const fincat_document* doc);

/* Canonical text; release with fincat_string_free. */
FINCAT_API fincat_status fincat_document_format(const fincat_document* doc, char** out);
FINCAT_API void fincat_string_free(char* s);

/* Runs one command (argv[0] is the verb). doc may be null for an empty
 * document. Returns FINCAT_OK whenever a report was produced; the command's
 * own outcome is in fincat_report_exit_code. */
FINCAT_API fincat_status fincat_run(const fincat_document* doc, int argc,
                                    const char* const* argv,
                                    const fincat_options* options,
                                    fincat_report** out);

/* Parses text and runs the command; parse errors become exit-2 reports. */
FINCAT_API fincat_status fincat_run_text(const char* text, size_t length, int argc,
                                         const char* const* argv,
                                         const fincat_options* options,
                                         fincat_report** out);

/* 0 pass, 1 check failed, 2 usage/parse/capacity/contract error. */
FINCAT_API int fincat_report_exit_code(const fincat_report* report);
/* Rendered as JSON or human text according to the options used. */
FINCAT_API const char* fincat_report_text(const fincat_report* report);
FINCAT_API const char* fincat_report_json(const fincat_report* report);
FINCAT_API void fincat_report_free(fincat_report* report);

#ifdef __cplusplus
}
#endif

#endif
