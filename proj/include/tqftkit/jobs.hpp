#pragma once

#include <string>

#include "tqftkit/toml_lite.hpp"

namespace tqftkit {

inline constexpr const char* kVersion = "0.1.0";

// One command plus its validated payload. `input_hash` fingerprints the raw
// job text (FNV-1a 64) and is echoed into every result document.
struct JobSpec {
  std::string command;
  TomlDoc payload;
  std::string input_hash;
};

// Parses and schema-checks a TOML job document.
// Throws ParseError for malformed TOML and SchemaError when a well-formed
// document does not fit its command: unknown command or key, wrong shape,
// non-reduced fraction. Messages carry source line numbers where possible.
JobSpec parse_job(const std::string& text);

struct JobOptions {
  bool verify = false;   // run every applicable cross-check, fail loudly
  bool parallel = true;  // use the parallel folds
  int json_indent = 2;   // -1 for compact output
};

// Runs a validated job and renders the JSON result document. Deterministic:
// identical input and options give byte-identical output. Domain failures
// propagate as Error with machine-readable codes.
std::string run_job(const JobSpec& job, const JobOptions& opts = {});

std::string fnv1a64_hex(const std::string& data);

}  // namespace tqftkit
