#pragma once

#include <string>

#include "idemcodes/codes.hpp"

namespace idemcodes {

struct RunConfig {
  std::string group_spec;
  std::string field_spec = "gf(2)";
  std::string command;  // ssp | wedderburn | idempotents | codes | search
  i64 budget = i64{1} << 24;
  std::string output = "text";  // text | json
  std::string export_path;
  int threads = 1;
};

/// Grammar: spec := cyclic(INT) | metacyclic(INT,INT,INT)
///               | direct(spec,spec) | cayley(PATH).
/// Parse errors carry the offending position.
Group parse_group_spec(const std::string& s);

/// "gf(q)" or "gf(p^k)"; q must be a prime power.
FieldCtxPtr parse_field_spec(const std::string& s);

struct RunResult {
  int exit_code = 0;
  std::string out;  // report body (text or JSON, per config)
};

/// Executes the pipeline for one configuration. Exit status 0 on success,
/// 2 when only unsupported components were found, 1 on errors.
RunResult run(const RunConfig& config);

}  // namespace idemcodes
