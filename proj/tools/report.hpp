#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ngcat::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 1;
  int l = 0;
  int kmax = 3;
  int modulus = 36;
  std::uint64_t seed = 42;
  std::size_t samples = 1'000'000;
};

struct Verdict {
  std::string invariant;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::vector<Verdict> verdicts;
  double runtime_seconds = 0.0;

  void check(std::string invariant, bool pass, std::string detail = "");
  bool all_pass() const;
};

/// Throws UsageError for parameters outside the supported ranges.
void validate(const Options& o);

Report cmd_verify_cocycles(const Options& o);
Report cmd_category(const Options& o);
Report cmd_indicators(const Options& o);
Report cmd_invertibles(const Options& o);
/// Every (n, l) with n <= o.n and l in 0..5.
Report cmd_full(const Options& o);
/// G_n, H_n and ω_n^l as JSON documents.
Report cmd_export(const Options& o);
/// Group document from a file: axioms and fingerprint.
Report cmd_inspect_group(const std::string& path);

/// Dispatches by command name and records the runtime.
Report run(const std::string& command, const Options& o);

/// One JSON document; the runtime is included only when `timing` is set so
/// that default output is byte-stable.
std::string render_json(const Report& r, bool timing = false);
/// Tab-separated flattening: parameter lines, a header plus one line per
/// row, then one line per verdict.
std::string render_tsv(const Report& r, bool timing = false);

}  // namespace ngcat::cli
