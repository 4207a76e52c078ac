#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "report.hpp"

int main(int argc, char** argv) {
  using namespace ngcat::cli;
  CLI::App app{"Verification reports for group-theoretical near-group categories"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::string format = "json";
  std::string out_path;
  bool timing = false;
  app.add_option("--n", o.n, "Family index n (1..3); upper bound for `full`")->envname("NGCAT_N");
  app.add_option("--l", o.l, "Twist exponent l (0..5)")->envname("NGCAT_L");
  app.add_option("--kmax", o.kmax, "Largest indicator degree (1..12)")->envname("NGCAT_KMAX");
  app.add_option("--N", o.modulus, "Root-of-unity modulus (multiple of 36)")->envname("NGCAT_MODULUS");
  app.add_option("--seed", o.seed, "Seed for sampled checks")->envname("NGCAT_SEED");
  app.add_option("--samples", o.samples, "Sample count for sampled checks")->envname("NGCAT_SAMPLES");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->envname("NGCAT_FORMAT");
  app.add_option("--out", out_path, "Write the report to this file")->envname("NGCAT_OUT");
  app.add_flag("--timing", timing, "Include the runtime in the report")->envname("NGCAT_TIMING");

  std::string group_file;
  for (const char* name : {"verify-cocycles", "category", "indicators", "invertibles", "full", "export"}) {
    app.add_subcommand(name);
  }
  app.add_subcommand("inspect-group")->add_option("file", group_file, "Group JSON document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "full" && app.count("--n") == 0) o.n = 3;

  Report report;
  try {
    if (command == "inspect-group") {
      report = cmd_inspect_group(group_file);
    } else {
      validate(o);
      report = run(command, o);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = format == "tsv" ? render_tsv(report, timing) : render_json(report, timing);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return report.all_pass() ? 0 : 1;
}
