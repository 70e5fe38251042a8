#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vcmkit/commands.hpp"
#include "vcmkit/errors.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vcmkit::InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_summary(const nlohmann::json& report) {
  std::cout << report.value("command", "") << ':';
  for (const char* key : {"cohen_macaulay", "status", "reason", "d_squared_zero", "pdim_equals_codim"}) {
    if (report.contains(key)) std::cout << ' ' << key << '=' << report[key].dump();
  }
  if (report.contains("error")) std::cout << " error=" << report["error"].dump();
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using namespace vcmkit::cli;

  CLI::App app{"vcmkit: Cohen-Macaulay and virtually Cohen-Macaulay checks for complexes on products of projective spaces"};
  app.require_subcommand(1);

  std::string file;
  std::string field_text = "2";
  std::uint64_t budget = vcmkit::kDefaultSearchBudget;
  std::string out_dir = ".";
  std::string recheck_path;
  bool json_output = true;
  bool timing = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json,!--no-json", json_output, "Emit the JSON report (default) or a one-line summary");
    sub->add_flag("--timing", timing, "Include wall-clock time in the report");
  };
  const auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field_text, "Coefficient field: a prime p or Q")->capture_default_str();
  };

  auto* info = app.add_subcommand("info", "Combinatorial summary of a complex");
  info->add_option("file", file, "Complex document (JSON)")->required();
  add_common(info);

  auto* check = app.add_subcommand("check-cm", "Reisner and projective-dimension Cohen-Macaulay tests");
  check->add_option("file", file, "Complex document (JSON)")->required();
  add_field(check);
  add_common(check);

  auto* certify = app.add_subcommand("certify-balanced", "Shelling certificate for a pure balanced complex");
  certify->add_option("file", file, "Complex document (JSON)")->required();
  certify->add_option("--recheck", recheck_path, "Re-validate the certificate in a previous report");
  add_field(certify);
  add_common(certify);

  auto* search = app.add_subcommand("search", "Search irrelevant augmentations that make the complex Cohen-Macaulay");
  search->add_option("file", file, "Complex document (JSON)")->required();
  search->add_option("--budget", budget, "Maximum number of augmentations to test")->capture_default_str();
  search->add_option("--recheck", recheck_path, "Re-validate the certificate in a previous report");
  add_field(search);
  add_common(search);

  std::string fixture_name;
  auto* fixtures = app.add_subcommand("fixtures", "Write a built-in example complex and its matrices");
  fixtures->add_option("name", fixture_name, "glued-tetrahedra or eight-tetrahedra")->required();
  fixtures->add_option("--out", out_dir, "Output directory")->capture_default_str();
  add_common(fixtures);

  auto* verify = app.add_subcommand("verify-complex", "Check that consecutive matrices compose to zero");
  verify->add_option("file", file, "Matrix document (JSON)")->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  CommandResult result;
  try {
    CommandOptions options;
    options.field = vcmkit::CoefficientField::parse(field_text);
    options.budget = budget;
    options.timing = timing;
    if (!recheck_path.empty()) options.recheck_report = slurp(recheck_path);

    if (*info) {
      result = cmd_info(slurp(file));
    } else if (*check) {
      result = cmd_check_cm(slurp(file), options);
    } else if (*certify) {
      result = cmd_certify_balanced(slurp(file), options);
    } else if (*search) {
      result = cmd_search(slurp(file), options);
    } else if (*fixtures) {
      result = cmd_fixtures(fixture_name, out_dir);
    } else {
      result = cmd_verify_complex(slurp(file));
    }
  } catch (const vcmkit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (json_output) {
    std::cout << result.report.dump(2) << '\n';
  } else {
    print_summary(result.report);
  }
  if (result.report.contains("error")) std::cerr << "error: " << result.report["error"].dump() << '\n';
  return result.exit_code;
}
