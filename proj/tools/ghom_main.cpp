#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ghom/errors.hpp"
#include "ghom/runner.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ghom::InputError("cannot open script file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graded-module homological calculator: Auslander duals, torsionless "
      "levels, depth/grade, and Gorenstein dimension over quotients of "
      "polynomial rings, with built-in verification suites."};

  std::string script_path;
  std::vector<std::string> suites;
  std::string family;
  int count = 10;
  ghom::RunFlags flags;

  app.add_option("script", script_path,
                 "Script file to run ('-' reads standard input)");
  app.add_option("--suite", suites,
                 "Run a verification suite by name, or 'all' (repeatable)");
  app.add_option("--family", family, "Print the instances of a module family");
  app.add_option("--count", count, "Number of instances for --family")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", flags.bound,
                 "Ext-vanishing scan bound (default: ring dimension + 2)");
  app.add_option("--field", flags.field,
                 "Coefficient field for suites/families: QQ or Fp:<p>");
  app.add_option("--order", flags.order, "Monomial order: grevlex or grlex");
  app.add_option("--seed", flags.seed, "Seed for generated instances");
  app.add_flag("--verbose", flags.verbose,
               "Human-readable progress on standard error");
  app.add_flag("--timings", flags.timings,
               "Include wall-clock timings in the JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    ghom::RunResult result;
    if (!suites.empty()) {
      result = ghom::run_suites(suites, flags, &std::cerr);
    } else if (!family.empty()) {
      result = ghom::list_family(family, count, flags);
    } else if (!script_path.empty()) {
      result = ghom::run_script(read_input(script_path), flags, &std::cerr);
    } else {
      std::cerr << app.help() << std::flush;
      return 2;
    }
    std::cout << result.report.dump(2) << "\n";
    return result.exit_code;
  } catch (const ghom::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ghom::TheoryViolation& e) {
    std::cerr << "theory violation: " << e.what() << "\n";
    return 1;
  }
}
