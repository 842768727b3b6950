#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "freediv/error.hpp"
#include "freediv_cli/report.hpp"

int main(int argc, char** argv) {
  using namespace freediv::cli;
  CLI::App app{"Free divisor pullback checks over the rationals"};
  std::string input = "-";
  bool asJson = false;
  std::string order = "grevlex";
  SessionOptions opts;
  app.add_option("session", input, "Session file, or - for stdin");
  app.add_flag("--json", asJson, "Emit the machine-readable report");
  app.add_option("--order", order, "Default monomial order")->check(CLI::IsMember({"grevlex", "lex", "weighted"}));
  app.add_flag("--allow-nonhomogeneous", opts.allowNonhomogeneous, "Accept input without a quasi-homogeneous grading");
  app.add_option("--budget", opts.budget, "Reduction step budget per Groebner computation")->check(CLI::PositiveNumber);
  app.add_option("--timeout", opts.timeoutSeconds, "Wall clock limit in seconds")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", opts.seed, "Seed for randomized rank tests");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : int(ExitCode::ParseError);
  }
  opts.order = order == "lex" ? freediv::OrderKind::Lex
               : order == "weighted" ? freediv::OrderKind::Weighted
                                     : freediv::OrderKind::GRevLex;

  std::stringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << input << ": cannot open\n";
      return int(ExitCode::ParseError);
    }
    buf << in.rdbuf();
  }

  Session session;
  try {
    session = parse_session(buf.str(), opts);
  } catch (const freediv::ParseError& e) {
    std::string name = input == "-" ? "<stdin>" : input;
    std::cerr << name << ":" << e.line << ":" << e.column << ": error: " << e.what() << "\n";
    if (asJson) {
      nlohmann::json j{{"schema", "freediv-report"},
                       {"version", kSchemaVersion},
                       {"exit_code", int(ExitCode::ParseError)},
                       {"error", {{"line", e.line}, {"column", e.column}, {"message", e.what()}}}};
      std::cout << j.dump(2) << "\n";
    }
    return int(ExitCode::ParseError);
  }

  Report report = run(session);
  if (asJson) {
    nlohmann::json j = report;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text_report(report);
  }
  return report.exitCode();
}
