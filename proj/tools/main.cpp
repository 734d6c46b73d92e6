#include <iostream>

#include "CLI11.hpp"
#include "twistcov/io.hpp"

int main(int argc, char** argv) {
  using namespace twistcov;
  CLI::App app{"Twisted operators on graph coverings: certificates and oracles"};
  std::string command;
  std::string input;
  RunOptions opts;
  int degree = 0;

  std::string commands;
  for (const auto& c : command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "one of: " + commands)->required()->check(CLI::IsMember(command_names()));
  app.add_option("--input", input, "input document")->required();
  app.add_option("--rtol", opts.tol.rtol, "relative tolerance for floating checks")->capture_default_str();
  app.add_option("--atol", opts.tol.atol, "absolute tolerance for floating checks")->capture_default_str();
  app.add_option("--max-length", opts.max_length, "truncation degree for zeta-amitsur")->capture_default_str();
  app.add_option("--degree", degree, "cyclic cover degree when the input has no voltage");
  app.add_option("--m", opts.m, "torus cover size in the second direction")->capture_default_str();
  app.add_option("--n", opts.n, "torus cover size in the first direction")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for sampled weights and evaluation points")->capture_default_str();
  app.add_flag("--timing", opts.timing, "append wall-clock time to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ExitCode::InputError;
  }
  if (degree > 0) opts.degree = degree;

  InputDocument doc;
  try {
    doc = read_input_file(input);
  } catch (const Error& e) {
    std::cout << "command: " << command << "\nerror: " << e.what() << "\nstatus: input-error\n";
    return ExitCode::InputError;
  }
  Report report = run(command, doc, opts);
  std::cout << report.render();
  return report.exit_code;
}
