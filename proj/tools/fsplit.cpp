#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fsplit/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fsplit: Frobenius-splitting invariants over prime fields"};
  app.require_subcommand(1);

  std::string session_path, format = "text", out_path;
  bool strict = false;
  auto* run = app.add_subcommand("run", "Execute a session file");
  run->add_option("session", session_path, "Path to session file")->required();
  run->add_flag("--strict", strict, "Stop at the first failed command and exit nonzero");
  run->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_option("--out", out_path, "Write the report to this file instead of stdout");

  std::string ring_spec, cmd_text;
  auto* eval = app.add_subcommand("eval", "Execute a single command");
  eval->add_option("--ring", ring_spec, "Ring spec, e.g. \"p=3;vars=x,y\"")->required();
  eval->add_option("--cmd", cmd_text, "Command line to run")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    fsplit::Report report;
    if (run->parsed()) {
      report = fsplit::run_session(session_path, strict);
    } else {
      std::string decl = "ring " + ring_spec;
      for (char& c : decl)
        if (c == ';') c = ' ';
      report = fsplit::run_session_text(decl + "\n" + cmd_text + "\n", strict);
    }
    std::string rendered = (format == "json") ? report.to_json() : report.to_text();
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      }
      f << rendered;
    }
    return (strict && report.had_error) ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
