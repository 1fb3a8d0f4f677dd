// thomcalc: evaluate characteristic-number commands on a JSON model file.
//
//   thomcalc --input models/boy.json
//   thomcalc --input models/cp2.json --command '{"op":"morin-rank","n":8,"k":3}'
//
// Exit codes: 0 success, 1 usage or parse error, 2 invariant violation,
// 3 identity-check failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "thom/commands.hpp"
#include "thom/error.hpp"

namespace {

int fail(int code, const std::string& message) {
  std::cerr << "thomcalc: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic numbers of multiple points, Thom polynomials and Morin cobordism"};
  std::string input;
  std::string output = "-";
  std::uint64_t seed = 0;
  bool no_verify = false;
  bool timing = false;
  std::string field = "Q";
  std::vector<std::string> inline_commands;
  app.add_option("--input", input, "Model file (JSON)")->required();
  app.add_option("--output", output, "Report destination, '-' for stdout");
  app.add_option("--seed", seed, "Default seed for check suites");
  app.add_flag("--no-verify", no_verify, "Skip the embedded identity checks");
  app.add_option("--field", field, "Field for spaces that do not name one (Q or F2)")
      ->check(CLI::IsMember({"Q", "F2"}));
  app.add_option("--command", inline_commands, "Command object to run instead of the file's commands");
  app.add_flag("--timing", timing, "Record wall-clock seconds per command");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  thom::RunOptions options;
  options.seed = seed;
  options.verify = !no_verify;
  options.timing = timing;

  thom::Json out;
  bool checks_pass = true;
  try {
    const thom::ModelSet model = thom::load_model_file(input, thom::parse_field(field));
    std::vector<thom::Json> commands;
    for (const auto& text : inline_commands) {
      try {
        commands.push_back(thom::Json::parse(text));
      } catch (const nlohmann::json::parse_error& e) {
        throw thom::ParseError(std::string("--command: ") + e.what());
      }
    }
    if (commands.empty()) commands = model.commands;
    if (commands.empty()) return fail(1, "no commands to run (model has no 'commands' and no --command given)");

    thom::Json reports = thom::Json::array();
    for (const auto& cmd : commands) {
      const thom::Report report = thom::execute(model, cmd, options);
      checks_pass = checks_pass && report.all_pass();
      reports.push_back(report.to_json());
    }
    out = reports.size() == 1 ? reports[0] : reports;
  } catch (const thom::ParseError& e) {
    return fail(1, e.what());
  } catch (const thom::InvariantError& e) {
    return fail(2, e.what());
  } catch (const thom::IdentityCheckError& e) {
    return fail(3, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(1, e.what());
  } catch (const std::exception& e) {
    return fail(2, e.what());
  }

  const std::string text = thom::dump(out);
  if (output == "-") {
    std::cout << text;
  } else {
    std::ofstream file(output);
    if (!file) return fail(1, "cannot write '" + output + "'");
    file << text;
  }
  return checks_pass ? 0 : 3;
}
