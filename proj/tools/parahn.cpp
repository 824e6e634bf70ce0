#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "parahn/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"HN filtrations and strata of parabolic bundles on P^1 over finite fields"};
  std::string cmd, input = "-", format = "json";
  parahn::RunOptions opts;
  if (const char* env = std::getenv("PARAHN_BUDGET")) {
    try {
      opts.budget.cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "PARAHN_BUDGET is not a number: " << env << "\n";
      return 1;
    }
  }
  std::string datum;
  bool no_timing = false;
  app.add_option("command", cmd,
                 "hn | enum-sub | strata | quot-points | fil-points | bounds-F | bounds-B | sigma | "
                 "theta-weight | admissible | family | hom")
      ->required();
  app.add_option("--input,-i", input, "input JSON document, - for stdin");
  app.add_option("--format,-f", format, "output format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--budget", opts.budget.cap, "enumeration cap (default PARAHN_BUDGET or 100000000)");
  app.add_option("--extend", opts.extend, "extend scalars to F_{q^m} before computing")->check(CLI::PositiveNumber);
  app.add_option("--datum", datum, "HN datum as a/b,a/b,...");
  app.add_flag("--no-timing", no_timing, "omit timing_ms from JSON output");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (!datum.empty()) opts.datum = datum;
  opts.format = format;

  std::stringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "cannot read " << input << "\n";
      return 1;
    }
    buf << in.rdbuf();
  }
  auto rep = parahn::run_command(cmd, buf.str(), opts);
  if (format == "md") {
    std::cout << parahn::render_markdown(rep);
  } else {
    std::cout << parahn::render_json(rep, !no_timing);
  }
  return rep.exit_code;
}
