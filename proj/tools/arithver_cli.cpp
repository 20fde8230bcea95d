// arithver: runs named verification suites and writes a JSON report.
//
// Exit status: 0 if every check passes, 1 if any fails, 2 on usage errors.
// Every flag can also be set through an ARITHVER_* environment variable
// (ARITHVER_SUITE, ARITHVER_BOUND, ARITHVER_MAX_G, ...); flags win.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "arithver/suites.hpp"

int main(int argc, char** argv) {
  arithver::SuiteOptions opt;
  std::string suite = "all", out;
  bool list = false, timings = false;

  CLI::App app{"Run arithver verification suites"};
  app.set_version_flag("--version", std::string(ARITHVER_VERSION));
  app.add_flag("--list", list, "Print suite names and exit");
  app.add_option("--suite", suite, "Suite to run")->envname("ARITHVER_SUITE");
  app.add_option("--bound", opt.bound, "Short-root coefficient bound")->envname("ARITHVER_BOUND");
  app.add_option("--max-g", opt.max_g, "Largest abelian variety dimension")->envname("ARITHVER_MAX_G");
  app.add_option("--tol", opt.tol, "Tolerance for double-precision checks")->envname("ARITHVER_TOL");
  app.add_option("--samples", opt.samples, "Random samples per property")->envname("ARITHVER_SAMPLES");
  app.add_option("--seed", opt.seed, "Random seed")->envname("ARITHVER_SEED");
  app.add_option("--out", out, "Write the report here instead of stdout")->envname("ARITHVER_OUT");
  app.add_option("--jobs", opt.jobs, "Worker threads")->envname("ARITHVER_JOBS");
  app.add_flag("--timings", timings, "Include wall-clock timings (not byte-stable)")->envname("ARITHVER_TIMINGS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (list) {
    for (const auto& n : arithver::suite_names()) std::cout << n << "\n";
    return 0;
  }

  arithver::SuiteReport report;
  try {
    report = arithver::run_suite(suite, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "arithver: " << e.what() << "\n";
    return 2;
  }

  const std::string text = arithver::to_json(report, opt, timings).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!(f << text)) {
      std::cerr << "arithver: cannot write " << out << "\n";
      return 2;
    }
  }
  for (const auto& c : report.checks)
    if (c.status == arithver::CheckStatus::fail) std::cerr << "FAIL " << c.name << ": " << c.details << "\n";
  return report.all_passed() ? 0 : 1;
}
