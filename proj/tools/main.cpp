// Batch driver: pick a representation, run a named verification suite, emit
// a deterministic report. Exit code 0 iff every claim passes.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "klein4/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact invariant-theory checks for the Klein four group in characteristic 2"};
  klein4::SuiteConfig config;
  app.add_option("--rep", config.rep_selector,
                 "representation selector: Vm:<m>:lambda=<scalar>, Omega-:<m>, "
                 "Omega+:<m>, Vreg")
      ->required();
  app.add_option("--suite", config.suite,
                 "leadterms|identities|hsop|hilbert|transfer|lemmas|noether|sagbi|all");
  app.add_option("--degree-bound", config.degree_bound, "degree ceiling (0 = per-family default)");
  app.add_option("--lambda", config.lambda_text,
                 "lambda value for Vm selectors without one (e.g. t, 0, l)");
  app.add_option("--budget", config.budget, "sweep budget for the sagbi completion");
  app.add_option("--out", config.out_path, "report path (default stdout)");
  app.add_option("--format", config.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  bool dump_registry = false;
  app.add_flag("--dump-registry", dump_registry,
               "print the named constructions of the representation and exit");
  CLI11_PARSE(app, argc, argv);

  if (const char* threads = std::getenv("KLEIN_THREADS")) {
    // worker-count cap; the current pipelines run claims serially, which
    // always respects it
    (void)threads;
  }

  try {
    if (dump_registry) {
      std::string selector = config.rep_selector;
      if (!config.lambda_text.empty() && selector.rfind("Vm:", 0) == 0 &&
          selector.find("lambda=") == std::string::npos)
        selector += ":lambda=" + config.lambda_text;
      std::cout << klein4::registry_json(klein4::Representation::parse_selector(selector));
      return 0;
    }
    klein4::Report report = klein4::run_suite(config);
    klein4::write_report(report, config);
    return report.all_pass() ? 0 : 1;
  } catch (const klein4::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
