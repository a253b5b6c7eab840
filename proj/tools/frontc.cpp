// frontc: build and check the invariants of a Legendrian surface front.
//
// Subcommands (also selectable with --stage):
//   validate  front diagnostics
//   dga       generator table, degrees, differentials, d^2 verdict
//   augs      augmentation enumeration table
//   chd       per-augmentation chain homotopy diagrams with validity
//   sheaf     stratification dump and per-augmentation sheaf summary
//   verify    full axiom verification including microlocal ranks
//   report    every stage in one document
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid
// input (unreadable or malformed file, non-prime field, bound exceeded).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "frontsheaf/front_io.hpp"
#include "frontsheaf/report.hpp"

using namespace frontsheaf;

namespace {

struct RunConfig {
  std::string input;
  std::string stage;
  int field = 2;
  unsigned long long bound = 1ull << 20;
  std::string format = "text";
  std::string out;
};

int run(const RunConfig& cfg) {
  FrontComplex front;
  try {
    front = load_front_file(cfg.input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  PrimeField field{2};
  try {
    field = PrimeField(cfg.field);
  } catch (const std::exception& e) {
    std::cerr << "error: --field " << cfg.field << ": " << e.what() << "\n";
    return 2;
  }

  nlohmann::json rep;
  try {
    if (cfg.stage == "validate") {
      rep = front_report(front);
    } else {
      std::vector<std::string> diags = front.validate();
      if (!diags.empty()) {
        for (const std::string& d : diags) std::cerr << "error: " << d << "\n";
        return 2;
      }
      if (cfg.stage == "dga") {
        SimplicialDGA dga(front);
        rep = dga_report(dga);
      } else if (cfg.stage == "augs") {
        SimplicialDGA dga(front);
        rep = augs_report(dga, field, cfg.bound);
      } else if (cfg.stage == "chd") {
        SimplicialDGA dga(front);
        rep = chd_report(dga, field, cfg.bound);
      } else if (cfg.stage == "sheaf") {
        rep = sheaf_report(front, field, cfg.bound);
      } else if (cfg.stage == "verify") {
        rep = verify_report(front, field, cfg.bound);
      } else {
        rep = full_report(front, field, cfg.bound);
      }
    }
  } catch (const std::runtime_error& e) {
    // Enumeration guardrail and construction-time consistency errors are
    // input problems, not failed mathematical checks.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string text = cfg.format == "json" ? rep.dump(2) + "\n" : render_text(rep);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << text;
  }
  return rep["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"build and check the invariants of a Legendrian surface front"};
  app.require_subcommand(0, 1);

  RunConfig cfg;
  const std::vector<std::string> stages = {"validate", "dga",    "augs",  "chd",
                                           "sheaf",    "verify", "report"};
  app.add_option("--stage", cfg.stage, "pipeline stage to run")
      ->check(CLI::IsMember(stages));
  app.add_option("--field", cfg.field, "prime field modulus p")->capture_default_str();
  app.add_option("--bound", cfg.bound, "enumeration guardrail (max assignments)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "write the report to a file instead of stdout");
  app.add_option("input", cfg.input, "front file");

  for (const std::string& s : stages) {
    CLI::App* sub = app.add_subcommand(s);
    sub->fallthrough();
    sub->add_option("input", cfg.input, "front file");
    sub->callback([&cfg, s] { cfg.stage = s; });
  }

  CLI11_PARSE(app, argc, argv);

  if (cfg.stage.empty()) {
    std::cerr << "error: no subcommand or --stage given\n";
    return 2;
  }
  if (cfg.input.empty()) {
    std::cerr << "error: no input front file given\n";
    return 2;
  }
  return run(cfg);
}
