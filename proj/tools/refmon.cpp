#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "refmon/cli.hpp"

namespace {

void common_flags(CLI::App* sub, refmon::cli::Request& r) {
  sub->add_option("--family", r.family, "A, B, D, G2, F4, E6, E7 or E8");
  sub->add_option("--n", r.n, "number of coordinates for A, B and D");
  sub->add_option("--system", r.system, "boolean or arrangement")
      ->check(CLI::IsMember({"boolean", "arrangement"}));
  sub->add_option("--max-order", r.max_order, "cap on enumerated monoid order");
  sub->add_option("--closure-cap", r.closure_cap,
                  "cap on the number of subspaces in a generated system");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace refmon::cli;
  Request     req;
  bool        json = false;
  std::string out_file;

  CLI::App app{"Reflection monoids: orders, Green's relations, mu, tables"};
  app.require_subcommand(1);
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("-o,--output", out_file, "write the report to a file");

  auto* order = app.add_subcommand("order", "monoid order by formula and/or enumeration");
  common_flags(order, req);
  order->add_option("--method", req.method, "formula, enumerate or both")
      ->check(CLI::IsMember({"formula", "enumerate", "both"}));

  auto* green = app.add_subcommand("green", "Green's class counts");
  common_flags(green, req);

  auto* mu = app.add_subcommand("mu", "mu congruence and fundamentality");
  common_flags(mu, req);
  mu->add_option("--model", req.model, "In, Jn or hexagon");

  auto* table = app.add_subcommand("table", "rank counts, orbits, orbit data");
  common_flags(table, req);
  table->add_flag("--ranks", req.ranks, "subspace counts by rank");
  table->add_flag("--orbits", req.orbits, "W-orbits with sizes and isotropy");
  table->add_option("--orbit-data", req.orbit_data,
                    "stored orbit data for G2, F4, E6, E7 or E8");

  for (auto* sub : {order, green, mu, table}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return usage;
  }
  req.command = app.get_subcommands().front()->get_name();

  try {
    Report const      rep  = run(req);
    std::string const text = json ? rep.to_json().dump(2) + "\n" : rep.to_text();
    if (out_file.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_file);
      if (!f) {
        std::cerr << "cannot write " << out_file << "\n";
        return failure;
      }
      f << text;
    }
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (refmon::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return ok;
}
