#include <iostream>

#include <CLI11.hpp>

#include <crossed/cli.hpp>

int main(int argc, char** argv) {
  using namespace crossed::cli;
  CLI::App app{"Crossed interval groups, group operads and Hochschild homology"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run verification suites on a structure");
  v->add_option("--structure", verify.structure,
                "sym, hyperoctahedral, weyl, refl, trivial, braid, constant:<group-file> or a W-spec file")
      ->required();
  v->add_option("--max-degree", verify.max_degree, "Degree bound (above 3: sampled)");
  v->add_option("--check", verify.checks, "Check to run (repeatable)");
  v->add_option("--samples", verify.samples, "Samples for randomized checks");
  v->add_option("--seed", verify.seed, "Seed for randomized checks");
  v->add_option("--format", verify.format, "text or json");

  QuotientOptions quotient;
  auto* q = app.add_subcommand("quotient", "Operadification or taming quotient");
  q->add_option("--structure", quotient.structure, "Finite structure")->required();
  q->add_option("--kind", quotient.kind, "operadify or tame");
  q->add_option("--max-degree", quotient.max_degree, "Degree bound");
  q->add_option("--format", quotient.format, "text or json");

  HochschildOptions hh;
  auto* h = app.add_subcommand("hochschild", "Hochschild homology of an algebra file");
  h->add_option("--algebra", hh.algebra, "Algebra file")->required();
  h->add_option("--top", hh.top, "Top homology degree");
  h->add_option("--zmap", hh.zmap, "Map from the paracyclic group (cyclic)");
  h->add_flag("--check-oracle", hh.check_oracle, "Compare boundaries with the classical formula");
  h->add_flag("--dump-boundaries", hh.dump_boundaries, "Print boundary matrices");
  h->add_option("--format", hh.format, "text or json");

  MapsOptions maps;
  auto* m = app.add_subcommand("maps", "Enumerate crossed maps between finite structures");
  m->add_option("--source", maps.source, "Source structure")->required();
  m->add_option("--target", maps.target, "Target structure")->required();
  m->add_option("--max-degree", maps.max_degree, "Truncation degree");
  m->add_option("--format", maps.format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*v) return cmd_verify(verify, std::cout, std::cerr);
    if (*q) return cmd_quotient(quotient, std::cout, std::cerr);
    if (*h) return cmd_hochschild(hh, std::cout, std::cerr);
    return cmd_maps(maps, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
}
