#include "cli.hpp"

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "fiedler/errors.hpp"

namespace fiedler::cli {

namespace {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return 1;
  if (dynamic_cast<const GraphError*>(&e)) return 2;
  if (dynamic_cast<const DomainError*>(&e)) return 3;
  if (dynamic_cast<const NumericalError*>(&e)) return 4;
  if (dynamic_cast<const std::filesystem::filesystem_error*>(&e)) return 1;
  return 4;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fiedler-vector perturbation, centrality and shape tools", "fiedler"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for every random operation")->capture_default_str();
  app.add_option("--out-dir", global.out_dir, "Directory for output files")->capture_default_str();
  app.add_flag("--force", global.force, "Overwrite existing output files");
  app.add_option("--threads", global.threads, "Worker threads (0 = all cores)")->capture_default_str();

  FiedlerArgs fa;
  auto* fied = app.add_subcommand("fiedler", "Laplacian spectrum and Fiedler vector of an edge list");
  fied->add_option("graph", fa.graph, "Edge-list file")->required();

  SweepArgs sa;
  auto* sweep = app.add_subcommand("perturb-sweep", "Fiedler vector as a pendant weight sweeps a log grid");
  sweep->add_option("graph", sa.graph, "Edge-list file")->required();
  sweep->add_option("-v,--vertex", sa.vertex, "Anchor vertex")->required();
  sweep->add_option("--x-min", sa.x_min, "Smallest pendant weight")->capture_default_str();
  sweep->add_option("--x-max", sa.x_max, "Largest pendant weight")->capture_default_str();
  sweep->add_option("--points", sa.points, "Grid points")->capture_default_str();
  sweep->add_flag("--svg", sa.svg, "Also write sweep.svg");

  FcdArgs ca;
  auto* fcd = app.add_subcommand("fcd", "Fiedler centrality distance of every vertex");
  fcd->add_option("graph", ca.graph, "Edge-list file")->required();
  fcd->add_option("--exponents", ca.exponents, "Search window alpha,beta on log10 x")->capture_default_str();
  fcd->add_option("--exp-tol", ca.exp_tol, "Bisection width on log10 x")->capture_default_str();

  ExperimentArgs ea;
  auto* exp = app.add_subcommand("centrality-experiment", "Correlations between centralities on G(n, m)");
  exp->add_option("--n", ea.n, "Vertices")->capture_default_str();
  exp->add_option("--m-range", ea.m_range, "Edge counts, start:stop:step or a,b,c")->capture_default_str();
  exp->add_option("--N", ea.graphs, "Graphs per edge count")->capture_default_str();
  exp->add_flag("--svg", ea.svg, "Also write correlations.svg");

  ShapeArgs ha;
  auto* shape = app.add_subcommand("shape-thickness", "Longitudinal parameterization and thickness of a mask");
  shape->alias("shape");
  shape->add_option("--mask", ha.mask, "Text 0/1 grid or PGM file")->required();
  shape->add_option("--slices", ha.slices, "Number of level slices")->capture_default_str();
  shape->add_option("--spacing", ha.spacing, "Physical pixel size")->capture_default_str();
  shape->add_option("--anchor", ha.anchor, "Anchor pixel row,col");
  shape->add_option("--c-factor", ha.c_factor, "Pendant weight as a fraction of a(anchor)")->capture_default_str();

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Write a generated graph as an edge list");
  gen->add_option("--kind", ga.kind, "path, cycle, complete, star, gnm or random_tree")->required();
  gen->add_option("--n", ga.n, "Vertices")->required();
  gen->add_option("--m", ga.m, "Edges (gnm)");
  gen->add_option("-o,--output", ga.output, "Output file name")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*fied) cmd_fiedler(global, fa, out);
    else if (*sweep) cmd_perturb_sweep(global, sa, out);
    else if (*fcd) cmd_fcd(global, ca, out, err);
    else if (*exp) cmd_centrality_experiment(global, ea, out);
    else if (*shape) cmd_shape(global, ha, out, err);
    else if (*gen) cmd_generate(global, ga, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace fiedler::cli
