#include "accut/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "accut/oracle.hpp"
#include "accut/result_io.hpp"
#include "accut/rudy.hpp"
#include "accut/solver.hpp"

namespace accut {

namespace {

NormP norm_from_flag(const std::string& s) {
  if (s == "1") return NormP::one;
  if (s == "2") return NormP::two;
  return NormP::inf;
}

TraceLevel trace_from_flag(const std::string& s) {
  if (s == "full") return TraceLevel::full;
  if (s == "summary") return TraceLevel::summary;
  return TraceLevel::none;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"anti-Cheeger cut and maxcut solver"};
  app.name("accut");

  std::string graph_path;
  std::string algo = "cia1";
  std::string p = "1";
  int t_tot = 1000;
  int t_eq = 3;
  int l_pop = 20;
  int restarts = 100;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
  std::string trace = "none";

  app.add_option("--graph", graph_path, "input graph (rudy edge list)")->required();
  app.add_option("--algo", algo, "cia0 | cia1 | cia2 | oracle (default cia1)")
      ->check(CLI::IsMember({"cia0", "cia1", "cia2", "oracle"}));
  app.add_option("--p", p, "inner sphere norm: 1 | 2 | inf (default 1)")
      ->check(CLI::IsMember({"1", "2", "inf"}));
  app.add_option("--t-tot", t_tot, "iteration budget per run (default 1000)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--t-eq", t_eq, "stalled steps before cia2 swaps objective (default 3)")
      ->check(CLI::PositiveNumber);
  app.add_option("--pop", l_pop, "population size per cia2 round (default 20)")
      ->check(CLI::PositiveNumber);
  app.add_option("--restarts", restarts, "independent cia0/cia1 runs (default 100)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "master seed (default 0)");
  app.add_option("--out", out_path, "write the report to this file instead of stdout");
  app.add_option("--format", format, "json | csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--trace", trace, "none | summary | full (default none)")
      ->check(CLI::IsMember({"none", "summary", "full"}));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("accut");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const Graph g = parse_rudy_file(graph_path);

    SolverConfig cfg;
    cfg.p = norm_from_flag(p);
    cfg.t_tot = t_tot;
    cfg.t_eq = t_eq;
    cfg.l_pop = l_pop;
    cfg.seed = seed;
    cfg.restarts = restarts;

    ResultDocument doc;
    doc.graph_name = std::filesystem::path(graph_path).filename().string();
    doc.algorithm = algo;
    doc.p = p;
    doc.t_tot = t_tot;
    doc.t_eq = t_eq;
    doc.l_pop = l_pop;
    doc.restarts = restarts;
    doc.seed = seed;
    doc.trace_level = trace_from_flag(trace);

    const auto t0 = std::chrono::steady_clock::now();
    if (algo == "oracle") {
      const OracleResult anti = exhaustive_best(g, Objective::anti);
      const OracleResult maxc = exhaustive_best(g, Objective::maxcut);
      doc.best_anti = anti.best_value;
      doc.best_max = maxc.best_value;
      doc.partition = anti.best_set.indices();
      doc.cut_size = cut_value(g, anti.best_set);
    } else {
      RunRecord rec;
      if (algo == "cia2") {
        PopulationResult pop = run_population(g, cfg);
        rec = std::move(pop.best);
        doc.rounds = pop.rounds;
      } else {
        RestartResult rs = run_restarts(g, algo == "cia0" ? Algo::cia0 : Algo::cia1, cfg);
        rec = std::move(rs.best);
      }
      doc.best_anti = rec.final_anti;
      doc.best_max = rec.final_max;
      doc.partition = rec.final_cut.indices();
      doc.cut_size = cut_value(g, rec.final_cut);
      doc.trace = std::move(rec.trace);
    }
    doc.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string text = write_result(doc, format == "json" ? OutputFormat::json
                                                                : OutputFormat::csv);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
      out << text;
      if (!out) throw std::runtime_error(out_path + ": write failed");
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "accut: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace accut
