// Batch CLI over the metric-graphs library: ingest a space, run the
// constructions, emit graphs / reports / ensemble statistics.
//
// Exit codes: 0 ok, 2 input parse, 3 metric validation, 4 infeasible
// request, 5 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "metric_graphs/constructions.hpp"
#include "metric_graphs/errors.hpp"
#include "metric_graphs/io.hpp"
#include "metric_graphs/metric_space.hpp"
#include "metric_graphs/spaces.hpp"

namespace mg = metric_graphs;

namespace {

int exit_code_for(mg::errc code) {
  switch (code) {
    case mg::errc::parse:
      return 2;
    case mg::errc::too_large:
    case mg::errc::exhausted_attempts:
    case mg::errc::infeasible_model:
      return 4;
    case mg::errc::internal_invariant:
      return 5;
    default:
      return 3;  // metric / input validation
  }
}

struct CommonOpts {
  std::string input;
  std::string format = "points-csv";  // points-csv | matrix-csv
  std::string norm = "l2";
  double eq_tol = 1e-9;
  std::optional<double> rel_tol;
  std::string out;
  std::string emit = "edges";  // edges | dot | json
};

void add_tolerance_flags(CLI::App* cmd, CommonOpts& opts) {
  auto* eq = cmd->add_option("--eq-tol", opts.eq_tol,
                             "absolute tolerance for distance equality (default 1e-9)");
  auto* rel = cmd->add_option("--rel-tol", opts.rel_tol,
                              "distance-equality tolerance relative to the diameter");
  eq->excludes(rel);
  rel->excludes(eq);
}

void add_input_flags(CLI::App* cmd, CommonOpts& opts, bool with_matrix = true) {
  cmd->add_option("--input", opts.input, "input file")->required();
  if (with_matrix) {
    cmd->add_option("--format", opts.format, "points-csv | matrix-csv")
        ->check(CLI::IsMember({"points-csv", "matrix-csv"}));
  }
  cmd->add_option("--norm", opts.norm, "l1 | l2 | linf (points input only)")
      ->check(CLI::IsMember({"l1", "l2", "linf"}));
}

mg::ToleranceConfig tolerance_of(const CommonOpts& opts) {
  if (opts.rel_tol) {
    return mg::ToleranceConfig{*opts.rel_tol, mg::ToleranceConfig::Scale::relative_to_diameter};
  }
  return mg::ToleranceConfig{opts.eq_tol, mg::ToleranceConfig::Scale::absolute};
}

mg::FiniteMetricSpace load_space(const CommonOpts& opts) {
  mg::ToleranceConfig tol = tolerance_of(opts);
  if (opts.format == "matrix-csv") {
    return mg::FiniteMetricSpace::from_matrix(mg::read_matrix_csv(opts.input), tol);
  }
  return mg::FiniteMetricSpace::from_points(
      mg::read_points_csv(opts.input, mg::norm_from_name(opts.norm)), tol);
}

void write_artifact(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) mg::fail(mg::errc::parse, "cannot write " + opts.out);
  file << text;
}

std::string render_graph(const mg::WeightedGraph& graph, const std::string& emit,
                         const std::string& name) {
  std::ostringstream out;
  if (emit == "edges") {
    mg::write_edge_list(out, graph);
  } else if (emit == "dot") {
    mg::write_dot(out, graph, name);
  } else {
    out << mg::graph_to_json(graph).dump(2) << '\n';
  }
  return out.str();
}

std::uint64_t seed_fallback(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("METRIC_GRAPHS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      mg::fail(mg::errc::parse, std::string("METRIC_GRAPHS_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

// Model grammar: uniform-cube:dim=3,side=1  grid:dim=2,k=3
// jittered-grid:dim=2,k=3,sigma=0.01
mg::SampleModel parse_model(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  mg::SampleModel model;
  if (name == "uniform-cube") {
    model.kind = mg::SampleModel::Kind::uniform_cube;
  } else if (name == "grid") {
    model.kind = mg::SampleModel::Kind::grid;
  } else if (name == "jittered-grid") {
    model.kind = mg::SampleModel::Kind::jittered_grid;
  } else {
    mg::fail(mg::errc::parse, "unknown model '" + name + "'");
  }
  if (colon == std::string::npos) return model;

  std::stringstream args(text.substr(colon + 1));
  std::string kv;
  while (std::getline(args, kv, ',')) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos) mg::fail(mg::errc::parse, "model parameter '" + kv + "' needs key=value");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    try {
      if (key == "dim") {
        model.dim = std::stoul(value);
      } else if (key == "side") {
        model.side = std::stod(value);
      } else if (key == "k") {
        model.k = std::stoul(value);
      } else if (key == "sigma") {
        model.sigma = std::stod(value);
      } else {
        mg::fail(mg::errc::parse, "unknown model parameter '" + key + "'");
      }
    } catch (const mg::Error&) {
      throw;
    } catch (const std::exception&) {
      mg::fail(mg::errc::parse, "model parameter '" + kv + "' is not numeric");
    }
  }
  return model;
}

int run(int argc, char** argv) {
  CLI::App app{"graphs a finite metric space induces: CS, MC and Sigma"};
  app.require_subcommand(1);

  // ---- build {cs|mc|sigma}
  CommonOpts build_opts;
  std::string build_kind;
  std::string trace_out;
  auto* build = app.add_subcommand("build", "construct a graph from a space");
  build->add_option("kind", build_kind, "cs | mc | sigma")
      ->required()
      ->check(CLI::IsMember({"cs", "mc", "sigma"}));
  add_input_flags(build, build_opts);
  add_tolerance_flags(build, build_opts);
  build->add_option("--out", build_opts.out, "artifact file (stdout if omitted)");
  build->add_option("--emit", build_opts.emit, "edges | dot | json")
      ->check(CLI::IsMember({"edges", "dot", "json"}));
  build->add_option("--trace-out", trace_out,
                    "cs only: write the construction trace JSON here "
                    "(default: <out>.trace.json)");

  // ---- classify
  CommonOpts classify_opts;
  auto* classify = app.add_subcommand("classify", "intrinsic class and graph relations");
  add_input_flags(classify, classify_opts);
  add_tolerance_flags(classify, classify_opts);
  classify->add_option("--out", classify_opts.out, "write the JSON report here");

  // ---- perturb
  CommonOpts perturb_opts;
  double epsilon = 0.0;
  std::optional<std::uint64_t> seed_flag;
  std::size_t max_attempts = 64;
  auto* perturb = app.add_subcommand("perturb", "jitter a cloud into distance separation");
  add_input_flags(perturb, perturb_opts, /*with_matrix=*/false);
  add_tolerance_flags(perturb, perturb_opts);
  perturb->add_option("--epsilon", epsilon, "d_B budget, must be positive")->required();
  perturb->add_option("--seed", seed_flag, "rng seed (fallback: METRIC_GRAPHS_SEED, then 0)");
  perturb->add_option("--max-attempts", max_attempts, "rejection-sampling bound (default 64)");
  perturb->add_option("--out", perturb_opts.out, "output cloud CSV")->required();

  // ---- stats
  CommonOpts stats_opts;
  std::string model_text = "uniform-cube:dim=3,side=1";
  std::size_t trials = 1;
  std::size_t stats_m = 20;
  std::optional<std::uint64_t> stats_seed_flag;
  auto* stats = app.add_subcommand("stats", "per-trial construction statistics over sampled clouds");
  stats->add_option("--model", model_text,
                    "uniform-cube:dim=,side= | grid:dim=,k= | jittered-grid:dim=,k=,sigma=");
  stats->add_option("--points", stats_m, "points per cloud (default 20)");
  stats->add_option("--trials", trials, "number of clouds")->check(CLI::PositiveNumber);
  stats->add_option("--seed", stats_seed_flag, "base seed; trial t uses seed+t");
  add_tolerance_flags(stats, stats_opts);
  stats->add_option("--out", stats_opts.out, "CSV file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints the message / help text
    return rc == 0 ? 0 : 2;
  }

  if (build->parsed()) {
    auto space = load_space(build_opts);
    if (build_kind == "cs") {
      mg::CsTrace trace = mg::build_cs(space);
      write_artifact(build_opts, render_graph(trace.final_graph, build_opts.emit, "cs"));
      std::string trace_path = trace_out;
      if (trace_path.empty() && !build_opts.out.empty()) {
        trace_path = build_opts.out + ".trace.json";
      }
      if (!trace_path.empty()) {
        std::ofstream tf(trace_path, std::ios::binary);
        if (!tf) mg::fail(mg::errc::parse, "cannot write " + trace_path);
        tf << mg::trace_to_json(trace).dump(2) << '\n';
      }
    } else if (build_kind == "mc") {
      auto [graph, cut] = mg::build_mc(space);
      write_artifact(build_opts, render_graph(graph, build_opts.emit, "mc"));
      std::cout << "cut_value " << mg::format_double(cut.value) << '\n';
    } else {
      write_artifact(build_opts, render_graph(mg::build_sigma(space), build_opts.emit, "sigma"));
    }
    return 0;
  }

  if (classify->parsed()) {
    auto space = load_space(classify_opts);
    auto report = mg::relations_report(space);
    std::cout << "class " << mg::intrinsic_label_name(report.cls.label);
    if (report.cls.common_length) {
      std::cout << " (r=" << mg::format_double(*report.cls.common_length) << ")";
    }
    std::cout << '\n';
    std::cout << "cs_edges " << report.cs.edge_count() << ", mc_edges " << report.mc.edge_count()
              << ", sigma_edges " << report.sigma.edge_count() << ", cut_value "
              << mg::format_double(report.cut.value) << '\n';
    std::cout << "cs = sigma&mc: " << (report.cs_eq_sigma_cap_mc ? "yes" : "no")
              << ", all equal: " << (report.all_equal ? "yes" : "no") << '\n';
    if (!classify_opts.out.empty()) {
      std::ofstream file(classify_opts.out, std::ios::binary);
      if (!file) mg::fail(mg::errc::parse, "cannot write " + classify_opts.out);
      file << mg::relations_to_json(report).dump(2) << '\n';
    }
    return 0;
  }

  if (perturb->parsed()) {
    auto cloud = mg::read_points_csv(perturb_opts.input, mg::norm_from_name(perturb_opts.norm));
    std::uint64_t seed = seed_fallback(seed_flag);
    auto report =
        mg::perturb_to_ds(cloud, epsilon, seed, max_attempts, tolerance_of(perturb_opts));
    mg::write_points_csv(std::filesystem::path(perturb_opts.out), report.output);
    std::cout << "attempts " << report.attempts << '\n'
              << "displacement " << mg::format_double(report.displacement) << '\n'
              << "seed " << report.seed << '\n';
    return 0;
  }

  if (stats->parsed()) {
    mg::SampleModel model = parse_model(model_text);
    std::uint64_t base_seed = seed_fallback(stats_seed_flag);
    mg::ToleranceConfig tol = tolerance_of(stats_opts);

    std::ostringstream csv;
    csv << "trial,seed,m,cs_edges,mc_edges,sigma_edges,mc_edges_per_vertex,cs_is_tree,"
           "distance_separated,class\n";
    double sum_cs = 0, sum_mc = 0, sum_sigma = 0, sum_ratio = 0;
    std::size_t trees = 0, separated = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      std::uint64_t seed = base_seed + t;
      auto cloud = mg::sample_cloud(model, stats_m, seed);
      auto space = mg::FiniteMetricSpace::from_points(cloud, tol);
      auto report = mg::relations_report(space);
      bool tree = mg::is_tree(report.cs);
      bool ds = mg::is_distance_separated(space);
      double ratio = double(report.mc.edge_count()) / double(stats_m);
      csv << t << ',' << seed << ',' << stats_m << ',' << report.cs.edge_count() << ','
          << report.mc.edge_count() << ',' << report.sigma.edge_count() << ','
          << mg::format_double(ratio) << ',' << (tree ? 1 : 0) << ',' << (ds ? 1 : 0) << ','
          << mg::intrinsic_label_name(report.cls.label) << '\n';
      sum_cs += double(report.cs.edge_count());
      sum_mc += double(report.mc.edge_count());
      sum_sigma += double(report.sigma.edge_count());
      sum_ratio += ratio;
      trees += tree ? 1 : 0;
      separated += ds ? 1 : 0;
    }
    const double n = double(trials);
    csv << "aggregate," << base_seed << ',' << stats_m << ',' << mg::format_double(sum_cs / n)
        << ',' << mg::format_double(sum_mc / n) << ',' << mg::format_double(sum_sigma / n) << ','
        << mg::format_double(sum_ratio / n) << ',' << mg::format_double(double(trees) / n) << ','
        << mg::format_double(double(separated) / n) << ",\n";
    write_artifact(stats_opts, csv.str());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mg::Error& e) {
    std::cerr << "error (" << mg::errc_name(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 5;
  }
}
