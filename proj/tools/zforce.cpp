// zforce: generate power-law graph ensembles, estimate zero forcing numbers
// and vertex covers with the leaf + maximum-degree heuristics, and run the
// gamma sweeps.
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 internal assertion.

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zforce/cover.hpp"
#include "zforce/edge_list.hpp"
#include "zforce/errors.hpp"
#include "zforce/experiment.hpp"
#include "zforce/forcing.hpp"
#include "zforce/generators.hpp"
#include "zforce/metrics.hpp"
#include "zforce/report.hpp"

namespace {

using namespace zforce;

constexpr int kUsage = 1;
constexpr int kIo = 2;
constexpr int kInternal = 3;

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
    if (ec != std::errc() || ptr != text.data() + comma) {
      throw InvalidArgument("bad hub degree list '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

struct GenerateArgs {
  std::string model = "pa";
  std::size_t n = 0;
  std::size_t m = 2;
  double a = 1.0;
  std::string hub_degrees;
  std::string arrangement = "isolated";
  std::uint64_t seed = 1;
  std::string output;
};

int run_generate(const GenerateArgs& args) {
  Graph g;
  if (args.model == "pa") {
    g = gen_pa(PaParams{args.n, args.m, args.a}, args.seed);
  } else if (args.model == "deact" || args.model == "deactivation") {
    g = gen_deactivation(DeactParams{args.n, args.m, args.a}, args.seed);
  } else if (args.model == "stars") {
    if (args.hub_degrees.empty()) throw InvalidArgument("--hub-degrees is required for stars");
    StarSpec spec;
    spec.hub_degrees = parse_list(args.hub_degrees);
    if (args.arrangement == "isolated") {
      spec.arrangement = StarArrangement::isolated;
    } else if (args.arrangement == "string") {
      spec.arrangement = StarArrangement::string;
    } else {
      throw InvalidArgument("--arrangement must be isolated or string");
    }
    if (has_degenerate_star(spec)) {
      std::cerr << "warning: a hub with one leaf is just an edge (P2)\n";
    }
    g = gen_stars(spec);
  } else {
    throw InvalidArgument("unknown model '" + args.model + "'");
  }
  write_edge_list_file(args.output, g);
  std::cout << "N=" << g.alive_count() << " E=" << g.edge_count() << '\n';
  return 0;
}

struct SolveArgs {
  std::string input;
  std::string mode = "closure-consistent";
  bool exact = false;
  bool trace = false;
  bool print_set = false;
};

void print_set(const VertexSet& s) {
  for (Vertex v : s) std::cout << v << '\n';
}

int run_zf(const SolveArgs& args) {
  LmMode mode = parse_lm_mode(args.mode);
  Graph g = read_edge_list_file(args.input);
  ForcingResult r = lm_zero_forcing(g, LmOptions{mode, args.trace});
  if (!is_forcing_set(g, r.zfs)) {
    std::cerr << "internal error: LM output is not a zero forcing set\n";
    return kInternal;
  }
  std::cout << "Z_LM=" << r.z_lm << " delta_Z=" << r.delta_z << " N=" << g.alive_count() << '\n';
  std::cout << "mr_lower_bound=" << minimum_rank_lower_bound(g.alive_count(), r.z_lm) << '\n';
  if (args.exact) {
    ExactResult e = exact_zero_forcing(g);
    std::cout << "Z=" << e.size << '\n';
  }
  if (args.trace) {
    for (const auto& ev : r.trace) std::cerr << to_string(ev.rule) << ' ' << ev.vertex << '\n';
  }
  if (args.print_set) print_set(r.zfs);
  return 0;
}

int run_vc(const SolveArgs& args) {
  Graph g = read_edge_list_file(args.input);
  CoverResult r = lm_vertex_cover(g);
  if (!is_vertex_cover(g, r.cover)) {
    std::cerr << "internal error: LM output is not a vertex cover\n";
    return kInternal;
  }
  std::cout << "V_LM=" << r.v_lm << " delta_V=" << r.delta_v << " N=" << g.alive_count() << '\n';
  if (args.exact) {
    ExactResult e = exact_vertex_cover(g);
    std::cout << "V=" << e.size << '\n';
  }
  if (args.print_set) print_set(r.cover);
  return 0;
}

struct StatsArgs {
  std::string input;
  std::size_t k_min = 0;
  std::string diameter = "two-sweep";
};

int run_stats(const StatsArgs& args) {
  DiameterMethod method;
  if (args.diameter == "exact") {
    method = DiameterMethod::exact;
  } else if (args.diameter == "two-sweep") {
    method = DiameterMethod::two_sweep;
  } else {
    throw InvalidArgument("--diameter must be exact or two-sweep");
  }
  Graph g = read_edge_list_file(args.input);
  DegreeStats stats = degree_distribution(g);
  std::cout << "degree,count\n";
  for (auto [k, count] : stats.histogram) std::cout << k << ',' << count << '\n';

  std::size_t k_min = args.k_min;
  if (k_min == 0) {
    std::size_t min_degree = stats.histogram.begin()->first;
    k_min = std::max<std::size_t>(1, 4 * min_degree);
  }
  try {
    GammaEstimate est = estimate_gamma(stats, k_min);
    std::cout << "gamma_hat=" << est.gamma << " stderr=" << est.std_error
              << " n_tail=" << est.n_tail << " k_min=" << k_min << '\n';
  } catch (const InvalidArgument& e) {
    std::cout << "gamma_hat=NA k_min=" << k_min << " reason=\"" << e.what() << "\"\n";
  }
  DiameterResult d = diameter(g, method);
  std::cout << "diameter=" << d.diameter << " method=" << args.diameter << '\n';
  std::cout << "components=" << d.components << " largest=" << d.largest_component << '\n';
  return 0;
}

struct ExperimentArgs {
  std::string config;
  std::string preset;
  std::size_t workers = 0;
  std::string output;
  std::string summary;
  std::optional<std::string> model;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::size_t> replicas;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  std::vector<double> a_grid;
  bool no_timing = false;
};

int run_experiment_cmd(const ExperimentArgs& args) {
  ExperimentConfig cfg;
  Model preset_model = args.model ? parse_model(*args.model) : Model::pa;
  if (args.preset == "full") {
    cfg = full_preset(preset_model);
  } else if (args.preset.empty() || args.preset == "desk") {
    cfg = desk_preset(preset_model);
  } else {
    throw InvalidArgument("--preset must be desk or full");
  }
  if (!args.config.empty()) cfg = load_config(args.config, cfg);
  if (args.model) cfg.model = parse_model(*args.model);
  if (args.n) cfg.n = *args.n;
  if (args.m) cfg.m = *args.m;
  if (args.replicas) cfg.replicas = *args.replicas;
  if (args.seed) cfg.master_seed = *args.seed;
  if (args.mode) cfg.mode = parse_lm_mode(*args.mode);
  if (!args.a_grid.empty()) cfg.a_grid = args.a_grid;
  if (args.no_timing) cfg.timing = false;
  validate(cfg);

  auto records = run_experiment(cfg, args.workers);
  emit_csv(args.output, records);
  auto rows = aggregate(records);
  if (!args.summary.empty()) emit_csv(args.summary, rows);
  write_summary_csv(std::cout, rows);
  return 0;
}

struct FitArgs {
  std::string csv;
  std::string window = "2.0:2.6";
  std::optional<std::string> model;
};

int run_fit(const FitArgs& args) {
  auto rows = load_rows(args.csv);
  std::optional<Model> model;
  if (args.model) model = parse_model(*args.model);
  ThresholdScalings fits = fit_threshold_scalings(rows, parse_window(args.window), model);
  std::cout << "quantity,slope,intercept,r_squared,points\n";
  std::cout << "1-z," << fits.forcing.slope << ',' << fits.forcing.intercept << ','
            << fits.forcing.r_squared << ',' << fits.forcing.points << '\n';
  std::cout << "v," << fits.cover.slope << ',' << fits.cover.intercept << ','
            << fits.cover.r_squared << ',' << fits.cover.points << '\n';
  return 0;
}

struct PlotArgs {
  std::string csv;
  std::string quantity = "z";
  std::string output;
};

int run_plot(const PlotArgs& args) {
  PlotQuantity q = parse_plot_quantity(args.quantity);
  emit_plot(args.output, load_rows(args.csv), q);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero forcing and vertex cover heuristics on power-law graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a graph and write it as an edge list");
  generate->add_option("--model", gen.model, "pa | deact | stars")->required();
  generate->add_option("--n", gen.n, "Number of vertices (pa, deact)");
  generate->add_option("--m", gen.m, "Edges per new vertex (pa, deact)");
  generate->add_option("--a", gen.a, "Initial attractiveness; gamma = 2 + a");
  generate->add_option("--hub-degrees", gen.hub_degrees, "Leaves per hub, e.g. 3,3,4 (stars)");
  generate->add_option("--arrangement", gen.arrangement, "isolated | string (stars)");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("-o,--output", gen.output, "Edge-list output path")->required();

  SolveArgs zf_args;
  auto* zf = app.add_subcommand("zf", "Estimate the zero forcing number (LM heuristic)");
  zf->add_option("edgelist", zf_args.input)->required();
  zf->add_option("--mode", zf_args.mode, "closure-consistent | strict-literal");
  zf->add_flag("--exact", zf_args.exact, "Also run the brute-force oracle (small graphs only)");
  zf->add_flag("--trace", zf_args.trace, "Print rule events to stderr");
  zf->add_flag("--set", zf_args.print_set, "Print the forcing set, one id per line");

  SolveArgs vc_args;
  auto* vc = app.add_subcommand("vc", "Estimate the minimum vertex cover (LM heuristic)");
  vc->add_option("edgelist", vc_args.input)->required();
  vc->add_flag("--exact", vc_args.exact, "Also run the brute-force oracle (small graphs only)");
  vc->add_flag("--set", vc_args.print_set, "Print the cover, one id per line");

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Degree histogram, exponent estimate, diameter");
  stats->add_option("edgelist", stats_args.input)->required();
  stats->add_option("--kmin", stats_args.k_min, "Tail cut-off for the exponent (default 4x min degree)");
  stats->add_option("--diameter", stats_args.diameter, "exact | two-sweep");

  ExperimentArgs exp_args;
  auto* experiment = app.add_subcommand("experiment", "Run a gamma sweep");
  experiment->require_subcommand(0, 1);
  experiment->add_option("--config", exp_args.config, "JSON config file");
  experiment->add_option("--preset", exp_args.preset, "desk | full");
  experiment->add_option("--workers", exp_args.workers, "Worker threads (default: all cores)");
  experiment->add_option("-o,--output", exp_args.output, "Per-replica record CSV");
  experiment->add_option("--summary", exp_args.summary, "Aggregated summary CSV");
  experiment->add_option("--model", exp_args.model, "pa | deact");
  experiment->add_option("--n", exp_args.n);
  experiment->add_option("--m", exp_args.m);
  experiment->add_option("--replicas", exp_args.replicas);
  experiment->add_option("--seed", exp_args.seed, "Master seed");
  experiment->add_option("--mode", exp_args.mode, "closure-consistent | strict-literal");
  experiment->add_option("--a-grid", exp_args.a_grid, "Attractiveness values")->delimiter(',');
  experiment->add_flag("--no-timing", exp_args.no_timing, "Write 0 for wall time");

  FitArgs fit_args;
  auto* fit = experiment->add_subcommand("fit", "Fit the near-threshold scalings");
  fit->add_option("--csv", fit_args.csv, "Record or summary CSV")->required();
  fit->add_option("--window", fit_args.window, "Gamma window lo:hi, lo exclusive");
  fit->add_option("--model", fit_args.model, "pa | deact");

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot", "Render a sweep as SVG");
  plot->add_option("--csv", plot_args.csv, "Record or summary CSV")->required();
  plot->add_option("--quantity", plot_args.quantity, "z | v | delta_z | delta_v");
  plot->add_option("-o,--output", plot_args.output, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (zf->parsed()) return run_zf(zf_args);
    if (vc->parsed()) return run_vc(vc_args);
    if (stats->parsed()) return run_stats(stats_args);
    if (fit->parsed()) return run_fit(fit_args);
    if (experiment->parsed()) {
      if (exp_args.output.empty()) throw InvalidArgument("experiment needs -o <csv>");
      return run_experiment_cmd(exp_args);
    }
    if (plot->parsed()) return run_plot(plot_args);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
