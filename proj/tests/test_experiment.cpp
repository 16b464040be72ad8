#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zforce/errors.hpp"
#include "zforce/experiment.hpp"
#include "zforce/report.hpp"

using namespace zforce;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.n = 60;
  cfg.m = 2;
  cfg.a_grid = {0.3, 1.0};
  cfg.replicas = 3;
  cfg.master_seed = 42;
  cfg.timing = false;
  return cfg;
}

RunRecord record(double a, double z) {
  RunRecord r;
  r.a = a;
  r.gamma_target = 2.0 + a;
  r.z_lm_frac = z;
  return r;
}

SummaryRow row(Model model, double a, double z, double v) {
  SummaryRow r;
  r.model = model;
  r.a = a;
  r.gamma = 2.0 + a;
  r.replicas = 1;
  r.z_lm = Stat{z, 0.0, 1};
  r.v_lm = Stat{v, 0.0, 1};
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("seed derivation is fixed") {
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(tag_hash("") == 0xcbf29ce484222325ULL);
  CHECK(derive_seed(1, "pa", 0, 0) != derive_seed(1, "deact", 0, 0));
  CHECK(derive_seed(1, "pa", 0, 1) != derive_seed(1, "pa", 1, 0));
  CHECK(derive_seed(7, "pa", 3, 2) == derive_seed(7, "pa", 3, 2));
}

TEST_CASE("config parsing") {
  ExperimentConfig cfg = config_from_json(
      R"({"model": "deact", "n": 300, "a_grid": [0.5, 1], "replicas": 4, "master_seed": 9,
          "mode": "strict-literal", "measure": {"diameter": false, "gamma": true},
          "diameter_method": "exact", "k_min": 6, "timing": false})");
  CHECK(cfg.model == Model::deactivation);
  CHECK(cfg.n == 300);
  CHECK(cfg.m == 2);
  CHECK(cfg.a_grid == std::vector<double>{0.5, 1.0});
  CHECK(cfg.replicas == 4);
  CHECK(cfg.master_seed == 9);
  CHECK(cfg.mode == LmMode::strict_literal);
  CHECK_FALSE(cfg.measure.diameter);
  CHECK(cfg.measure.gamma);
  CHECK(cfg.measure.zf);
  CHECK(cfg.diameter_method == DiameterMethod::exact);
  CHECK(cfg.k_min == 6);
  CHECK_FALSE(cfg.timing);

  ExperimentConfig back = config_from_json(config_to_json(cfg));
  CHECK(config_to_json(back) == config_to_json(cfg));

  CHECK_THROWS_AS(config_from_json(R"({"n": 10, "colour": 1})"), InvalidArgument);
  CHECK_THROWS_AS(config_from_json(R"({"n": "many"})"), InvalidArgument);
  CHECK_THROWS_AS(config_from_json("{not json"), IoError);
  CHECK_THROWS_AS(config_from_json("[1, 2]"), InvalidArgument);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), IoError);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg = small_config();
  CHECK_NOTHROW(validate(cfg));
  cfg.replicas = 0;
  CHECK_THROWS_AS(validate(cfg), InvalidArgument);
  cfg = small_config();
  cfg.a_grid = {};
  CHECK_THROWS_AS(validate(cfg), InvalidArgument);
  cfg.a_grid = {0.5, -1.0};
  CHECK_THROWS_AS(validate(cfg), InvalidArgument);
  cfg = small_config();
  cfg.n = 2;
  CHECK_THROWS_AS(validate(cfg), InvalidArgument);

  ExperimentConfig full = full_preset(Model::pa);
  CHECK(full.n == 10'000);
  CHECK(full.replicas == 100);
  ExperimentConfig desk = desk_preset(Model::deactivation);
  CHECK(desk.n == 2000);
  CHECK(desk.replicas == 20);
  CHECK(desk.model == Model::deactivation);
}

TEST_CASE("run_experiment layout and determinism") {
  ExperimentConfig cfg = small_config();
  cfg.a_grid = {1.0};
  cfg.replicas = 2;
  cfg.n = 50;
  auto two = run_experiment(cfg, 1);
  REQUIRE(two.size() == 2);
  for (const auto& r : two) CHECK(r.gamma_target == 3.0);

  cfg = small_config();
  auto serial = run_experiment(cfg, 1);
  auto parallel = run_experiment(cfg, 4);
  REQUIRE(serial.size() == cfg.a_grid.size() * cfg.replicas);
  std::ostringstream a, b;
  write_records_csv(a, serial);
  write_records_csv(b, parallel);
  CHECK(a.str() == b.str());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].a == cfg.a_grid[i / cfg.replicas]);
    CHECK(serial[i].replica == i % cfg.replicas);
    CHECK(serial[i].seed == derive_seed(42, "pa", i / cfg.replicas, i % cfg.replicas));
    CHECK(*serial[i].z_lm_frac > 0.0);
    CHECK(*serial[i].z_lm_frac <= 1.0);
    CHECK(*serial[i].v_lm_frac <= 1.0);
    CHECK(serial[i].walltime_ms == 0.0);
    CHECK_FALSE(serial[i].gamma_hat.has_value());
  }

  cfg.measure = MeasureFlags{false, true, false, false};
  auto only_cover = run_experiment(cfg, 2);
  CHECK_FALSE(only_cover[0].z_lm_frac.has_value());
  CHECK_FALSE(only_cover[0].diameter.has_value());
  CHECK(only_cover[0].v_lm_frac.has_value());
}

TEST_CASE("aggregate") {
  auto same = aggregate({record(1.0, 0.5), record(1.0, 0.5)});
  REQUIRE(same.size() == 1);
  CHECK(same[0].z_lm->std_error == 0.0);
  CHECK(same[0].replicas == 2);

  auto pair = aggregate({record(1.0, 0.4), record(1.0, 0.6)});
  CHECK(pair[0].z_lm->mean == doctest::Approx(0.5));
  CHECK(pair[0].z_lm->std_error == doctest::Approx(0.1));
  CHECK_FALSE(pair[0].v_lm.has_value());

  auto grouped = aggregate({record(0.5, 0.4), record(1.0, 0.6), record(0.5, 0.2)});
  REQUIRE(grouped.size() == 2);
  CHECK(grouped[0].a == 0.5);
  CHECK(grouped[0].z_lm->mean == doctest::Approx(0.3));
  CHECK(grouped[1].gamma == 3.0);

  CHECK_THROWS_AS(aggregate({}), InvalidArgument);
}

TEST_CASE("scaling fits over a gamma window") {
  std::vector<SummaryRow> rows;
  for (double a : {0.05, 0.1, 0.2, 0.5, 1.0}) {
    rows.push_back(row(Model::pa, a, 1.0 - 0.8 * a, 0.1 + 0.6 * a));
  }
  ThresholdScalings fits = fit_threshold_scalings(rows, parse_window("2.0:2.6"));
  CHECK(fits.forcing.slope == doctest::Approx(0.8));
  CHECK(fits.forcing.intercept == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(fits.cover.slope == doctest::Approx(0.6));
  CHECK(fits.cover.intercept == doctest::Approx(0.1));
  CHECK(fits.forcing.points == 4);

  CHECK_THROWS_AS(fit_threshold_scalings(rows, parse_window("5:6")), InvalidArgument);
  rows.push_back(row(Model::deactivation, 0.3, 0.9, 0.1));
  CHECK_THROWS_AS(fit_threshold_scalings(rows, parse_window("2:2.6")), InvalidArgument);
  CHECK_NOTHROW(fit_threshold_scalings(rows, parse_window("2:2.6"), Model::pa));

  GammaWindow w = parse_window("2.0:2.6");
  CHECK_FALSE(w.contains(2.0));
  CHECK(w.contains(2.6));
  CHECK_THROWS_AS(parse_window("2.6"), InvalidArgument);
  CHECK_THROWS_AS(parse_window("3:2"), InvalidArgument);
}

TEST_CASE("CSV output") {
  std::ostringstream empty;
  write_records_csv(empty, {});
  CHECK(empty.str() == std::string(kRecordHeader) + "\n");

  RunRecord r = record(0.1, 1.0 / 3.0);
  r.replica = 4;
  r.seed = 123;
  r.v_lm_frac = 0.25;
  std::ostringstream one;
  write_records_csv(one, {r});
  CHECK(one.str() == std::string(kRecordHeader) + "\npa,0.1,2.1,4,123,0.333333,,0.25,,,0\n");

  std::istringstream in(one.str());
  auto back = read_records_csv(in);
  REQUIRE(back.size() == 1);
  CHECK(back[0].a == 0.1);
  CHECK(back[0].gamma_target == 2.1);
  CHECK(*back[0].z_lm_frac == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK_FALSE(back[0].delta_z_frac.has_value());

  auto rows = aggregate({r, r});
  std::ostringstream summary;
  write_summary_csv(summary, rows);
  std::istringstream sin(summary.str());
  auto rows_back = read_summary_csv(sin);
  REQUIRE(rows_back.size() == 1);
  CHECK(rows_back[0].replicas == 2);
  CHECK(rows_back[0].v_lm->mean == doctest::Approx(0.25));
  CHECK_FALSE(rows_back[0].diameter.has_value());

  std::istringstream wrong("model,a\npa,1\n");
  CHECK_THROWS_AS(read_records_csv(wrong), IoError);
}

TEST_CASE("CSV files and loading either flavour") {
  auto dir = std::filesystem::temp_directory_path() / "zforce_report_test";
  std::filesystem::create_directories(dir);
  ExperimentConfig cfg = small_config();
  auto records = run_experiment(cfg, 2);
  emit_csv((dir / "records.csv").string(), records);
  emit_csv((dir / "summary.csv").string(), aggregate(records));
  auto from_records = load_rows((dir / "records.csv").string());
  auto from_summary = load_rows((dir / "summary.csv").string());
  REQUIRE(from_records.size() == 2);
  REQUIRE(from_summary.size() == 2);
  CHECK(from_records[1].z_lm->mean == doctest::Approx(from_summary[1].z_lm->mean).epsilon(1e-5));

  auto again = run_experiment(cfg, 3);
  emit_csv((dir / "again.csv").string(), again);
  CHECK(slurp(dir / "records.csv") == slurp(dir / "again.csv"));

  CHECK_THROWS_AS(emit_csv("/nonexistent-dir/r.csv", records), IoError);
  CHECK_THROWS_AS(load_rows((dir / "missing.csv").string()), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("SVG plots") {
  std::vector<SummaryRow> rows;
  for (double a : {0.05, 0.2, 0.5, 1.0, 2.0}) rows.push_back(row(Model::pa, a, 0.9 - 0.2 * a, 0.3));
  std::ostringstream one;
  write_plot_svg(one, rows, PlotQuantity::z);
  std::string svg = one.str();
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count("class=\"marker\"") == 5);
  CHECK(count("class=\"series\"") == 1);
  CHECK(count("class=\"legend\"") == 0);

  rows.push_back(row(Model::deactivation, 0.5, 0.7, 0.2));
  std::ostringstream two;
  write_plot_svg(two, rows, PlotQuantity::v);
  svg = two.str();
  CHECK(count("class=\"series\"") == 2);
  CHECK(count("class=\"legend\"") == 1);

  CHECK_THROWS_AS(write_plot_svg(two, {}, PlotQuantity::z), InvalidArgument);
  CHECK_THROWS_AS(write_plot_svg(two, rows, PlotQuantity::delta_z), InvalidArgument);
  CHECK(parse_plot_quantity("delta_v") == PlotQuantity::delta_v);
  CHECK_THROWS_AS(parse_plot_quantity("w"), InvalidArgument);
}
