#include "zforce/experiment.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "zforce/cover.hpp"
#include "zforce/errors.hpp"
#include "zforce/generators.hpp"

namespace zforce {

using nlohmann::json;

std::string_view to_string(Model model) {
  return model == Model::pa ? "pa" : "deact";
}

Model parse_model(std::string_view text) {
  if (text == "pa") return Model::pa;
  if (text == "deact" || text == "deactivation") return Model::deactivation;
  throw InvalidArgument("unknown model '" + std::string(text) + "'");
}

ExperimentConfig desk_preset(Model model) {
  ExperimentConfig cfg;
  cfg.model = model;
  return cfg;
}

ExperimentConfig full_preset(Model model) {
  ExperimentConfig cfg;
  cfg.model = model;
  cfg.n = 10'000;
  cfg.replicas = 100;
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.replicas < 1) throw InvalidArgument("config: replicas must be at least 1");
  if (cfg.a_grid.empty()) throw InvalidArgument("config: a_grid is empty");
  for (double a : cfg.a_grid) {
    if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("config: every a must be > 0");
  }
  if (cfg.m < 1) throw InvalidArgument("config: m must be at least 1");
  if (cfg.n < cfg.m + 1) throw InvalidArgument("config: n must be at least m + 1");
  if (cfg.n > kMaxVertices) throw InvalidArgument("config: n exceeds the supported maximum");
}

namespace {

DiameterMethod parse_diameter_method(std::string_view text) {
  if (text == "exact") return DiameterMethod::exact;
  if (text == "two-sweep") return DiameterMethod::two_sweep;
  throw InvalidArgument("unknown diameter method '" + std::string(text) + "'");
}

std::string_view to_string(DiameterMethod method) {
  return method == DiameterMethod::exact ? "exact" : "two-sweep";
}

}  // namespace

ExperimentConfig config_from_json(std::string_view text, ExperimentConfig cfg) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidArgument("config must be a JSON object");
  try {
    for (auto& [key, value] : doc.items()) {
      if (key == "model") {
        cfg.model = parse_model(value.get<std::string>());
      } else if (key == "n") {
        cfg.n = value.get<std::size_t>();
      } else if (key == "m") {
        cfg.m = value.get<std::size_t>();
      } else if (key == "a_grid") {
        cfg.a_grid = value.get<std::vector<double>>();
      } else if (key == "replicas") {
        cfg.replicas = value.get<std::size_t>();
      } else if (key == "master_seed") {
        cfg.master_seed = value.get<std::uint64_t>();
      } else if (key == "mode") {
        cfg.mode = parse_lm_mode(value.get<std::string>());
      } else if (key == "measure") {
        for (auto& [flag, on] : value.items()) {
          if (flag == "zf") cfg.measure.zf = on.get<bool>();
          else if (flag == "vc") cfg.measure.vc = on.get<bool>();
          else if (flag == "diameter") cfg.measure.diameter = on.get<bool>();
          else if (flag == "gamma") cfg.measure.gamma = on.get<bool>();
          else throw InvalidArgument("config: unknown measure flag '" + flag + "'");
        }
      } else if (key == "diameter_method") {
        cfg.diameter_method = parse_diameter_method(value.get<std::string>());
      } else if (key == "k_min") {
        cfg.k_min = value.get<std::size_t>();
      } else if (key == "timing") {
        cfg.timing = value.get<bool>();
      } else {
        throw InvalidArgument("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config has a value of the wrong type: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str(), std::move(base));
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json doc{
      {"model", to_string(cfg.model)},
      {"n", cfg.n},
      {"m", cfg.m},
      {"a_grid", cfg.a_grid},
      {"replicas", cfg.replicas},
      {"master_seed", cfg.master_seed},
      {"mode", to_string(cfg.mode)},
      {"measure",
       {{"zf", cfg.measure.zf},
        {"vc", cfg.measure.vc},
        {"diameter", cfg.measure.diameter},
        {"gamma", cfg.measure.gamma}}},
      {"diameter_method", to_string(cfg.diameter_method)},
      {"k_min", cfg.k_min},
      {"timing", cfg.timing},
  };
  return doc.dump(2);
}

RunRecord run_replica(const ExperimentConfig& cfg, std::size_t grid_index, std::size_t replica) {
  const auto started = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.model = cfg.model;
  rec.a = cfg.a_grid.at(grid_index);
  rec.gamma_target = 2.0 + rec.a;
  rec.replica = replica;
  rec.seed = derive_seed(cfg.master_seed, to_string(cfg.model), grid_index, replica);

  Graph g = cfg.model == Model::pa ? gen_pa(PaParams{cfg.n, cfg.m, rec.a}, rec.seed)
                                   : gen_deactivation(DeactParams{cfg.n, cfg.m, rec.a}, rec.seed);
  const auto n = static_cast<double>(g.alive_count());

  if (cfg.measure.zf) {
    ForcingResult zf = lm_zero_forcing(g, LmOptions{cfg.mode, false});
    if (!is_forcing_set(g, zf.zfs)) {
      throw InternalError("LM zero forcing produced a non-forcing set (seed " +
                          std::to_string(rec.seed) + ")");
    }
    rec.z_lm_frac = static_cast<double>(zf.z_lm) / n;
    rec.delta_z_frac = static_cast<double>(zf.delta_z) / n;
  }
  if (cfg.measure.vc) {
    CoverResult vc = lm_vertex_cover(g);
    if (!is_vertex_cover(g, vc.cover)) {
      throw InternalError("LM vertex cover missed an edge (seed " + std::to_string(rec.seed) +
                          ")");
    }
    rec.v_lm_frac = static_cast<double>(vc.v_lm) / n;
    rec.delta_v_frac = static_cast<double>(vc.delta_v) / n;
  }
  if (cfg.measure.diameter) {
    rec.diameter = static_cast<double>(diameter(g, cfg.diameter_method).diameter);
  }
  if (cfg.measure.gamma) {
    std::size_t k_min = cfg.k_min != 0 ? cfg.k_min : 4 * cfg.m;
    try {
      rec.gamma_hat = estimate_gamma(degree_distribution(g), k_min).gamma;
    } catch (const InvalidArgument&) {
      // too little tail mass at this size: leave unmeasured
    }
  }
  if (cfg.timing) {
    rec.walltime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                started)
                          .count();
  }
  return rec;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg, std::size_t workers) {
  validate(cfg);
  const std::size_t jobs = cfg.a_grid.size() * cfg.replicas;
  std::vector<RunRecord> records(jobs);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, jobs);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t job = next.fetch_add(1);
      if (job >= jobs) return;
      try {
        // Slot = grid-major, replica-minor position; completion order is irrelevant.
        records[job] = run_replica(cfg, job / cfg.replicas, job % cfg.replicas);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(jobs);
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

namespace {

std::optional<Stat> summarise(const std::vector<double>& xs) {
  if (xs.empty()) return std::nullopt;
  Stat s;
  s.count = xs.size();
  if (std::ranges::all_of(xs, [&](double x) { return x == xs.front(); })) {
    s.mean = xs.front();
    return s;
  }
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(s.count);
  if (s.count > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    double sd = std::sqrt(ss / static_cast<double>(s.count - 1));
    s.std_error = sd / std::sqrt(static_cast<double>(s.count));
  }
  return s;
}

}  // namespace

std::vector<SummaryRow> aggregate(const std::vector<RunRecord>& records) {
  if (records.empty()) throw InvalidArgument("aggregate: no records");
  struct Group {
    Model model;
    double a;
    double gamma;
    std::vector<double> z, dz, v, dv, d, gh;
    std::size_t count = 0;
  };
  std::vector<Group> groups;
  for (const auto& r : records) {
    auto it = std::ranges::find_if(groups, [&](const Group& g) {
      return g.model == r.model && g.a == r.a;
    });
    if (it == groups.end()) {
      groups.push_back(Group{r.model, r.a, r.gamma_target, {}, {}, {}, {}, {}, {}, 0});
      it = std::prev(groups.end());
    }
    ++it->count;
    if (r.z_lm_frac) it->z.push_back(*r.z_lm_frac);
    if (r.delta_z_frac) it->dz.push_back(*r.delta_z_frac);
    if (r.v_lm_frac) it->v.push_back(*r.v_lm_frac);
    if (r.delta_v_frac) it->dv.push_back(*r.delta_v_frac);
    if (r.diameter) it->d.push_back(*r.diameter);
    if (r.gamma_hat) it->gh.push_back(*r.gamma_hat);
  }
  std::vector<SummaryRow> rows;
  for (const auto& g : groups) {
    SummaryRow row;
    row.model = g.model;
    row.a = g.a;
    row.gamma = g.gamma;
    row.replicas = g.count;
    row.z_lm = summarise(g.z);
    row.delta_z = summarise(g.dz);
    row.v_lm = summarise(g.v);
    row.delta_v = summarise(g.dv);
    row.diameter = summarise(g.d);
    row.gamma_hat = summarise(g.gh);
    rows.push_back(std::move(row));
  }
  return rows;
}

GammaWindow parse_window(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("window must look like lo:hi");
  auto parse = [&](std::string_view part) {
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw InvalidArgument("bad number '" + std::string(part) + "' in window");
    }
    return x;
  };
  GammaWindow w{parse(text.substr(0, colon)), parse(text.substr(colon + 1))};
  if (!(w.lo < w.hi)) throw InvalidArgument("window needs lo < hi");
  return w;
}

ThresholdScalings fit_threshold_scalings(const std::vector<SummaryRow>& rows, GammaWindow window,
                                 std::optional<Model> model) {
  std::vector<std::pair<double, double>> forcing, cover;
  std::optional<Model> seen;
  for (const auto& row : rows) {
    if (model && row.model != *model) continue;
    if (!window.contains(row.gamma)) continue;
    if (seen && *seen != row.model) {
      throw InvalidArgument("fit_threshold_scalings: rows mix models; choose one");
    }
    seen = row.model;
    if (!row.z_lm || !row.v_lm) {
      throw InvalidArgument("fit_threshold_scalings: rows lack zero forcing or cover measurements");
    }
    forcing.emplace_back(row.gamma - 2.0, 1.0 - row.z_lm->mean);
    cover.emplace_back(row.gamma - 2.0, row.v_lm->mean);
  }
  if (forcing.size() < 3) {
    throw InvalidArgument("fit_threshold_scalings: fewer than 3 rows inside the gamma window");
  }
  return ThresholdScalings{fit_scaling(forcing), fit_scaling(cover)};
}

}  // namespace zforce
