#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zforce/experiment.hpp"

namespace zforce {

// Record CSV columns, in order:
//   model,a,gamma,replica,seed,z_lm_frac,delta_z_frac,v_lm_frac,delta_v_frac,diameter,walltime_ms
// Summary CSV columns, in order:
//   model,a,gamma,replicas,z_lm_mean,z_lm_se,delta_z_mean,delta_z_se,v_lm_mean,v_lm_se,
//   delta_v_mean,delta_v_se,diameter_mean,diameter_se,gamma_hat_mean,gamma_hat_se
// a and gamma use the shortest round-trip decimal form; measured values use
// 6 significant digits; unmeasured values are empty cells.

inline constexpr std::string_view kRecordHeader =
    "model,a,gamma,replica,seed,z_lm_frac,delta_z_frac,v_lm_frac,delta_v_frac,diameter,"
    "walltime_ms";
inline constexpr std::string_view kSummaryHeader =
    "model,a,gamma,replicas,z_lm_mean,z_lm_se,delta_z_mean,delta_z_se,v_lm_mean,v_lm_se,"
    "delta_v_mean,delta_v_se,diameter_mean,diameter_se,gamma_hat_mean,gamma_hat_se";

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);
void emit_csv(const std::string& path, const std::vector<RunRecord>& records);
void emit_csv(const std::string& path, const std::vector<SummaryRow>& rows);

std::vector<RunRecord> read_records_csv(std::istream& in);
std::vector<SummaryRow> read_summary_csv(std::istream& in);

/// Reads either CSV flavour; record files are aggregated on the way in.
std::vector<SummaryRow> load_rows(const std::string& path);

enum class PlotQuantity { z, v, delta_z, delta_v };

PlotQuantity parse_plot_quantity(std::string_view text);

/**
 * Static SVG line chart: x = gamma, y = mean fraction with standard-error
 * bars, one series per model, y axis fixed to [0, 1.05]. A legend is drawn
 * when more than one model is present. Each data point is one
 * <circle class="marker">.
 */
void write_plot_svg(std::ostream& out, const std::vector<SummaryRow>& rows, PlotQuantity q);
void emit_plot(const std::string& path, const std::vector<SummaryRow>& rows, PlotQuantity q);

}  // namespace zforce
