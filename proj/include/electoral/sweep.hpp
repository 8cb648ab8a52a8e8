#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "electoral/welfare.hpp"

namespace electoral {

/// Parameter sweep over budgets (and optionally several alphas) producing
/// one welfare row per (alpha, v) pair.
struct SweepConfig {
    std::vector<double> alphas;
    double v_min = 0.0;
    double v_max = 0.0;
    int v_steps = 0;  // number of points, inclusive of both ends; >= 2
    bool self_check = false;
};

struct SweepRow {
    double alpha = 0.0;
    double v = 0.0;
    Regime regime = Regime::SmallBudget;
    double informed_worst = 0.0;
    double informed_best = 0.0;
    double uninformed = 0.0;
    double uninformed_ext = 0.0;
    double cutoff_welfare = 0.0;  // informed-vs-uninformed welfare cutoff
    double cutoff_ext = 0.0;      // informed-vs-extension cutoff
};

/// Formats a double with 9 significant digits ("%.9g"), the format used by
/// every CSV and text report in the tool.
std::string format_sig9(double x);

/// Computes all rows, ascending by (alpha, v). Rows on the regime boundary
/// are skipped; their v values are appended to skipped_boundary when given.
/// When config.self_check is set, every welfare value is cross-checked
/// against the quadrature oracle within 1e-8; a mismatch throws OracleError.
std::vector<SweepRow> run_sweep(const SweepConfig& config,
                                std::vector<double>* skipped_boundary = nullptr);

/// CSV with the fixed header
/// alpha,v,regime,welfare_informed_worst,welfare_informed_best,
/// welfare_uninformed,welfare_uninformed_ext,cutoff_prop3,cutoff_ext
/// (one line). Output is byte-identical across runs for the same config.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Simple SVG plot of the welfare curves against v (one polyline per curve
/// and alpha; informed curves split at the regime boundary).
void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows);

struct CutoffRow {
    double alpha = 0.0;
    double regime_boundary = 0.0;
    double cutoff_closed = 0.0;
    double cutoff_bisect = 0.0;
    double cutoff_ext = 0.0;
};

std::vector<CutoffRow> compute_cutoffs(const std::vector<double>& alphas);

void write_cutoffs_csv(std::ostream& out, const std::vector<CutoffRow>& rows);

}  // namespace electoral
