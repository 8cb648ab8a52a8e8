#include "electoral/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "electoral/errors.hpp"
#include "electoral/uninformed_game.hpp"

namespace electoral {

namespace {

constexpr char kSweepHeader[] =
    "alpha,v,regime,welfare_informed_worst,welfare_informed_best,"
    "welfare_uninformed,welfare_uninformed_ext,cutoff_prop3,cutoff_ext";

constexpr char kCutoffsHeader[] =
    "alpha,regime_boundary,cutoff_closed,cutoff_bisect,cutoff_ext";

const char* regime_label(Regime regime) {
    return regime == Regime::SmallBudget ? "small_budget" : "large_budget";
}

void self_check_row(const SweepRow& row) {
    const ModelParams params(row.alpha, row.v);
    const PartisanCutoffs cut = partisan_cutoffs(params);
    const double tol = 1e-8;
    auto check = [&](double closed, double numeric, const char* what) {
        if (std::abs(closed - numeric) > tol) {
            throw OracleError(std::string("self-check mismatch for ") + what);
        }
    };
    if (row.regime == Regime::SmallBudget) {
        check(row.informed_worst,
              welfare_numeric(Politician::Incumbent,
                              IntervalSet::of(0.5 - row.v, 0.5), params),
              "welfare_informed_worst");
        check(row.informed_best,
              welfare_numeric(Politician::Incumbent,
                              IntervalSet::of(cut.left, cut.left + row.v),
                              params),
              "welfare_informed_best");
    } else {
        check(row.informed_worst,
              welfare_numeric(Politician::Incumbent,
                              IntervalSet::of(0.5, cut.right), params),
              "welfare_informed (large budget)");
    }
    check(row.uninformed,
          welfare_numeric(Politician::Incumbent,
                          equilibrium_uninformed(params).s_incumbent, params),
          "welfare_uninformed");
    check(row.uninformed_ext,
          welfare_numeric(Politician::Incumbent, row.v, params),
          "welfare_uninformed_ext");
}

}  // namespace

std::string format_sig9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config,
                                std::vector<double>* skipped_boundary) {
    if (config.alphas.empty()) {
        throw std::domain_error("sweep needs at least one alpha");
    }
    if (config.v_steps < 2) {
        throw std::domain_error("sweep needs at least two budget steps");
    }
    if (!(config.v_min > 0.0 && config.v_max <= 1.0 &&
          config.v_min <= config.v_max)) {
        throw std::domain_error("sweep budget range must satisfy 0 < v_min <= "
                                "v_max <= 1");
    }
    std::vector<double> alphas = config.alphas;
    std::sort(alphas.begin(), alphas.end());

    std::vector<SweepRow> rows;
    for (double alpha : alphas) {
        const double cutoff_welfare = welfare_cutoff(alpha);
        const double cutoff_ext = welfare_cutoff_ext(alpha);
        for (int k = 0; k < config.v_steps; ++k) {
            const double v =
                k + 1 == config.v_steps
                    ? config.v_max
                    : config.v_min + k * (config.v_max - config.v_min) /
                                         (config.v_steps - 1);
            const ModelParams params(alpha, v);
            WelfareReport report;
            try {
                report = make_welfare_report(params);
            } catch (const RegimeBoundaryError&) {
                if (skipped_boundary) skipped_boundary->push_back(v);
                continue;
            }
            SweepRow row;
            row.alpha = alpha;
            row.v = v;
            row.regime = report.regime;
            row.informed_worst = report.informed_worst;
            row.informed_best = report.informed_best;
            row.uninformed = report.uninformed;
            row.uninformed_ext = report.uninformed_ext;
            row.cutoff_welfare = cutoff_welfare;
            row.cutoff_ext = cutoff_ext;
            if (config.self_check) self_check_row(row);
            rows.push_back(row);
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepHeader << '\n';
    for (const SweepRow& row : rows) {
        out << format_sig9(row.alpha) << ',' << format_sig9(row.v) << ','
            << regime_label(row.regime) << ','
            << format_sig9(row.informed_worst) << ','
            << format_sig9(row.informed_best) << ','
            << format_sig9(row.uninformed) << ','
            << format_sig9(row.uninformed_ext) << ','
            << format_sig9(row.cutoff_welfare) << ','
            << format_sig9(row.cutoff_ext) << '\n';
    }
}

namespace {

struct Series {
    const char* label;
    const char* color;
    std::vector<std::pair<double, double>> points;  // (v, welfare)
};

std::string svg_polyline(const std::vector<std::pair<double, double>>& pts,
                         const char* color, double x0, double x1, double y0,
                         double y1, int width, int height, int margin) {
    if (pts.size() < 2) return "";
    std::string out = "  <polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"2\" points=\"";
    char buf[64];
    for (const auto& [x, y] : pts) {
        const double px =
            margin + (x - x0) / (x1 - x0) * (width - 2 * margin);
        const double py =
            height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin);
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px, py);
        out += buf;
    }
    out += "\"/>\n";
    return out;
}

}  // namespace

void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows) {
    const int width = 820, height = 520, margin = 60;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
        << height << "\">\n";
    if (rows.empty()) {
        out << "</svg>\n";
        return;
    }
    double x0 = rows.front().v, x1 = rows.front().v;
    double y0 = rows.front().informed_worst, y1 = y0;
    auto stretch = [&](double y) {
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    for (const SweepRow& r : rows) {
        x0 = std::min(x0, r.v);
        x1 = std::max(x1, r.v);
        stretch(r.informed_worst);
        stretch(r.informed_best);
        stretch(r.uninformed);
        stretch(r.uninformed_ext);
    }
    if (x1 <= x0) x1 = x0 + 1e-9;
    const double pad = 0.05 * (y1 - y0 + 1e-12);
    y0 -= pad;
    y1 += pad;

    // axes
    out << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
        << width - 2 * margin << "\" height=\"" << height - 2 * margin
        << "\" fill=\"none\" stroke=\"#333\"/>\n";
    char buf[128];
    for (int i = 0; i <= 4; ++i) {
        const double fx = x0 + i * (x1 - x0) / 4;
        const double px = margin + i * (width - 2.0 * margin) / 4;
        std::snprintf(buf, sizeof buf,
                      "  <text x=\"%.2f\" y=\"%d\" font-size=\"12\" "
                      "text-anchor=\"middle\">%s</text>\n",
                      px, height - margin + 18, format_sig9(fx).c_str());
        out << buf;
        const double fy = y0 + i * (y1 - y0) / 4;
        const double py = height - margin - i * (height - 2.0 * margin) / 4;
        std::snprintf(buf, sizeof buf,
                      "  <text x=\"%d\" y=\"%.2f\" font-size=\"12\" "
                      "text-anchor=\"end\">%s</text>\n",
                      margin - 6, py + 4, format_sig9(fy).c_str());
        out << buf;
    }
    out << "  <text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" font-size=\"13\" text-anchor=\"middle\">budget v</text>\n";
    out << "  <text x=\"16\" y=\"" << height / 2
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
           "16 "
        << height / 2 << ")\">welfare</text>\n";

    // group rows per alpha; split informed curves at the regime switch
    std::vector<double> alphas;
    for (const SweepRow& r : rows) {
        if (alphas.empty() || alphas.back() != r.alpha) alphas.push_back(r.alpha);
    }
    int legend_y = margin + 16;
    for (double alpha : alphas) {
        Series worst_small{"informed worst", "#1f77b4", {}};
        Series worst_large{"informed", "#1f77b4", {}};
        Series best_small{"informed best", "#2ca02c", {}};
        Series unin{"uninformed", "#d62728", {}};
        Series ext{"uninformed ext", "#9467bd", {}};
        for (const SweepRow& r : rows) {
            if (r.alpha != alpha) continue;
            if (r.regime == Regime::SmallBudget) {
                worst_small.points.emplace_back(r.v, r.informed_worst);
                best_small.points.emplace_back(r.v, r.informed_best);
            } else {
                worst_large.points.emplace_back(r.v, r.informed_worst);
            }
            unin.points.emplace_back(r.v, r.uninformed);
            ext.points.emplace_back(r.v, r.uninformed_ext);
        }
        for (const Series* s :
             {&worst_small, &worst_large, &best_small, &unin, &ext}) {
            out << svg_polyline(s->points, s->color, x0, x1, y0, y1, width,
                                height, margin);
        }
        for (const Series* s : {&worst_small, &best_small, &unin, &ext}) {
            std::snprintf(buf, sizeof buf,
                          "  <text x=\"%d\" y=\"%d\" font-size=\"12\" "
                          "fill=\"%s\">alpha=%s %s</text>\n",
                          width - margin - 190, legend_y, s->color,
                          format_sig9(alpha).c_str(), s->label);
            out << buf;
            legend_y += 16;
        }
    }
    out << "</svg>\n";
}

std::vector<CutoffRow> compute_cutoffs(const std::vector<double>& alphas) {
    if (alphas.empty()) {
        throw std::domain_error("cutoff table needs at least one alpha");
    }
    std::vector<double> sorted = alphas;
    std::sort(sorted.begin(), sorted.end());
    std::vector<CutoffRow> rows;
    rows.reserve(sorted.size());
    for (double alpha : sorted) {
        CutoffRow row;
        row.alpha = alpha;
        row.cutoff_ext = welfare_cutoff_ext(alpha);
        row.regime_boundary = row.cutoff_ext;
        row.cutoff_closed = welfare_cutoff(alpha);
        row.cutoff_bisect = welfare_cutoff_bisect(alpha);
        rows.push_back(row);
    }
    return rows;
}

void write_cutoffs_csv(std::ostream& out, const std::vector<CutoffRow>& rows) {
    out << kCutoffsHeader << '\n';
    for (const CutoffRow& row : rows) {
        out << format_sig9(row.alpha) << ',' << format_sig9(row.regime_boundary)
            << ',' << format_sig9(row.cutoff_closed) << ','
            << format_sig9(row.cutoff_bisect) << ','
            << format_sig9(row.cutoff_ext) << '\n';
    }
}

}  // namespace electoral
