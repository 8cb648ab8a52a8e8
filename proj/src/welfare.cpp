#include "electoral/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "electoral/errors.hpp"
#include "electoral/uninformed_game.hpp"

namespace electoral {

namespace {

constexpr double kBoundaryTol = 1e-12;
constexpr double kTieTol = 1e-12;

double regime_boundary(double alpha) {
    return (1.0 + alpha) / (2.0 + alpha) - 0.5;
}

// Kahan-compensated midpoint sum of f over [lo, hi] split into n cells.
template <typename F>
void midpoint_sum(double lo, double hi, int n, F&& f, double& sum,
                  double& comp) {
    const double h = (hi - lo) / n;
    for (int i = 0; i < n; ++i) {
        const double t = lo + (i + 0.5) * h;
        const double term = f(t) * h;
        const double y = term - comp;
        const double next = sum + y;
        comp = (next - sum) - y;
        sum = next;
    }
}

template <typename F>
double integrate_pieces(const std::vector<double>& breakpoints, int grid_n,
                        F&& f) {
    double sum = 0.0, comp = 0.0;
    const double total = breakpoints.back() - breakpoints.front();
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double lo = breakpoints[i];
        const double hi = breakpoints[i + 1];
        if (hi <= lo) continue;
        const int n = std::max(
            1, static_cast<int>(std::lround(grid_n * (hi - lo) / total)));
        midpoint_sum(lo, hi, n, f, sum, comp);
    }
    return sum;
}

void check_grid_n(int grid_n) {
    if (grid_n < 1000) {
        throw std::domain_error("welfare quadrature needs grid_n >= 1000");
    }
}

BetterScenario compare(double informed, double other) {
    if (std::abs(informed - other) <= kTieTol) return BetterScenario::Tie;
    return informed > other ? BetterScenario::Informed
                            : BetterScenario::Uninformed;
}

}  // namespace

Regime regime_of(const ModelParams& params) {
    const double boundary = regime_boundary(params.alpha);
    if (std::abs(params.v - boundary) <= kBoundaryTol) {
        throw RegimeBoundaryError(
            "budget sits exactly on the regime boundary v = R - 1/2");
    }
    return params.v < boundary ? Regime::SmallBudget : Regime::LargeBudget;
}

double welfare_informed_closed(const ModelParams& params,
                               InformedScenario scenario) {
    const double a = params.alpha;
    const double v = params.v;
    const Regime regime = regime_of(params);
    switch (scenario) {
        case InformedScenario::LargeBudget:
            if (regime != Regime::LargeBudget) {
                throw std::domain_error(
                    "large-budget welfare requested in the small-budget regime");
            }
            return (a * a * a - 16.0 * a - 16.0) / (8.0 * (a + 2.0) * (a + 2.0));
        case InformedScenario::SmallBudgetWorst:
            if (regime != Regime::SmallBudget) {
                throw std::domain_error(
                    "small-budget welfare requested in the large-budget regime");
            }
            return 0.5 * (a * v * v + a * v - 1.0);
        case InformedScenario::SmallBudgetBest:
            if (regime != Regime::SmallBudget) {
                throw std::domain_error(
                    "small-budget welfare requested in the large-budget regime");
            }
            return (a * a * (-(v * v)) + a * (2.0 * v * v - 2.0 * v - 1.0) + 2.0) /
                   (2.0 * (a - 2.0));
    }
    throw std::logic_error("unreachable welfare scenario");
}

double welfare_uninformed_closed(const ModelParams& params) {
    const double a = params.alpha;
    const double v = params.v;
    return (a + a * a * v - 4.0 * a * v + 2.0) / (a * (4.0 * v - 2.0) - 4.0);
}

double welfare_uninformed_ext_closed(const ModelParams& params) {
    return 0.5 * (params.v * params.alpha - 1.0);
}

double welfare_numeric(Politician winner, const IntervalSet& allocation,
                       const ModelParams& params, int grid_n) {
    check_grid_n(grid_n);
    std::vector<double> breaks{0.0, 1.0};
    for (const Interval& iv : allocation.intervals()) {
        breaks.push_back(iv.lo);
        breaks.push_back(iv.hi);
    }
    std::sort(breaks.begin(), breaks.end());
    const double a = params.alpha;
    return integrate_pieces(breaks, grid_n, [&](double t) {
        const double ideological = winner == Politician::Incumbent ? -(1.0 - t)
                                                                   : -t;
        const double good = allocation.contains(t) ? a * (1.0 - t) : 0.0;
        return ideological + good;
    });
}

double welfare_numeric(Politician winner, double share,
                       const ModelParams& params, int grid_n) {
    check_grid_n(grid_n);
    if (!(share >= 0.0 && share <= 1.0)) {
        throw std::domain_error("share must lie in [0,1]");
    }
    const double a = params.alpha;
    return integrate_pieces({0.0, 1.0}, grid_n, [&](double t) {
        const double ideological = winner == Politician::Incumbent ? -(1.0 - t)
                                                                   : -t;
        return ideological + share * a * (1.0 - t);
    });
}

double welfare_cutoff(double alpha) {
    const double a = alpha;
    const double cutoff = (-(a * a * a) - 6.0 * a * a - 8.0 * a) /
                          (2.0 * a * a * a - 16.0 * a - 32.0);
    if (!(cutoff > regime_boundary(alpha))) {
        throw OracleError("welfare cutoff fell below the regime boundary");
    }
    return cutoff;
}

double welfare_cutoff_bisect(double alpha, double tol) {
    if (!(tol >= 1e-12)) {
        throw std::domain_error("bisection tolerance must be >= 1e-12");
    }
    const double informed_large =
        (alpha * alpha * alpha - 16.0 * alpha - 16.0) /
        (8.0 * (alpha + 2.0) * (alpha + 2.0));
    auto diff = [&](double v) {
        return informed_large -
               welfare_uninformed_closed(ModelParams(alpha, v));
    };
    double lo = regime_boundary(alpha) + 1e-9;
    double hi = 1.0;
    double f_lo = diff(lo);
    double f_hi = diff(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw OracleError("no sign change on the bisection bracket");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = diff(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double welfare_cutoff_ext(double alpha) {
    const double cutoff = regime_boundary(alpha);
    if (!(cutoff > 0.0 && cutoff < 1.0)) {
        throw OracleError("extension cutoff outside (0,1)");
    }
    return cutoff;
}

WelfareReport make_welfare_report(const ModelParams& params) {
    WelfareReport report;
    report.alpha = params.alpha;
    report.v = params.v;
    report.regime = regime_of(params);
    if (report.regime == Regime::SmallBudget) {
        report.informed_worst =
            welfare_informed_closed(params, InformedScenario::SmallBudgetWorst);
        report.informed_best =
            welfare_informed_closed(params, InformedScenario::SmallBudgetBest);
        // The informed-vs-uninformed comparison is made against the worst
        // placement, so the claim holds for every equilibrium.
        report.informed_value = report.informed_worst;
    } else {
        const double value =
            welfare_informed_closed(params, InformedScenario::LargeBudget);
        report.informed_worst = value;
        report.informed_best = value;
        report.informed_value = value;
    }
    report.uninformed = welfare_uninformed_closed(params);
    report.uninformed_ext = welfare_uninformed_ext_closed(params);
    report.better = compare(report.informed_value, report.uninformed);
    report.better_ext = compare(report.informed_value, report.uninformed_ext);
    return report;
}

}  // namespace electoral
