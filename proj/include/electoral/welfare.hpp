#pragma once

#include "electoral/interval_set.hpp"
#include "electoral/voter_model.hpp"

namespace electoral {

enum class Regime { SmallBudget, LargeBudget };

/// Equilibrium welfare scenarios in the informed game. Small-budget welfare
/// depends on where the Incumbent's left-swing block sits, so it is reported
/// as a worst/best bracket; the large-budget equilibrium is unique.
enum class InformedScenario { LargeBudget, SmallBudgetWorst, SmallBudgetBest };

enum class BetterScenario { Informed, Uninformed, Tie };

/// Regime of the budget. Throws RegimeBoundaryError at |v - (R-1/2)| <= 1e-12.
Regime regime_of(const ModelParams& params);

/// Closed-form aggregate voter welfare (utilitarian, ideology plus targeted
/// good) in the informed-game equilibrium for the given scenario.
/// Throws std::domain_error if the scenario does not match the regime of v.
double welfare_informed_closed(const ModelParams& params,
                               InformedScenario scenario);

/// Closed-form welfare in the uninformed-game equilibrium. Equals
/// (s_I* alpha - 1) / 2 with s_I* the equilibrium Incumbent share.
double welfare_uninformed_closed(const ModelParams& params);

/// Closed-form welfare in the contiguous-coverage extension equilibrium:
/// (v alpha - 1) / 2.
double welfare_uninformed_ext_closed(const ModelParams& params);

/// Quadrature oracle: integrates voter payoffs over [0,1] for a winner whose
/// equilibrium allocation is the given interval set. Composite midpoint rule
/// with subdivision aligned to interval endpoints, so the piecewise-linear
/// integrand is integrated exactly up to rounding. grid_n >= 1000 required.
double welfare_numeric(Politician winner, const IntervalSet& allocation,
                       const ModelParams& params, int grid_n = 100000);

/// Same oracle for share-based (probabilistic) allocations: every voter
/// receives the good with probability `share`.
double welfare_numeric(Politician winner, double share,
                       const ModelParams& params, int grid_n = 100000);

/// Budget above which uninformed politicians yield higher welfare than
/// informed ones (worst-case bracket): closed form
/// (-a^3 - 6a^2 - 8a) / (2a^3 - 16a - 32). Always exceeds the regime
/// boundary R - 1/2.
double welfare_cutoff(double alpha);

/// Independent oracle for welfare_cutoff: bisects
/// welfare_informed(large budget) - welfare_uninformed(v) over
/// v in (R - 1/2 + 1e-9, 1). tol >= 1e-12 required.
double welfare_cutoff_bisect(double alpha, double tol = 1e-10);

/// Budget above which the contiguous-coverage extension beats the informed
/// game: exactly the regime boundary R - 1/2.
double welfare_cutoff_ext(double alpha);

/// All equilibrium welfare values for one (alpha, v), with regime and
/// which-game-is-better labels. The informed side of the comparison uses the
/// worst-case bracket in the small-budget regime.
struct WelfareReport {
    double alpha = 0.0;
    double v = 0.0;
    Regime regime = Regime::SmallBudget;
    double informed_worst = 0.0;
    double informed_best = 0.0;
    double informed_value = 0.0;  // worst-case bracket or the unique value
    double uninformed = 0.0;
    double uninformed_ext = 0.0;
    BetterScenario better = BetterScenario::Informed;      // informed vs uninformed
    BetterScenario better_ext = BetterScenario::Informed;  // informed vs extension
};

WelfareReport make_welfare_report(const ModelParams& params);

}  // namespace electoral
