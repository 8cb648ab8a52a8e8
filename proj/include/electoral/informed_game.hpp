#pragma once

#include <optional>

#include "electoral/interval_set.hpp"
#include "electoral/report.hpp"
#include "electoral/voter_model.hpp"

namespace electoral {

/// A strategy split into the only parts that can move votes: the left swing
/// region (left cutoff, 1/2) and the right swing region (1/2, right cutoff).
/// Mass spent on partisans is recorded as waste.
struct SwingDecomposition {
    IntervalSet left;   // intersection with the left swing region
    IntervalSet right;  // intersection with the right swing region
    double waste = 0.0;
};

/// Strategy pair for the game where both politicians observe voter positions.
/// Construction enforces the budget cap measure(S) <= v (+ kMeasureTol) for
/// both players; violations throw std::domain_error.
struct InformedProfile {
    InformedProfile(IntervalSet incumbent, IntervalSet challenger,
                    const ModelParams& params);

    IntervalSet incumbent;
    IntervalSet challenger;
    ModelParams params;
};

struct InformedOutcome {
    double incumbent_share = 0.0;  // fraction of the vote for the Incumbent
    Politician winner = Politician::Incumbent;
    double payoff_incumbent = 0.0;  // v - spend if winner, else 0
    double payoff_challenger = 0.0;
};

// Which small-budget equilibrium to construct: the Incumbent's mass can sit
// anywhere in the left swing region, so welfare is bracketed by placing it
// adjacent to 1/2 (worst) or adjacent to the left cutoff (best).
enum class Placement { Worst, Best };

SwingDecomposition decompose(const IntervalSet& strategy,
                             const ModelParams& params);

/// Vote share law: 1/2 - measure(right_C \ right_I) + measure(left_I \ left_C).
double incumbent_vote_share(const InformedProfile& profile);

/// Winner (Incumbent on ties) and politician payoffs.
InformedOutcome informed_outcome(const InformedProfile& profile);

/// The equilibrium profile for the current regime. Small budgets
/// (v < right - 1/2) pit an Incumbent block in the left swing region against
/// the Challenger's block [1/2, 1/2+v]; large budgets make both cover the
/// whole right swing region. Throws RegimeBoundaryError when
/// |v - (right - 1/2)| <= 1e-12.
InformedProfile equilibrium_informed(const ModelParams& params,
                                     Placement placement);

/// Cheapest expenditure with which the Incumbent beats the given Challenger
/// strategy. Always attainable: covering the Challenger's right-swing mass
/// restores the tie, which the Incumbent wins.
double min_winning_cost_incumbent(const IntervalSet& challenger,
                                  const ModelParams& params);

/// Infimum expenditure with which the Challenger beats the given Incumbent
/// strategy. The infimum (cover the Incumbent's left-swing mass, then add an
/// arbitrarily small slice of uncovered right swing) is never attained.
/// infimum == nullopt means winning is impossible at any expenditure: the
/// Incumbent already covers the entire right swing region.
struct ChallengerWinCost {
    std::optional<double> infimum;
    bool attainable = false;
};

ChallengerWinCost min_winning_cost_challenger(const IntervalSet& incumbent,
                                              const ModelParams& params);

/// Closed-form equilibrium check: the winner must spend no more than their
/// minimum winning cost (tolerance kMeasureTol), and the loser must have no
/// deviation that wins while spending strictly under the budget.
VerificationReport is_equilibrium_informed(const InformedProfile& profile);

}  // namespace electoral
