#pragma once

#include <optional>

#include "electoral/voter_model.hpp"

namespace electoral {

/// Strategy pair when politicians cannot observe voter positions and instead
/// commit to coverage shares: each voter receives the good from politician i
/// independently with probability s_i. Shares may exceed the budget v (such
/// deviations simply earn a negative payoff when they win).
struct UninformedProfile {
    UninformedProfile(double s_incumbent, double s_challenger,
                      const ModelParams& params);

    double s_incumbent;
    double s_challenger;
    ModelParams params;
};

struct UninformedOutcome {
    double incumbent_share = 0.0;
    Politician winner = Politician::Incumbent;
    double payoff_incumbent = 0.0;
    double payoff_challenger = 0.0;
    // Position of the voter indifferent between the two politicians; only
    // meaningful in the correlated-coverage extension.
    std::optional<double> indifferent_voter;
};

/// Expected Incumbent vote share under independent random coverage:
/// (1-R) + (R-1/2)(1 - s_C(1-s_I)) + (1/2-L)(1-s_C) s_I
/// with L, R the partisan cutoffs. Weakly increasing in s_I, weakly
/// decreasing in s_C.
double expected_incumbent_share(double s_incumbent, double s_challenger,
                                const ModelParams& params);

/// Unique equilibrium: the Challenger spends the whole budget, the Incumbent
/// responds with s_I = (2-alpha) v / (alpha (1-2v) + 2) < v, which restores
/// the expected share to exactly 1/2.
UninformedProfile equilibrium_uninformed(const ModelParams& params);

UninformedOutcome uninformed_outcome(const UninformedProfile& profile);

/// Extension where each politician covers a contiguous block of voters
/// adjacent to their own end of the spectrum. The voter indifferent between
/// the two is t = (1 + alpha(s_C - s_I)) / (2 + alpha(s_C - s_I)); everyone
/// to the right votes Incumbent.
double indifferent_voter_ext(double s_incumbent, double s_challenger,
                             const ModelParams& params);

/// Extension equilibrium: both politicians spend the whole budget.
UninformedProfile equilibrium_uninformed_ext(const ModelParams& params);

UninformedOutcome uninformed_ext_outcome(const UninformedProfile& profile);

}  // namespace electoral
