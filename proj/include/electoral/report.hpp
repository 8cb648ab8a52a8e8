#pragma once

#include <optional>
#include <string>

#include "electoral/interval_set.hpp"
#include "electoral/voter_model.hpp"

namespace electoral {

/// A concrete profitable deviation found by an equilibrium check. Exactly one
/// of the strategy fields is set: interval strategies for the targeted game,
/// scalar shares for the untargeted one.
struct DeviationWitness {
    Politician role = Politician::Incumbent;
    std::optional<IntervalSet> set_strategy;
    std::optional<double> share_strategy;
    double cost = 0.0;
};

/// Outcome of an equilibrium check.
/// Invariant: equilibrium == (winner_actual_cost <= winner_min_cost + tol
/// && !loser_can_win_under_budget), with the checking routine's tolerance.
struct VerificationReport {
    bool equilibrium = false;
    Politician winner = Politician::Incumbent;
    // Cheapest expenditure with which the winner still wins against the
    // opponent's strategy. Unset when the check could not bound it.
    std::optional<double> winner_min_cost;
    double winner_actual_cost = 0.0;
    bool loser_can_win_under_budget = false;
    std::optional<DeviationWitness> witness;
    std::string notes;
};

}  // namespace electoral
