#pragma once

namespace electoral {

enum class Politician { Incumbent, Challenger };

// Vote of a single voter. Split marks exact indifference; aggregate laws
// count it half-half, which never moves a measure because indifference only
// occurs on measure-zero sets.
enum class VoteChoice { Incumbent, Challenger, Split };

/// Model primitives. Voters sit at ideological positions t in [0,1], the
/// Challenger at 0 and the Incumbent at 1. alpha scales the value of the
/// targeted good, v is each politician's budget (total transfer mass).
struct ModelParams {
    double alpha;
    double v;

    /// Validates 0 < alpha < 1 (strict at both ends) and 0 < v <= 1.
    /// Throws std::domain_error otherwise.
    ModelParams(double alpha, double v);
};

/// Partisan geography induced by alpha: voters below `left` always vote
/// Challenger, voters above `right` always vote Incumbent, regardless of
/// transfers. Swing voters live in (left, 1/2) and (1/2, right).
struct PartisanCutoffs {
    double left;   // (1-alpha)/(2-alpha), in (0, 1/2)
    double right;  // (1+alpha)/(2+alpha), in (1/2, 1)
};

PartisanCutoffs partisan_cutoffs(const ModelParams& params);

/// Payoff of voter t when `winner` holds office and the voter did or did not
/// receive the targeted good. Throws std::domain_error if t is outside [0,1].
double voter_payoff(double t, Politician winner, bool receives_good,
                    const ModelParams& params);

/// Sincere vote of voter t given which politicians promise the good to t.
/// Compares the payoff under each possible winner; exact ties vote Split.
VoteChoice vote(double t, bool offered_by_incumbent, bool offered_by_challenger,
                const ModelParams& params);

}  // namespace electoral
