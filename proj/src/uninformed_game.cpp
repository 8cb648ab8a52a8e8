#include "electoral/uninformed_game.hpp"

#include <stdexcept>
#include <string>

#include "electoral/interval_set.hpp"

namespace electoral {

namespace {

void check_share(double s, const char* name) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw std::domain_error(std::string(name) + " must lie in [0,1]");
    }
}

// Ties favor the office holder; tolerance guards equilibria at exactly 1/2.
Politician winner_from_share(double incumbent_share) {
    return incumbent_share >= 0.5 - kMeasureTol ? Politician::Incumbent
                                                : Politician::Challenger;
}

void fill_payoffs(UninformedOutcome& out, const UninformedProfile& profile) {
    const double v = profile.params.v;
    if (out.winner == Politician::Incumbent) {
        out.payoff_incumbent = v - profile.s_incumbent;
        out.payoff_challenger = 0.0;
    } else {
        out.payoff_incumbent = 0.0;
        out.payoff_challenger = v - profile.s_challenger;
    }
}

}  // namespace

UninformedProfile::UninformedProfile(double s_incumbent_in,
                                     double s_challenger_in,
                                     const ModelParams& params_in)
    : s_incumbent(s_incumbent_in),
      s_challenger(s_challenger_in),
      params(params_in) {
    check_share(s_incumbent, "s_incumbent");
    check_share(s_challenger, "s_challenger");
}

double expected_incumbent_share(double s_incumbent, double s_challenger,
                                const ModelParams& params) {
    check_share(s_incumbent, "s_incumbent");
    check_share(s_challenger, "s_challenger");
    const PartisanCutoffs cut = partisan_cutoffs(params);
    const double right_len = cut.right - 0.5;
    const double left_len = 0.5 - cut.left;
    // Right swing stays loyal unless covered by the Challenger alone; left
    // swing defects to the Incumbent only when covered by her alone.
    return (1.0 - cut.right) +
           right_len * (1.0 - s_challenger * (1.0 - s_incumbent)) +
           left_len * (1.0 - s_challenger) * s_incumbent;
}

UninformedProfile equilibrium_uninformed(const ModelParams& params) {
    const double a = params.alpha;
    const double v = params.v;
    const double s_incumbent = (2.0 - a) * v / (a * (1.0 - 2.0 * v) + 2.0);
    return UninformedProfile(s_incumbent, v, params);
}

UninformedOutcome uninformed_outcome(const UninformedProfile& profile) {
    UninformedOutcome out;
    out.incumbent_share = expected_incumbent_share(
        profile.s_incumbent, profile.s_challenger, profile.params);
    out.winner = winner_from_share(out.incumbent_share);
    fill_payoffs(out, profile);
    return out;
}

double indifferent_voter_ext(double s_incumbent, double s_challenger,
                             const ModelParams& params) {
    check_share(s_incumbent, "s_incumbent");
    check_share(s_challenger, "s_challenger");
    const double d = params.alpha * (s_challenger - s_incumbent);
    return (1.0 + d) / (2.0 + d);
}

UninformedProfile equilibrium_uninformed_ext(const ModelParams& params) {
    return UninformedProfile(params.v, params.v, params);
}

UninformedOutcome uninformed_ext_outcome(const UninformedProfile& profile) {
    UninformedOutcome out;
    const double t_hat = indifferent_voter_ext(
        profile.s_incumbent, profile.s_challenger, profile.params);
    out.indifferent_voter = t_hat;
    out.incumbent_share = 1.0 - t_hat;
    out.winner = winner_from_share(out.incumbent_share);
    fill_payoffs(out, profile);
    return out;
}

}  // namespace electoral
