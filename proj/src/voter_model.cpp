#include "electoral/voter_model.hpp"

#include <stdexcept>

namespace electoral {

ModelParams::ModelParams(double alpha_in, double v_in)
    : alpha(alpha_in), v(v_in) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("alpha must lie strictly inside (0,1)");
    }
    if (!(v > 0.0 && v <= 1.0)) {
        throw std::domain_error("budget v must lie in (0,1]");
    }
}

PartisanCutoffs partisan_cutoffs(const ModelParams& params) {
    const double a = params.alpha;
    return PartisanCutoffs{(1.0 - a) / (2.0 - a), (1.0 + a) / (2.0 + a)};
}

double voter_payoff(double t, Politician winner, bool receives_good,
                    const ModelParams& params) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("voter position outside [0,1]");
    }
    const double ideological =
        winner == Politician::Incumbent ? -(1.0 - t) : -t;
    const double good = receives_good ? params.alpha * (1.0 - t) : 0.0;
    return ideological + good;
}

VoteChoice vote(double t, bool offered_by_incumbent, bool offered_by_challenger,
                const ModelParams& params) {
    const double if_incumbent =
        voter_payoff(t, Politician::Incumbent, offered_by_incumbent, params);
    const double if_challenger =
        voter_payoff(t, Politician::Challenger, offered_by_challenger, params);
    if (if_incumbent > if_challenger) return VoteChoice::Incumbent;
    if (if_incumbent < if_challenger) return VoteChoice::Challenger;
    return VoteChoice::Split;
}

}  // namespace electoral
