#include "electoral/informed_game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "electoral/errors.hpp"

namespace electoral {

namespace {

constexpr double kBoundaryTol = 1e-12;

double spend(const IntervalSet& s) { return s.measure(); }

}  // namespace

InformedProfile::InformedProfile(IntervalSet incumbent_in,
                                 IntervalSet challenger_in,
                                 const ModelParams& params_in)
    : incumbent(std::move(incumbent_in)),
      challenger(std::move(challenger_in)),
      params(params_in) {
    if (spend(incumbent) > params.v + kMeasureTol ||
        spend(challenger) > params.v + kMeasureTol) {
        throw std::domain_error("strategy exceeds the budget");
    }
}

SwingDecomposition decompose(const IntervalSet& strategy,
                             const ModelParams& params) {
    const PartisanCutoffs cut = partisan_cutoffs(params);
    SwingDecomposition d;
    d.left = set_intersection(strategy, IntervalSet::of(cut.left, 0.5));
    d.right = set_intersection(strategy, IntervalSet::of(0.5, cut.right));
    d.waste = strategy.measure() - d.left.measure() - d.right.measure();
    return d;
}

double incumbent_vote_share(const InformedProfile& profile) {
    const SwingDecomposition di = decompose(profile.incumbent, profile.params);
    const SwingDecomposition dc = decompose(profile.challenger, profile.params);
    // Right swing defects to the Challenger only where he offers exclusively;
    // left swing defects to the Incumbent only where she offers exclusively.
    const double lost = set_difference(dc.right, di.right).measure();
    const double gained = set_difference(di.left, dc.left).measure();
    return 0.5 - lost + gained;
}

InformedOutcome informed_outcome(const InformedProfile& profile) {
    InformedOutcome out;
    out.incumbent_share = incumbent_vote_share(profile);
    // Ties go to the office holder; the tolerance guards the equilibria,
    // which sit at share exactly 1/2.
    out.winner = out.incumbent_share >= 0.5 - kMeasureTol
                     ? Politician::Incumbent
                     : Politician::Challenger;
    const double v = profile.params.v;
    if (out.winner == Politician::Incumbent) {
        out.payoff_incumbent = v - spend(profile.incumbent);
        out.payoff_challenger = 0.0;
    } else {
        out.payoff_incumbent = 0.0;
        out.payoff_challenger = v - spend(profile.challenger);
    }
    return out;
}

InformedProfile equilibrium_informed(const ModelParams& params,
                                     Placement placement) {
    const PartisanCutoffs cut = partisan_cutoffs(params);
    const double boundary = cut.right - 0.5;
    if (std::abs(params.v - boundary) <= kBoundaryTol) {
        throw RegimeBoundaryError(
            "budget sits exactly on the regime boundary v = R - 1/2");
    }
    if (params.v > boundary) {
        // Large budget: both cover the whole right swing region.
        IntervalSet whole = IntervalSet::of(0.5, cut.right);
        return InformedProfile(whole, whole, params);
    }
    // Small budget: the Challenger defends [1/2, 1/2+v]; the Incumbent puts
    // an equal block anywhere in the left swing region.
    IntervalSet challenger = IntervalSet::of(0.5, 0.5 + params.v);
    IntervalSet incumbent =
        placement == Placement::Worst
            ? IntervalSet::of(0.5 - params.v, 0.5)
            : IntervalSet::of(cut.left, cut.left + params.v);
    return InformedProfile(std::move(incumbent), std::move(challenger), params);
}

double min_winning_cost_incumbent(const IntervalSet& challenger,
                                  const ModelParams& params) {
    return decompose(challenger, params).right.measure();
}

ChallengerWinCost min_winning_cost_challenger(const IntervalSet& incumbent,
                                              const ModelParams& params) {
    const PartisanCutoffs cut = partisan_cutoffs(params);
    const SwingDecomposition di = decompose(incumbent, params);
    const double free_right = (cut.right - 0.5) - di.right.measure();
    ChallengerWinCost out;
    out.attainable = false;
    if (free_right > kMeasureTol) {
        // Cover the Incumbent's left-swing block, then win by an arbitrarily
        // small slice of uncovered right swing; the slice keeps the infimum
        // from being attained.
        out.infimum = di.left.measure();
    }
    return out;
}

VerificationReport is_equilibrium_informed(const InformedProfile& profile) {
    const double tol = kMeasureTol;
    const ModelParams& params = profile.params;
    const PartisanCutoffs cut = partisan_cutoffs(params);
    const InformedOutcome out = informed_outcome(profile);

    const SwingDecomposition di = decompose(profile.incumbent, params);
    const SwingDecomposition dc = decompose(profile.challenger, params);
    const double free_right = (cut.right - 0.5) - di.right.measure();

    VerificationReport report;
    report.winner = out.winner;

    bool winner_minimal = false;
    if (out.winner == Politician::Incumbent) {
        report.winner_actual_cost = spend(profile.incumbent);
        const double min_cost =
            min_winning_cost_incumbent(profile.challenger, params);
        report.winner_min_cost = min_cost;
        winner_minimal = report.winner_actual_cost <= min_cost + tol;
        if (!winner_minimal) {
            // Cheaper win: mirror the Challenger's right-swing block.
            report.witness = DeviationWitness{Politician::Incumbent, dc.right,
                                              std::nullopt, min_cost};
            report.notes =
                "winner (Incumbent) over-spends: covering the Challenger's "
                "right-swing mass wins at cost " +
                std::to_string(min_cost);
        }
        // Losing Challenger: profitable deviation iff he can win spending
        // strictly under the budget.
        const ChallengerWinCost cc =
            min_winning_cost_challenger(profile.incumbent, params);
        report.loser_can_win_under_budget =
            cc.infimum.has_value() && *cc.infimum < params.v - tol;
        if (report.loser_can_win_under_budget && !report.witness) {
            const double slack =
                std::min(free_right, (params.v - *cc.infimum) / 2.0);
            IntervalSet slice = set_difference(
                IntervalSet::of(0.5, cut.right), di.right);
            // first uncovered right-swing piece, shortened to the slack
            Interval head = slice.intervals().front();
            head.hi = std::min(head.hi, head.lo + slack);
            IntervalSet dev = set_union(di.left, IntervalSet::normalize({head}));
            report.witness = DeviationWitness{Politician::Challenger, dev,
                                              std::nullopt, dev.measure()};
            report.notes =
                "loser (Challenger) wins under budget: cover the Incumbent's "
                "left-swing mass plus a free right-swing slice";
        }
    } else {
        report.winner_actual_cost = spend(profile.challenger);
        const ChallengerWinCost cc =
            min_winning_cost_challenger(profile.incumbent, params);
        // A winning Challenger implies uncovered right swing exists, so the
        // infimum is defined; guard anyway.
        const double min_cost =
            cc.infimum.value_or(report.winner_actual_cost + 1.0);
        report.winner_min_cost = cc.infimum;
        winner_minimal = report.winner_actual_cost <= min_cost + tol;
        if (!winner_minimal) {
            const double slack = std::min(
                free_right, (report.winner_actual_cost - min_cost) / 2.0);
            IntervalSet slice = set_difference(
                IntervalSet::of(0.5, cut.right), di.right);
            Interval head = slice.intervals().front();
            head.hi = std::min(head.hi, head.lo + slack);
            IntervalSet dev = set_union(di.left, IntervalSet::normalize({head}));
            report.witness = DeviationWitness{Politician::Challenger, dev,
                                              std::nullopt, dev.measure()};
            report.notes =
                "winner (Challenger) over-spends: covering the Incumbent's "
                "left-swing mass plus a sliver of free right swing is cheaper";
        }
        const double inc_min =
            min_winning_cost_incumbent(profile.challenger, params);
        report.loser_can_win_under_budget = inc_min < params.v - tol;
        if (report.loser_can_win_under_budget && !report.witness) {
            report.witness = DeviationWitness{Politician::Incumbent, dc.right,
                                              std::nullopt, inc_min};
            report.notes =
                "loser (Incumbent) wins under budget by covering the "
                "Challenger's right-swing mass";
        }
    }

    report.equilibrium = winner_minimal && !report.loser_can_win_under_budget;
    if (report.equilibrium) {
        report.notes = "winner spends minimally and the loser cannot win "
                       "within the budget";
    } else if (report.notes.empty()) {
        report.notes = "no profitable deviation witness constructed";
    }
    return report;
}

}  // namespace electoral
