#include "electoral/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "electoral/errors.hpp"

namespace electoral {

namespace {

constexpr double kGridEps = 1e-12;

double incumbent_weight(VoteChoice c) {
    switch (c) {
        case VoteChoice::Incumbent: return 1.0;
        case VoteChoice::Split: return 0.5;
        case VoteChoice::Challenger: return 0.0;
    }
    return 0.0;
}

// Vote mass the partisan blocks [0,L] and [R,1] contribute to the Incumbent,
// evaluated through the single-voter heuristic like everything else here.
double partisan_incumbent_mass(const ModelParams& params) {
    const PartisanCutoffs cut = partisan_cutoffs(params);
    double total = 0.0;
    if (cut.left > 0.0) {
        total += cut.left *
                 incumbent_weight(vote(0.5 * cut.left, false, false, params));
    }
    if (cut.right < 1.0) {
        total += (1.0 - cut.right) *
                 incumbent_weight(
                     vote(0.5 * (cut.right + 1.0), false, false, params));
    }
    return total;
}

void subdivide_region(double lo, double hi, int n, std::vector<double> bps,
                      GridRegion region, std::vector<GridCell>& out) {
    if (n < 1) {
        throw std::domain_error("grid needs at least one cell per region");
    }
    std::sort(bps.begin(), bps.end());
    std::vector<double> bounds{lo};
    for (double b : bps) {
        if (b <= bounds.back() + kGridEps || b >= hi - kGridEps) continue;
        bounds.push_back(b);
    }
    bounds.push_back(hi);
    const int spans = static_cast<int>(bounds.size()) - 1;
    if (spans > n) {
        throw GridCapacityError(
            "region has more strategy breakpoints than grid cells");
    }
    // One cell per span, then hand extra cells to the currently widest cell.
    std::vector<int> count(spans, 1);
    for (int extra = n - spans; extra > 0; --extra) {
        int pick = 0;
        double widest = 0.0;
        for (int i = 0; i < spans; ++i) {
            const double width = (bounds[i + 1] - bounds[i]) / count[i];
            if (width > widest + kGridEps) {
                widest = width;
                pick = i;
            }
        }
        ++count[pick];
    }
    for (int i = 0; i < spans; ++i) {
        const double span_lo = bounds[i];
        const double span_hi = bounds[i + 1];
        const double h = (span_hi - span_lo) / count[i];
        for (int j = 0; j < count[i]; ++j) {
            GridCell cell;
            cell.lo = span_lo + j * h;
            cell.hi = (j + 1 == count[i]) ? span_hi : span_lo + (j + 1) * h;
            cell.region = region;
            out.push_back(cell);
        }
    }
}

struct CellContrib {
    // Incumbent-share mass of each cell when the responder does / does not
    // take it, with the opponent's coverage fixed.
    std::vector<double> taken;
    std::vector<double> not_taken;
};

CellContrib cell_contributions(const GridGame& game,
                               const std::vector<char>& opp, Politician role) {
    const int n = game.n_cells();
    CellContrib c;
    c.taken.resize(n);
    c.not_taken.resize(n);
    for (int i = 0; i < n; ++i) {
        const GridCell& cell = game.cells()[i];
        const bool opp_covers = opp[i] != 0;
        const bool inc_not = role == Politician::Incumbent ? false : opp_covers;
        const bool ch_not = role == Politician::Incumbent ? opp_covers : false;
        const bool inc_take = role == Politician::Incumbent ? true : opp_covers;
        const bool ch_take = role == Politician::Incumbent ? opp_covers : true;
        c.not_taken[i] =
            cell.mass() *
            incumbent_weight(vote(cell.midpoint(), inc_not, ch_not,
                                  game.params()));
        c.taken[i] = cell.mass() *
                     incumbent_weight(vote(cell.midpoint(), inc_take, ch_take,
                                           game.params()));
    }
    return c;
}

bool role_wins(Politician role, double incumbent_share, double tol) {
    // Ties favor the Incumbent; the Challenger needs a strict majority, which
    // the tolerance band encodes on both sides.
    return role == Politician::Incumbent ? incumbent_share >= 0.5 - tol
                                         : incumbent_share < 0.5 - tol;
}

void consider_candidate(GridBestResponse& best, bool wins, double cost,
                        std::vector<int> cells) {
    if (!wins) return;
    if (!best.wins || cost < best.min_cost ||
        (cost == best.min_cost &&
         std::lexicographical_compare(cells.begin(), cells.end(),
                                      best.best_cells.begin(),
                                      best.best_cells.end()))) {
        best.wins = true;
        best.min_cost = cost;
        best.best_cells = std::move(cells);
    }
}

GridBestResponse best_response_exhaustive(const GridGame& game,
                                          const std::vector<char>& opp,
                                          Politician role, double tol) {
    const int n = game.n_cells();
    if (n > 20) {
        throw GridCapacityError(
            "exhaustive enumeration is limited to 20 cells");
    }
    const CellContrib contrib = cell_contributions(game, opp, role);
    double share_none = partisan_incumbent_mass(game.params());
    for (int i = 0; i < n; ++i) share_none += contrib.not_taken[i];
    std::vector<double> delta(n), mass(n);
    for (int i = 0; i < n; ++i) {
        delta[i] = contrib.taken[i] - contrib.not_taken[i];
        mass[i] = game.cells()[i].mass();
    }
    GridBestResponse best;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        double share = share_none;
        double cost = 0.0;
        for (std::uint32_t m = mask; m != 0; m &= m - 1) {
            const int i = std::countr_zero(m);
            share += delta[i];
            cost += mass[i];
        }
        if (!role_wins(role, share, tol)) continue;
        if (best.wins && cost > best.min_cost) continue;
        std::vector<int> cells;
        for (std::uint32_t m = mask; m != 0; m &= m - 1) {
            cells.push_back(std::countr_zero(m));
        }
        consider_candidate(best, true, cost, std::move(cells));
    }
    return best;
}

GridBestResponse best_response_counts(const GridGame& game,
                                      const std::vector<char>& opp,
                                      Politician role, double tol) {
    if (!game.equal_mass()) {
        throw std::invalid_argument(
            "count-based enumeration requires equal cell masses per region");
    }
    const int n = game.n_cells();
    const CellContrib contrib = cell_contributions(game, opp, role);
    double share_none = partisan_incumbent_mass(game.params());
    for (int i = 0; i < n; ++i) share_none += contrib.not_taken[i];

    // Cells within a (region, opponent-coverage) class are exchangeable:
    // equal mass and identical vote behavior. Enumerate how many to take
    // from each class, always the lowest-indexed ones.
    std::vector<std::vector<int>> cls(4);
    for (int i = 0; i < n; ++i) {
        const bool left = game.cells()[i].region == GridRegion::LeftSwing;
        const int k = (left ? 0 : 2) + (opp[i] ? 1 : 0);
        cls[k].push_back(i);
    }
    std::vector<std::vector<double>> cum_delta(4), cum_mass(4);
    for (int k = 0; k < 4; ++k) {
        cum_delta[k].assign(cls[k].size() + 1, 0.0);
        cum_mass[k].assign(cls[k].size() + 1, 0.0);
        for (size_t j = 0; j < cls[k].size(); ++j) {
            const int i = cls[k][j];
            cum_delta[k][j + 1] = cum_delta[k][j] + contrib.taken[i] -
                                  contrib.not_taken[i];
            cum_mass[k][j + 1] = cum_mass[k][j] + game.cells()[i].mass();
        }
    }
    GridBestResponse best;
    for (size_t k0 = 0; k0 <= cls[0].size(); ++k0) {
        for (size_t k1 = 0; k1 <= cls[1].size(); ++k1) {
            for (size_t k2 = 0; k2 <= cls[2].size(); ++k2) {
                for (size_t k3 = 0; k3 <= cls[3].size(); ++k3) {
                    const double share = share_none + cum_delta[0][k0] +
                                         cum_delta[1][k1] + cum_delta[2][k2] +
                                         cum_delta[3][k3];
                    if (!role_wins(role, share, tol)) continue;
                    const double cost = cum_mass[0][k0] + cum_mass[1][k1] +
                                        cum_mass[2][k2] + cum_mass[3][k3];
                    if (best.wins && cost > best.min_cost) continue;
                    std::vector<int> cells;
                    const size_t ks[4] = {k0, k1, k2, k3};
                    for (int k = 0; k < 4; ++k) {
                        cells.insert(cells.end(), cls[k].begin(),
                                     cls[k].begin() + ks[k]);
                    }
                    std::sort(cells.begin(), cells.end());
                    consider_candidate(best, true, cost, std::move(cells));
                }
            }
        }
    }
    return best;
}

}  // namespace

GridGame::GridGame(ModelParams params, int n_left, int n_right,
                   std::vector<GridCell> cells)
    : params_(params),
      n_left_(n_left),
      n_right_(n_right),
      cells_(std::move(cells)) {}

GridGame GridGame::uniform(const ModelParams& params, int n_left,
                           int n_right) {
    return with_breakpoints(params, n_left, n_right, {}, {});
}

GridGame GridGame::with_breakpoints(const ModelParams& params, int n_left,
                                    int n_right,
                                    std::vector<double> left_breakpoints,
                                    std::vector<double> right_breakpoints) {
    const PartisanCutoffs cut = partisan_cutoffs(params);
    std::vector<GridCell> cells;
    cells.reserve(static_cast<size_t>(n_left) + n_right);
    subdivide_region(cut.left, 0.5, n_left, std::move(left_breakpoints),
                     GridRegion::LeftSwing, cells);
    subdivide_region(0.5, cut.right, n_right, std::move(right_breakpoints),
                     GridRegion::RightSwing, cells);
    return GridGame(params, n_left, n_right, std::move(cells));
}

GridGame GridGame::aligned_to(const InformedProfile& profile, int n_left,
                              int n_right) {
    std::vector<double> left_bps, right_bps;
    for (const IntervalSet* s : {&profile.incumbent, &profile.challenger}) {
        const SwingDecomposition d = decompose(*s, profile.params);
        for (const Interval& iv : d.left.intervals()) {
            left_bps.push_back(iv.lo);
            left_bps.push_back(iv.hi);
        }
        for (const Interval& iv : d.right.intervals()) {
            right_bps.push_back(iv.lo);
            right_bps.push_back(iv.hi);
        }
    }
    return with_breakpoints(profile.params, n_left, n_right,
                            std::move(left_bps), std::move(right_bps));
}

bool GridGame::equal_mass() const {
    for (GridRegion region : {GridRegion::LeftSwing, GridRegion::RightSwing}) {
        double first = -1.0;
        for (const GridCell& cell : cells_) {
            if (cell.region != region) continue;
            if (first < 0.0) {
                first = cell.mass();
            } else if (std::abs(cell.mass() - first) > kGridEps) {
                return false;
            }
        }
    }
    return true;
}

double GridGame::incumbent_share(const std::vector<int>& incumbent_cells,
                                 const std::vector<int>& challenger_cells)
    const {
    std::vector<char> inc(cells_.size(), 0), ch(cells_.size(), 0);
    for (int i : incumbent_cells) inc.at(static_cast<size_t>(i)) = 1;
    for (int i : challenger_cells) ch.at(static_cast<size_t>(i)) = 1;
    double share = partisan_incumbent_mass(params_);
    for (size_t i = 0; i < cells_.size(); ++i) {
        share += cells_[i].mass() *
                 incumbent_weight(vote(cells_[i].midpoint(), inc[i] != 0,
                                       ch[i] != 0, params_));
    }
    return share;
}

std::vector<int> GridGame::snap(const IntervalSet& strategy, double tol) const {
    std::vector<int> covered;
    for (size_t i = 0; i < cells_.size(); ++i) {
        const GridCell& cell = cells_[i];
        const double overlap =
            set_intersection(strategy, IntervalSet::of(cell.lo, cell.hi))
                .measure();
        if (overlap <= tol) continue;
        if (std::abs(overlap - cell.mass()) <= tol) {
            covered.push_back(static_cast<int>(i));
            continue;
        }
        throw GridAlignmentError(
            "strategy endpoint does not align with grid cell boundaries");
    }
    return covered;
}

IntervalSet GridGame::cells_to_set(const std::vector<int>& cells) const {
    std::vector<Interval> ivs;
    ivs.reserve(cells.size());
    for (int i : cells) {
        const GridCell& cell = cells_.at(static_cast<size_t>(i));
        ivs.push_back(Interval{cell.lo, cell.hi});
    }
    return IntervalSet::normalize(std::move(ivs));
}

GridBestResponse grid_best_response(const std::vector<int>& opponent_cells,
                                    Politician role, const GridGame& game,
                                    EnumerationMode mode, double tol) {
    std::vector<char> opp(game.n_cells(), 0);
    for (int i : opponent_cells) {
        if (i < 0 || i >= game.n_cells()) {
            throw std::out_of_range("opponent cell index out of range");
        }
        opp[static_cast<size_t>(i)] = 1;
    }
    return mode == EnumerationMode::Exhaustive
               ? best_response_exhaustive(game, opp, role, tol)
               : best_response_counts(game, opp, role, tol);
}

VerificationReport verify_equilibrium_grid(const InformedProfile& profile,
                                           const GridGame& game, double tol) {
    if (game.params().alpha != profile.params.alpha ||
        game.params().v != profile.params.v) {
        throw std::invalid_argument("grid and profile parameters differ");
    }
    const std::vector<int> inc_cells = game.snap(profile.incumbent, tol);
    const std::vector<int> ch_cells = game.snap(profile.challenger, tol);
    const double share = game.incumbent_share(inc_cells, ch_cells);

    VerificationReport report;
    report.winner = share >= 0.5 - tol ? Politician::Incumbent
                                       : Politician::Challenger;
    const bool incumbent_won = report.winner == Politician::Incumbent;
    const std::vector<int>& winner_cells = incumbent_won ? inc_cells : ch_cells;
    const std::vector<int>& loser_cells = incumbent_won ? ch_cells : inc_cells;
    const Politician loser_role =
        incumbent_won ? Politician::Challenger : Politician::Incumbent;
    report.winner_actual_cost =
        (incumbent_won ? profile.incumbent : profile.challenger).measure();

    const GridBestResponse winner_br = grid_best_response(
        loser_cells, report.winner, game, EnumerationMode::Exhaustive, tol);
    if (!winner_br.wins) {
        throw OracleError(
            "grid winner has no winning subset; vote aggregation is "
            "inconsistent");
    }
    report.winner_min_cost = winner_br.min_cost;

    const GridBestResponse loser_br = grid_best_response(
        winner_cells, loser_role, game, EnumerationMode::Exhaustive, tol);
    report.loser_can_win_under_budget =
        loser_br.wins && loser_br.min_cost < profile.params.v - tol;

    const bool winner_minimal =
        report.winner_actual_cost <= winner_br.min_cost + tol;
    report.equilibrium =
        winner_minimal && !report.loser_can_win_under_budget;

    if (report.loser_can_win_under_budget) {
        report.witness =
            DeviationWitness{loser_role, game.cells_to_set(loser_br.best_cells),
                             std::nullopt, loser_br.min_cost};
        report.notes = "loser wins on the grid while spending under budget";
    } else if (!winner_minimal) {
        report.witness = DeviationWitness{report.winner,
                                          game.cells_to_set(winner_br.best_cells),
                                          std::nullopt, winner_br.min_cost};
        report.notes = "winner over-spends relative to the grid best response";
    } else {
        report.notes = "grid best responses confirm the profile";
    }
    return report;
}

VerificationReport verify_uninformed_grid(const UninformedProfile& profile,
                                          int grid_points, double tol,
                                          UninformedVariant variant) {
    if (grid_points < 1) {
        throw std::domain_error("deviation scan needs at least one step");
    }
    auto outcome_of = [&](const UninformedProfile& p) {
        return variant == UninformedVariant::Base ? uninformed_outcome(p)
                                                  : uninformed_ext_outcome(p);
    };
    const UninformedOutcome base = outcome_of(profile);
    const bool incumbent_won = base.winner == Politician::Incumbent;

    VerificationReport report;
    report.winner = base.winner;
    report.winner_actual_cost =
        incumbent_won ? profile.s_incumbent : profile.s_challenger;

    double winner_min = std::numeric_limits<double>::infinity();
    bool loser_can_win = false;
    double loser_win_share = 0.0;

    for (Politician role : {Politician::Incumbent, Politician::Challenger}) {
        const bool is_incumbent = role == Politician::Incumbent;
        const double current_payoff =
            is_incumbent ? base.payoff_incumbent : base.payoff_challenger;
        for (int k = 0; k <= grid_points; ++k) {
            const double s = static_cast<double>(k) / grid_points;
            const UninformedProfile deviated =
                is_incumbent
                    ? UninformedProfile(s, profile.s_challenger, profile.params)
                    : UninformedProfile(profile.s_incumbent, s, profile.params);
            const UninformedOutcome out = outcome_of(deviated);
            const bool wins = out.winner == role;
            if (wins && role == base.winner) {
                winner_min = std::min(winner_min, s);
            }
            if (wins && role != base.winner && s < profile.params.v - tol &&
                !loser_can_win) {
                loser_can_win = true;
                loser_win_share = s;
            }
            const double payoff =
                is_incumbent ? out.payoff_incumbent : out.payoff_challenger;
            if (payoff > current_payoff + tol && !report.witness) {
                report.witness =
                    DeviationWitness{role, std::nullopt, s, s};
            }
        }
    }

    report.winner_min_cost = winner_min;
    report.loser_can_win_under_budget = loser_can_win;
    report.equilibrium =
        report.winner_actual_cost <= winner_min + tol && !loser_can_win;
    if (report.equilibrium) {
        report.notes = "no grid deviation improves either politician's payoff";
    } else if (loser_can_win) {
        report.notes = "loser can win while spending " +
                       std::to_string(loser_win_share) + " < v";
    } else {
        report.notes = "winner over-spends relative to the cheapest winning "
                       "share on the grid";
    }
    return report;
}

}  // namespace electoral
