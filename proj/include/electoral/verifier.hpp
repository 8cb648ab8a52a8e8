#pragma once

#include <vector>

#include "electoral/informed_game.hpp"
#include "electoral/report.hpp"
#include "electoral/uninformed_game.hpp"

namespace electoral {

enum class GridRegion { LeftSwing, RightSwing };

// Half-open cell [lo, hi) of a swing region; mass == hi - lo.
struct GridCell {
    double lo = 0.0;
    double hi = 0.0;
    GridRegion region = GridRegion::LeftSwing;

    double mass() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
};

/// Discretized version of the targeted game used as an independent check on
/// the closed-form theory: strategies are subsets of cells, votes are
/// aggregated cell by cell through the single-voter vote() heuristic, never
/// through the analytic share law. Cells partition both swing regions; left
/// cells come first, in ascending order, then right cells.
class GridGame {
public:
    /// Equal-mass cells in each region.
    static GridGame uniform(const ModelParams& params, int n_left, int n_right);

    /// Cells whose boundaries include the given strictly-interior breakpoints
    /// of each region; the remaining cells subdivide the widest spans first.
    /// Throws GridCapacityError if a region has more breakpoints than cells
    /// allow.
    static GridGame with_breakpoints(const ModelParams& params, int n_left,
                                     int n_right,
                                     std::vector<double> left_breakpoints,
                                     std::vector<double> right_breakpoints);

    /// Grid aligned to the profile's interval endpoints, so both strategies
    /// snap exactly onto cell subsets.
    static GridGame aligned_to(const InformedProfile& profile, int n_left,
                               int n_right);

    const ModelParams& params() const { return params_; }
    int n_left() const { return n_left_; }
    int n_right() const { return n_right_; }
    int n_cells() const { return static_cast<int>(cells_.size()); }
    const std::vector<GridCell>& cells() const { return cells_; }

    /// True when cell masses are equal within each region (prerequisite for
    /// count-based enumeration).
    bool equal_mass() const;

    /// Incumbent vote share from per-cell votes plus the partisan blocks.
    /// Subsets are sorted cell-index lists.
    double incumbent_share(const std::vector<int>& incumbent_cells,
                           const std::vector<int>& challenger_cells) const;

    /// Converts a strategy to the cells it covers. Each cell must be covered
    /// entirely or not at all (within tol); otherwise GridAlignmentError.
    std::vector<int> snap(const IntervalSet& strategy, double tol) const;

    /// Union of the given cells as an interval set.
    IntervalSet cells_to_set(const std::vector<int>& cells) const;

private:
    GridGame(ModelParams params, int n_left, int n_right,
             std::vector<GridCell> cells);

    ModelParams params_;
    int n_left_ = 0;
    int n_right_ = 0;
    std::vector<GridCell> cells_;
};

enum class EnumerationMode {
    // Every subset of own cells; requires n_left + n_right <= 20.
    Exhaustive,
    // Enumerates how many cells to take from each of the four exchangeable
    // classes (left/right x free/opponent-covered); requires equal cell
    // masses within each region.
    CountBased,
};

struct GridBestResponse {
    bool wins = false;           // some subset wins for this role
    double min_cost = 0.0;       // cheapest winning expenditure (if wins)
    std::vector<int> best_cells;  // lexicographically smallest at min cost
};

/// Cheapest winning subset against a fixed opponent subset. The Incumbent
/// wins at share >= 1/2 - tol (ties favor the office holder); the Challenger
/// must exceed 1/2 + tol, which on the grid costs at least one extra cell.
GridBestResponse grid_best_response(const std::vector<int>& opponent_cells,
                                    Politician role, const GridGame& game,
                                    EnumerationMode mode,
                                    double tol = kMeasureTol);

/// Grid-based equilibrium check, independent of the closed-form checker:
/// snaps the profile onto the grid, recomputes the winner from per-cell
/// votes, and compares the winner's spend against a brute-force best
/// response. Uses exhaustive enumeration.
VerificationReport verify_equilibrium_grid(const InformedProfile& profile,
                                           const GridGame& game,
                                           double tol = kMeasureTol);

enum class UninformedVariant { Base, Extension };

/// Deviation scan for the share-strategy games: each politician's share is
/// varied over {0, 1/n, ..., 1}; any deviation improving the payoff by more
/// than tol refutes equilibrium.
VerificationReport verify_uninformed_grid(const UninformedProfile& profile,
                                          int grid_points = 1000,
                                          double tol = kMeasureTol,
                                          UninformedVariant variant =
                                              UninformedVariant::Base);

}  // namespace electoral
