// Acceptance suite for the electoral targeting library. Each criterion
// prints one [PASS]/[FAIL] line; the binary keeps going after a failure and
// exits nonzero if any criterion failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "electoral/informed_game.hpp"
#include "electoral/sweep.hpp"
#include "electoral/uninformed_game.hpp"
#include "electoral/verifier.hpp"
#include "electoral/welfare.hpp"
#include "test_support.hpp"

using namespace electoral;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

Result fail(std::string detail) { return {false, std::move(detail)}; }
Result pass(std::string detail) { return {true, std::move(detail)}; }

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

// 1. The regime boundary at alpha = 0.9 prints as 0.16 at two decimals.
Result check_boundary_value() {
    const double boundary = test_support::regime_boundary(0.9);
    char printed[16];
    std::snprintf(printed, sizeof printed, "%.2f", boundary);
    if (std::abs(boundary - 0.15517241379310344) > 1e-12) {
        return fail(fmt("boundary %.17g deviates from the frozen value",
                        boundary));
    }
    if (std::string(printed) != "0.16") {
        return fail(std::string("boundary prints as ") + printed);
    }
    return pass(fmt("boundary %.9g prints as 0.16", boundary));
}

// 2. Both equilibrium placements pass the closed-form check and the
// independent grid check over the whole standard parameter grid.
Result check_informed_equilibria() {
    int verified = 0;
    for (double alpha : test_support::standard_alphas()) {
        for (double v : test_support::standard_budgets()) {
            if (test_support::on_regime_boundary(alpha, v)) continue;
            const ModelParams params(alpha, v);
            for (Placement pl : {Placement::Worst, Placement::Best}) {
                const InformedProfile eq = equilibrium_informed(params, pl);
                const VerificationReport analytic = is_equilibrium_informed(eq);
                if (!analytic.equilibrium) {
                    return fail(fmt("closed-form check rejects alpha=%.2f "
                                    "v=%.2f placement=%d",
                                    alpha, v, pl == Placement::Best));
                }
                const GridGame grid = GridGame::aligned_to(eq, 8, 8);
                const VerificationReport on_grid =
                    verify_equilibrium_grid(eq, grid);
                if (!on_grid.equilibrium) {
                    return fail(fmt("grid check rejects alpha=%.2f v=%.2f "
                                    "placement=%d",
                                    alpha, v, pl == Placement::Best));
                }
                ++verified;
            }
        }
    }
    return pass(fmt("%g equilibrium profiles verified twice",
                    static_cast<double>(verified)));
}

// 3. The share-game equilibrium restores the expected share to exactly 1/2,
// defends with less than the budget, and survives a 1000-point deviation scan.
Result check_uninformed_equilibrium() {
    int checked = 0;
    for (double alpha : test_support::standard_alphas()) {
        for (double v : test_support::standard_budgets()) {
            const ModelParams params(alpha, v);
            const UninformedProfile eq = equilibrium_uninformed(params);
            const double share =
                expected_incumbent_share(eq.s_incumbent, eq.s_challenger,
                                         params);
            if (std::abs(share - 0.5) > 1e-12) {
                return fail(fmt("share %.17g != 1/2 at alpha=%.2f v=%.2f",
                                share, alpha, v));
            }
            if (!(eq.s_incumbent < eq.s_challenger)) {
                return fail(fmt("defense not under budget at alpha=%.2f "
                                "v=%.2f", alpha, v));
            }
            const VerificationReport r = verify_uninformed_grid(eq, 1000, 1e-9);
            if (!r.equilibrium || r.witness.has_value()) {
                return fail(fmt("deviation scan refutes alpha=%.2f v=%.2f",
                                alpha, v));
            }
            ++checked;
        }
    }
    return pass(fmt("%g parameter points scanned",
                    static_cast<double>(checked)));
}

// 4. Bisection reproduces the closed-form welfare cutoff.
Result check_cutoff_bisection() {
    if (std::abs(welfare_cutoff(0.9) - 0.2845667749543857) > 1e-12) {
        return fail(fmt("closed form %.17g deviates from the frozen value",
                        welfare_cutoff(0.9)));
    }
    for (double alpha : test_support::standard_alphas()) {
        const double closed = welfare_cutoff(alpha);
        const double bisect = welfare_cutoff_bisect(alpha);
        if (std::abs(closed - bisect) > 1e-8) {
            return fail(fmt("alpha=%.2f: closed %.12g vs bisect %.12g", alpha,
                            closed, bisect));
        }
    }
    return pass("closed form and bisection agree within 1e-8 for all alphas");
}

// 5. Every closed-form welfare expression matches midpoint quadrature.
Result check_welfare_quadrature() {
    int checks = 0;
    const double tol = 1e-8;
    for (double alpha : test_support::standard_alphas()) {
        for (double v : test_support::standard_budgets()) {
            if (test_support::on_regime_boundary(alpha, v)) continue;
            const ModelParams params(alpha, v);
            const PartisanCutoffs cut = partisan_cutoffs(params);
            auto mismatch = [&](double closed, double numeric) {
                return std::abs(closed - numeric) > tol;
            };
            if (regime_of(params) == Regime::SmallBudget) {
                if (mismatch(welfare_informed_closed(
                                 params, InformedScenario::SmallBudgetWorst),
                             welfare_numeric(Politician::Incumbent,
                                             IntervalSet::of(0.5 - v, 0.5),
                                             params)) ||
                    mismatch(welfare_informed_closed(
                                 params, InformedScenario::SmallBudgetBest),
                             welfare_numeric(
                                 Politician::Incumbent,
                                 IntervalSet::of(cut.left, cut.left + v),
                                 params))) {
                    return fail(fmt("small-budget mismatch at alpha=%.2f "
                                    "v=%.2f", alpha, v));
                }
                checks += 2;
            } else {
                if (mismatch(welfare_informed_closed(
                                 params, InformedScenario::LargeBudget),
                             welfare_numeric(Politician::Incumbent,
                                             IntervalSet::of(0.5, cut.right),
                                             params))) {
                    return fail(fmt("large-budget mismatch at alpha=%.2f "
                                    "v=%.2f", alpha, v));
                }
                ++checks;
            }
            if (mismatch(welfare_uninformed_closed(params),
                         welfare_numeric(
                             Politician::Incumbent,
                             equilibrium_uninformed(params).s_incumbent,
                             params))) {
                return fail(fmt("share-game mismatch at alpha=%.2f v=%.2f",
                                alpha, v));
            }
            if (mismatch(welfare_uninformed_ext_closed(params),
                         welfare_numeric(Politician::Incumbent, v, params))) {
                return fail(fmt("extension mismatch at alpha=%.2f v=%.2f",
                                alpha, v));
            }
            checks += 2;
        }
    }
    return pass(fmt("%g quadrature comparisons within 1e-8",
                    static_cast<double>(checks)));
}

// 6. An alpha = 0.9 budget sweep reproduces the welfare discontinuity at the
// regime boundary, the informed/uninformed crossing, and the small-budget
// dominance of the informed game.
Result check_sweep_figure() {
    SweepConfig config;
    config.alphas = {0.9};
    config.v_min = 0.01;
    config.v_max = 0.5;
    config.v_steps = 50;
    const std::vector<SweepRow> rows = run_sweep(config);
    if (rows.size() != 50) {
        return fail(fmt("expected 50 rows, got %g",
                        static_cast<double>(rows.size())));
    }

    const double boundary = test_support::regime_boundary(0.9);
    const double worst_limit = welfare_informed_closed(
        ModelParams(0.9, boundary - 1e-9), InformedScenario::SmallBudgetWorst);
    const double best_limit = welfare_informed_closed(
        ModelParams(0.9, boundary - 1e-9), InformedScenario::SmallBudgetBest);
    const double large_value = welfare_informed_closed(
        ModelParams(0.9, boundary + 1e-9), InformedScenario::LargeBudget);
    if (std::abs(worst_limit - (-0.4193370986920333)) > 1e-6 ||
        std::abs(best_limit - (-0.3838760674521673)) > 1e-6 ||
        std::abs(large_value - (-0.4410077288941736)) > 1e-7) {
        return fail(fmt("limits %.9g / %.9g / %.9g deviate from the frozen "
                        "values", worst_limit, best_limit, large_value));
    }
    if (!(worst_limit - large_value > 0.02)) {
        return fail("no welfare drop at the regime boundary");
    }

    // the drop must be visible between adjacent sweep rows
    const SweepRow* last_small = nullptr;
    const SweepRow* first_large = nullptr;
    for (const SweepRow& row : rows) {
        if (row.regime == Regime::SmallBudget) {
            last_small = &row;
        } else if (!first_large) {
            first_large = &row;
        }
    }
    if (!last_small || !first_large ||
        !(last_small->informed_worst > first_large->informed_worst + 0.015)) {
        return fail("sweep rows do not show the discontinuity");
    }

    // crossing: informed leads right of the boundary, then falls behind
    const double cutoff = 0.2845667749543857;
    bool bracket_found = false;
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].regime != Regime::LargeBudget ||
            rows[i + 1].regime != Regime::LargeBudget) {
            continue;
        }
        const double d0 = rows[i].informed_worst - rows[i].uninformed;
        const double d1 = rows[i + 1].informed_worst - rows[i + 1].uninformed;
        if (d0 > 0.0 && d1 <= 0.0) {
            if (rows[i].v <= cutoff && cutoff <= rows[i + 1].v &&
                rows[i + 1].v - rows[i].v <= 0.01 + 1e-9) {
                bracket_found = true;
            }
            break;
        }
    }
    if (!bracket_found) {
        return fail("crossing is not bracketed by adjacent sweep rows around "
                    "the cutoff");
    }

    for (const SweepRow& row : rows) {
        if (row.regime == Regime::SmallBudget &&
            !(row.informed_worst > row.uninformed)) {
            return fail(fmt("informed worst case not above uninformed at "
                            "v=%.2f", row.v));
        }
    }
    return pass(fmt("drop %.4g at the boundary, crossing inside one 0.01 step",
                    worst_limit - large_value));
}

// 7. The contiguous-coverage extension: full-budget equilibrium, closed-form
// welfare against quadrature, and the cutoff at the regime boundary.
Result check_extension() {
    for (double alpha : test_support::standard_alphas()) {
        const double cutoff_ext = welfare_cutoff_ext(alpha);
        if (!(cutoff_ext > 0.0 && cutoff_ext < 1.0) ||
            std::abs(cutoff_ext - test_support::regime_boundary(alpha)) >
                1e-15) {
            return fail(fmt("extension cutoff wrong at alpha=%.2f", alpha));
        }
        for (double v : test_support::standard_budgets()) {
            const ModelParams params(alpha, v);
            const VerificationReport r = verify_uninformed_grid(
                equilibrium_uninformed_ext(params), 1000, 1e-9,
                UninformedVariant::Extension);
            if (!r.equilibrium) {
                return fail(fmt("extension scan refutes alpha=%.2f v=%.2f",
                                alpha, v));
            }
            const double closed = welfare_uninformed_ext_closed(params);
            if (std::abs(closed - 0.5 * (v * alpha - 1.0)) > 1e-15 ||
                std::abs(closed - welfare_numeric(Politician::Incumbent, v,
                                                  params)) > 1e-8) {
                return fail(fmt("extension welfare mismatch at alpha=%.2f "
                                "v=%.2f", alpha, v));
            }
            if (test_support::on_regime_boundary(alpha, v)) continue;
            const double informed =
                regime_of(params) == Regime::SmallBudget
                    ? welfare_informed_closed(
                          params, InformedScenario::SmallBudgetWorst)
                    : welfare_informed_closed(params,
                                              InformedScenario::LargeBudget);
            const bool informed_better = v < cutoff_ext;
            if (informed_better != (informed > closed)) {
                return fail(fmt("comparison wrong side of the cutoff at "
                                "alpha=%.2f v=%.2f", alpha, v));
            }
        }
    }
    return pass("full-budget equilibrium, welfare, and cutoff confirmed");
}

// 8. Analytic minimum winning costs against brute-force grid best responses.
Result check_best_response_oracle() {
    std::mt19937 rng(424242);
    std::bernoulli_distribution take(0.4);
    int agreements = 0;
    for (double alpha : {0.1, 0.5, 0.9}) {
        const ModelParams params(alpha, 1.0);
        const GridGame game = GridGame::uniform(params, 8, 8);
        double cell = 0.0;
        for (const GridCell& c : game.cells()) cell = std::max(cell, c.mass());
        for (int iter = 0; iter < 200; ++iter) {
            std::vector<int> opp;
            for (int i = 0; i < game.n_cells(); ++i) {
                if (take(rng)) opp.push_back(i);
            }
            const IntervalSet opp_set = game.cells_to_set(opp);

            const double inc_analytic =
                min_winning_cost_incumbent(opp_set, params);
            const GridBestResponse inc_br = grid_best_response(
                opp, Politician::Incumbent, game, EnumerationMode::Exhaustive);
            if (!inc_br.wins ||
                std::abs(inc_br.min_cost - inc_analytic) > cell + 1e-9) {
                return fail(fmt("incumbent cost %.9g vs grid %.9g at "
                                "alpha=%.2f", inc_analytic, inc_br.min_cost,
                                alpha));
            }

            const ChallengerWinCost ch_analytic =
                min_winning_cost_challenger(opp_set, params);
            const GridBestResponse ch_br = grid_best_response(
                opp, Politician::Challenger, game,
                EnumerationMode::Exhaustive);
            if (!ch_analytic.infimum.has_value()) {
                if (ch_br.wins) {
                    return fail(fmt("grid beats a blocked challenger at "
                                    "alpha=%.2f", alpha, 0.0));
                }
            } else if (!ch_br.wins ||
                       ch_br.min_cost < *ch_analytic.infimum - 1e-9 ||
                       ch_br.min_cost >
                           *ch_analytic.infimum + cell + 1e-9) {
                return fail(fmt("challenger cost %.9g vs grid %.9g at "
                                "alpha=%.2f", *ch_analytic.infimum,
                                ch_br.min_cost, alpha));
            }
            ++agreements;
        }
    }
    return pass(fmt("%g randomized instances agree within one cell mass",
                    static_cast<double>(agreements)));
}

struct Criterion {
    const char* label;
    double budget_seconds;
    Result (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"regime boundary at alpha 0.9 rounds to 0.16", 5.0,
         check_boundary_value},
        {"targeted-game equilibria pass both checkers on the standard grid",
         30.0, check_informed_equilibria},
        {"share-game equilibrium ties at 1/2 and survives the deviation scan",
         5.0, check_uninformed_equilibrium},
        {"welfare cutoff bisection matches the closed form", 5.0,
         check_cutoff_bisection},
        {"closed-form welfare matches quadrature on the standard grid", 10.0,
         check_welfare_quadrature},
        {"alpha 0.9 sweep shows the welfare drop and the crossing", 5.0,
         check_sweep_figure},
        {"extension equilibrium, welfare, and cutoff", 5.0, check_extension},
        {"analytic minimum winning costs match grid best responses", 30.0,
         check_best_response_oracle},
    };

    bool all_pass = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result result;
        try {
            result = criteria[i].run();
        } catch (const std::exception& e) {
            result = fail(std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (result.pass && elapsed > criteria[i].budget_seconds) {
            result.pass = false;
            result.detail = fmt("exceeded the %.0f s runtime budget",
                                criteria[i].budget_seconds);
        }
        std::printf("[%s] %zu. %s (%.2f s)\n",
                    result.pass ? "PASS" : "FAIL", i + 1, criteria[i].label,
                    elapsed);
        if (!result.detail.empty()) {
            std::printf("       %s\n", result.detail.c_str());
        }
        if (!result.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
