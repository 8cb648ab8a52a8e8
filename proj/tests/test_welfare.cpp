#include "electoral/welfare.hpp"

#include <stdexcept>

#include "doctest.h"
#include "electoral/errors.hpp"
#include "electoral/informed_game.hpp"
#include "electoral/uninformed_game.hpp"
#include "test_support.hpp"

using electoral::BetterScenario;
using electoral::InformedScenario;
using electoral::IntervalSet;
using electoral::ModelParams;
using electoral::OracleError;
using electoral::Politician;
using electoral::Regime;
using electoral::RegimeBoundaryError;
using electoral::WelfareReport;
using test_support::near;

namespace {
const ModelParams kSmall(0.9, 0.1);
const ModelParams kLarge(0.9, 0.3);
constexpr double kLeftCut = 1.0 / 11.0;
constexpr double kRightCut = 19.0 / 29.0;
}  // namespace

TEST_CASE("regime classification") {
    CHECK(electoral::regime_of(kSmall) == Regime::SmallBudget);
    CHECK(electoral::regime_of(kLarge) == Regime::LargeBudget);
    CHECK_THROWS_AS(electoral::regime_of(ModelParams(0.9, kRightCut - 0.5)),
                    RegimeBoundaryError);
    CHECK_THROWS_AS(electoral::regime_of(ModelParams(0.5, 0.1)),
                    RegimeBoundaryError);
}

TEST_CASE("closed-form welfare values at alpha 0.9") {
    CHECK(near(electoral::welfare_informed_closed(
                   kSmall, InformedScenario::SmallBudgetWorst),
               -0.4505, 1e-15));
    CHECK(near(electoral::welfare_informed_closed(
                   kSmall, InformedScenario::SmallBudgetBest),
               -0.4226818181818182, 1e-15));
    CHECK(near(electoral::welfare_informed_closed(
                   kLarge, InformedScenario::LargeBudget),
               -0.4410077288941736, 1e-15));
    CHECK(near(electoral::welfare_uninformed_closed(kSmall),
               -0.4818014705882353, 1e-15));
    CHECK(near(electoral::welfare_uninformed_closed(kLarge),
               -0.4370762711864407, 1e-15));
    CHECK(near(electoral::welfare_uninformed_closed(ModelParams(0.9, 0.2)),
               -0.4610236220472441, 1e-15));
    CHECK(near(electoral::welfare_uninformed_ext_closed(kSmall), -0.455,
               1e-15));
    CHECK(near(electoral::welfare_uninformed_ext_closed(kLarge), -0.365,
               1e-15));
}

TEST_CASE("scenario must match the regime") {
    CHECK_THROWS_AS(electoral::welfare_informed_closed(
                        kSmall, InformedScenario::LargeBudget),
                    std::domain_error);
    CHECK_THROWS_AS(electoral::welfare_informed_closed(
                        kLarge, InformedScenario::SmallBudgetWorst),
                    std::domain_error);
    CHECK_THROWS_AS(electoral::welfare_informed_closed(
                        kLarge, InformedScenario::SmallBudgetBest),
                    std::domain_error);
}

TEST_CASE("large-budget welfare does not depend on the budget") {
    const double w1 = electoral::welfare_informed_closed(
        ModelParams(0.9, 0.2), InformedScenario::LargeBudget);
    const double w2 = electoral::welfare_informed_closed(
        ModelParams(0.9, 0.9), InformedScenario::LargeBudget);
    CHECK(w1 == w2);
}

TEST_CASE("uninformed welfare tends to -1/2 as the budget vanishes") {
    CHECK(near(electoral::welfare_uninformed_closed(ModelParams(0.9, 1e-9)),
               -0.5, 1e-8));
    // and grows with the budget
    double prev = -0.5;
    for (int i = 1; i <= 10; ++i) {
        const double w =
            electoral::welfare_uninformed_closed(ModelParams(0.9, i / 10.0));
        CHECK(w > prev);
        prev = w;
    }
}

TEST_CASE("uninformed welfare equals the share-based closed form") {
    for (double alpha : test_support::standard_alphas()) {
        for (double v : {0.05, 0.3, 0.8}) {
            const ModelParams p(alpha, v);
            const double s_i = electoral::equilibrium_uninformed(p).s_incumbent;
            CHECK(near(electoral::welfare_uninformed_closed(p),
                       0.5 * (s_i * alpha - 1.0), 1e-14));
        }
    }
}

TEST_CASE("quadrature oracle reproduces every closed form") {
    // small-budget equilibria, worst and best placements
    CHECK(near(electoral::welfare_numeric(Politician::Incumbent,
                                          IntervalSet::of(0.4, 0.5), kSmall),
               -0.4505, 1e-9));
    CHECK(near(electoral::welfare_numeric(
                   Politician::Incumbent,
                   IntervalSet::of(kLeftCut, kLeftCut + 0.1), kSmall),
               -0.4226818181818182, 1e-9));
    // large-budget equilibrium
    CHECK(near(electoral::welfare_numeric(Politician::Incumbent,
                                          IntervalSet::of(0.5, kRightCut),
                                          kLarge),
               -0.4410077288941736, 1e-9));
    // share-based allocations
    CHECK(near(electoral::welfare_numeric(
                   Politician::Incumbent,
                   electoral::equilibrium_uninformed(kSmall).s_incumbent,
                   kSmall),
               -0.4818014705882353, 1e-9));
    CHECK(near(electoral::welfare_numeric(Politician::Incumbent, 0.1, kSmall),
               -0.455, 1e-9));
}

TEST_CASE("quadrature input validation") {
    CHECK_THROWS_AS(electoral::welfare_numeric(Politician::Incumbent,
                                               IntervalSet::of(0.4, 0.5),
                                               kSmall, 999),
                    std::domain_error);
    CHECK_THROWS_AS(
        electoral::welfare_numeric(Politician::Incumbent, 1.2, kSmall),
        std::domain_error);
    CHECK_NOTHROW(electoral::welfare_numeric(Politician::Incumbent,
                                             IntervalSet::of(0.4, 0.5), kSmall,
                                             1000));
}

TEST_CASE("welfare cutoff closed form at frozen points") {
    CHECK(near(electoral::welfare_cutoff(0.1), 0.02562652538841598, 1e-15));
    CHECK(near(electoral::welfare_cutoff(0.5), 0.14150943396226415, 1e-15));
    CHECK(near(electoral::welfare_cutoff(0.9), 0.2845667749543857, 1e-15));
}

TEST_CASE("cutoff sits above the regime boundary and equalizes welfare") {
    for (double alpha : test_support::standard_alphas()) {
        const double cutoff = electoral::welfare_cutoff(alpha);
        CHECK(cutoff > test_support::regime_boundary(alpha));
        CHECK(cutoff < 1.0);
        const ModelParams at(alpha, cutoff);
        CHECK(near(electoral::welfare_informed_closed(
                       at, InformedScenario::LargeBudget),
                   electoral::welfare_uninformed_closed(at), 1e-12));
    }
}

TEST_CASE("bisection oracle agrees with the closed-form cutoff") {
    for (double alpha : test_support::standard_alphas()) {
        CHECK(near(electoral::welfare_cutoff_bisect(alpha),
                   electoral::welfare_cutoff(alpha), 1e-8));
    }
    CHECK_THROWS_AS(electoral::welfare_cutoff_bisect(0.9, 1e-13),
                    std::domain_error);
}

TEST_CASE("extension cutoff is the regime boundary") {
    for (double alpha : test_support::standard_alphas()) {
        CHECK(near(electoral::welfare_cutoff_ext(alpha),
                   test_support::regime_boundary(alpha), 1e-15));
    }
    // extension welfare at the boundary budget, for reference below
    CHECK(near(electoral::welfare_uninformed_ext_closed(
                   ModelParams(0.9, kRightCut - 0.5)),
               -0.4301724137931034, 1e-15));
}

TEST_CASE("worst-placement welfare beats the extension by alpha v^2 / 2") {
    for (double alpha : {0.1, 0.5, 0.9}) {
        for (double v : {0.01, 0.02, 0.05}) {
            // the identity is a small-budget statement; skip larger budgets
            // (alpha = 0.1 puts the boundary near 0.024)
            if (v >= test_support::regime_boundary(alpha)) continue;
            const ModelParams p(alpha, v);
            const double worst = electoral::welfare_informed_closed(
                p, InformedScenario::SmallBudgetWorst);
            const double ext = electoral::welfare_uninformed_ext_closed(p);
            CHECK(near(worst - ext, 0.5 * alpha * v * v, 1e-14));
            CHECK(worst > ext);
        }
    }
}

TEST_CASE("welfare report in the small-budget regime") {
    WelfareReport r = electoral::make_welfare_report(kSmall);
    CHECK(r.regime == Regime::SmallBudget);
    CHECK(near(r.informed_worst, -0.4505, 1e-15));
    CHECK(near(r.informed_best, -0.4226818181818182, 1e-15));
    CHECK(r.informed_value == r.informed_worst);
    CHECK(near(r.uninformed, -0.4818014705882353, 1e-15));
    CHECK(near(r.uninformed_ext, -0.455, 1e-15));
    CHECK(r.better == BetterScenario::Informed);
    CHECK(r.better_ext == BetterScenario::Informed);
    CHECK(r.informed_worst <= r.informed_best);
}

TEST_CASE("welfare report in the large-budget regime") {
    // below the welfare cutoff the informed game still wins
    WelfareReport mid = electoral::make_welfare_report(ModelParams(0.9, 0.2));
    CHECK(mid.regime == Regime::LargeBudget);
    CHECK(mid.better == BetterScenario::Informed);
    // the extension beats the informed game everywhere above the boundary
    CHECK(mid.better_ext == BetterScenario::Uninformed);

    // above the cutoff the comparison flips
    WelfareReport high = electoral::make_welfare_report(kLarge);
    CHECK(near(high.informed_value, -0.4410077288941736, 1e-15));
    CHECK(near(high.uninformed, -0.4370762711864407, 1e-15));
    CHECK(high.better == BetterScenario::Uninformed);
    CHECK(high.better_ext == BetterScenario::Uninformed);

    CHECK_THROWS_AS(
        electoral::make_welfare_report(ModelParams(0.9, kRightCut - 0.5)),
        RegimeBoundaryError);
}

TEST_CASE("the comparison flips exactly at the cutoff") {
    const double cutoff = electoral::welfare_cutoff(0.9);
    WelfareReport below =
        electoral::make_welfare_report(ModelParams(0.9, cutoff - 0.005));
    WelfareReport above =
        electoral::make_welfare_report(ModelParams(0.9, cutoff + 0.005));
    CHECK(below.better == BetterScenario::Informed);
    CHECK(above.better == BetterScenario::Uninformed);
}

TEST_CASE("informed worst dominates uninformed throughout the small regime") {
    for (double alpha : test_support::standard_alphas()) {
        const double boundary = test_support::regime_boundary(alpha);
        for (int i = 1; i <= 30; ++i) {
            const double v = boundary * i / 31.0;
            const ModelParams p(alpha, v);
            CHECK(electoral::welfare_informed_closed(
                      p, InformedScenario::SmallBudgetWorst) >
                  electoral::welfare_uninformed_closed(p));
        }
    }
}
