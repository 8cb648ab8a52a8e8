#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "electoral/errors.hpp"
#include "electoral/informed_game.hpp"
#include "electoral/interval_set.hpp"
#include "electoral/sweep.hpp"
#include "electoral/uninformed_game.hpp"
#include "electoral/verifier.hpp"
#include "electoral/welfare.hpp"

namespace {

using namespace electoral;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBoundary = 2;
constexpr int kExitNotEquilibrium = 3;
constexpr int kExitSelfCheck = 4;

const char* politician_name(Politician p) {
    return p == Politician::Incumbent ? "Incumbent" : "Challenger";
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Either stdout or the --out file; exits with a usage error if unwritable.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot open output file: " + path);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string regime_label_or_boundary(const ModelParams& params) {
    try {
        return regime_of(params) == Regime::SmallBudget ? "small_budget"
                                                        : "large_budget";
    } catch (const RegimeBoundaryError&) {
        return "boundary";
    }
}

struct SolveOpts {
    std::string mode;
    double alpha = 0.0;
    double v = 0.0;
    std::string placement = "worst";
    std::string format = "text";
    std::string out;
};

int run_solve(const SolveOpts& opt) {
    const ModelParams params(opt.alpha, opt.v);
    OutputTarget target(opt.out);
    std::ostream& os = target.stream();
    const bool csv = opt.format == "csv";

    if (opt.mode == "informed") {
        // regime_of throws on the boundary, mapped to exit code 2 in main
        const char* regime =
            regime_of(params) == Regime::SmallBudget ? "small_budget"
                                                     : "large_budget";
        const Placement placement = opt.placement == "best" ? Placement::Best
                                                            : Placement::Worst;
        const InformedProfile profile = equilibrium_informed(params, placement);
        const InformedOutcome outcome = informed_outcome(profile);
        if (csv) {
            os << "mode,alpha,v,regime,placement,s_i,s_c,incumbent_share,"
                  "winner,payoff_incumbent,payoff_challenger\n";
            os << "informed," << format_sig9(opt.alpha) << ','
               << format_sig9(opt.v) << ',' << regime << ',' << opt.placement
               << ',' << csv_quote(profile.incumbent.to_literal()) << ','
               << csv_quote(profile.challenger.to_literal()) << ','
               << format_sig9(outcome.incumbent_share) << ','
               << politician_name(outcome.winner) << ','
               << format_sig9(outcome.payoff_incumbent) << ','
               << format_sig9(outcome.payoff_challenger) << '\n';
        } else {
            os << "mode: informed\n"
               << "alpha: " << format_sig9(opt.alpha) << '\n'
               << "v: " << format_sig9(opt.v) << '\n'
               << "regime: " << regime << '\n'
               << "placement: " << opt.placement << '\n'
               << "S_I: \"" << profile.incumbent.to_literal() << "\"\n"
               << "S_C: \"" << profile.challenger.to_literal() << "\"\n"
               << "incumbent_share: " << format_sig9(outcome.incumbent_share)
               << '\n'
               << "winner: " << politician_name(outcome.winner) << '\n'
               << "payoff_incumbent: " << format_sig9(outcome.payoff_incumbent)
               << '\n'
               << "payoff_challenger: "
               << format_sig9(outcome.payoff_challenger) << '\n';
        }
        return kExitOk;
    }

    if (opt.mode != "uninformed" && opt.mode != "uninformed-ext") {
        std::cerr << "unknown solve mode: " << opt.mode << '\n';
        return kExitUsage;
    }
    const bool ext = opt.mode == "uninformed-ext";
    const UninformedProfile profile =
        ext ? equilibrium_uninformed_ext(params) : equilibrium_uninformed(params);
    const UninformedOutcome outcome =
        ext ? uninformed_ext_outcome(profile) : uninformed_outcome(profile);
    const std::string regime = regime_label_or_boundary(params);
    if (csv) {
        os << "mode,alpha,v,regime,s_i,s_c,incumbent_share,indifferent_voter,"
              "winner,payoff_incumbent,payoff_challenger\n";
        os << opt.mode << ',' << format_sig9(opt.alpha) << ','
           << format_sig9(opt.v) << ',' << regime << ','
           << format_sig9(profile.s_incumbent) << ','
           << format_sig9(profile.s_challenger) << ','
           << format_sig9(outcome.incumbent_share) << ','
           << (outcome.indifferent_voter
                   ? format_sig9(*outcome.indifferent_voter)
                   : std::string())
           << ',' << politician_name(outcome.winner) << ','
           << format_sig9(outcome.payoff_incumbent) << ','
           << format_sig9(outcome.payoff_challenger) << '\n';
    } else {
        os << "mode: " << opt.mode << '\n'
           << "alpha: " << format_sig9(opt.alpha) << '\n'
           << "v: " << format_sig9(opt.v) << '\n'
           << "regime: " << regime << '\n'
           << "s_incumbent: " << format_sig9(profile.s_incumbent) << '\n'
           << "s_challenger: " << format_sig9(profile.s_challenger) << '\n'
           << "incumbent_share: " << format_sig9(outcome.incumbent_share)
           << '\n';
        if (outcome.indifferent_voter) {
            os << "indifferent_voter: "
               << format_sig9(*outcome.indifferent_voter) << '\n';
        }
        os << "winner: " << politician_name(outcome.winner) << '\n'
           << "payoff_incumbent: " << format_sig9(outcome.payoff_incumbent)
           << '\n'
           << "payoff_challenger: " << format_sig9(outcome.payoff_challenger)
           << '\n';
    }
    return kExitOk;
}

struct VerifyOpts {
    std::string mode;
    double alpha = 0.0;
    double v = 0.0;
    std::string si;
    std::string sc;
    int grid_left = 8;
    int grid_right = 8;
    std::string format = "text";
    std::string out;
};

void print_report(std::ostream& os, const VerificationReport& report,
                  bool csv) {
    const char* verdict = report.equilibrium ? "equilibrium" : "not_equilibrium";
    if (csv) {
        os << "verdict,winner,winner_min_cost,winner_actual_cost,"
              "loser_can_win_under_budget,witness_role,witness_strategy,"
              "witness_cost,notes\n";
        os << verdict << ',' << politician_name(report.winner) << ','
           << (report.winner_min_cost ? format_sig9(*report.winner_min_cost)
                                      : std::string("unbounded"))
           << ',' << format_sig9(report.winner_actual_cost) << ','
           << (report.loser_can_win_under_budget ? "true" : "false") << ',';
        if (report.witness) {
            const DeviationWitness& w = *report.witness;
            os << politician_name(w.role) << ','
               << csv_quote(w.set_strategy ? w.set_strategy->to_literal()
                                           : format_sig9(*w.share_strategy))
               << ',' << format_sig9(w.cost);
        } else {
            os << ",,";
        }
        os << ',' << csv_quote(report.notes) << '\n';
    } else {
        os << "verdict: " << verdict << '\n'
           << "winner: " << politician_name(report.winner) << '\n'
           << "winner_min_cost: "
           << (report.winner_min_cost ? format_sig9(*report.winner_min_cost)
                                      : std::string("unbounded"))
           << '\n'
           << "winner_actual_cost: " << format_sig9(report.winner_actual_cost)
           << '\n'
           << "loser_can_win_under_budget: "
           << (report.loser_can_win_under_budget ? "true" : "false") << '\n';
        if (report.witness) {
            const DeviationWitness& w = *report.witness;
            os << "witness: role=" << politician_name(w.role) << " strategy=\""
               << (w.set_strategy ? w.set_strategy->to_literal()
                                  : format_sig9(*w.share_strategy))
               << "\" cost=" << format_sig9(w.cost) << '\n';
        }
        os << "notes: " << report.notes << '\n';
    }
}

int run_verify(const VerifyOpts& opt) {
    const ModelParams params(opt.alpha, opt.v);
    OutputTarget target(opt.out);
    std::ostream& os = target.stream();
    const bool csv = opt.format == "csv";

    if (opt.mode == "informed") {
        const IntervalSet si = IntervalSet::parse(opt.si);
        const IntervalSet sc = IntervalSet::parse(opt.sc);
        const InformedProfile profile(si, sc, params);
        const VerificationReport analytic = is_equilibrium_informed(profile);
        const GridGame grid =
            GridGame::aligned_to(profile, opt.grid_left, opt.grid_right);
        const VerificationReport on_grid = verify_equilibrium_grid(profile, grid);
        if (!csv) os << "closed-form check\n";
        print_report(os, analytic, csv);
        if (!csv) os << "\ngrid check (" << opt.grid_left << '+'
                     << opt.grid_right << " cells)\n";
        print_report(os, on_grid, csv);
        return analytic.equilibrium && on_grid.equilibrium
                   ? kExitOk
                   : kExitNotEquilibrium;
    }

    if (opt.mode != "uninformed" && opt.mode != "uninformed-ext") {
        std::cerr << "unknown verify mode: " << opt.mode << '\n';
        return kExitUsage;
    }
    double si = 0.0, sc = 0.0;
    try {
        size_t used = 0;
        si = std::stod(opt.si, &used);
        if (used != opt.si.size()) throw std::invalid_argument(opt.si);
        sc = std::stod(opt.sc, &used);
        if (used != opt.sc.size()) throw std::invalid_argument(opt.sc);
    } catch (const std::exception&) {
        std::cerr << "malformed share value for --si/--sc\n";
        return kExitUsage;
    }
    const UninformedProfile profile(si, sc, params);
    const UninformedVariant variant = opt.mode == "uninformed-ext"
                                          ? UninformedVariant::Extension
                                          : UninformedVariant::Base;
    const VerificationReport report =
        verify_uninformed_grid(profile, 1000, kMeasureTol, variant);
    print_report(os, report, csv);
    return report.equilibrium ? kExitOk : kExitNotEquilibrium;
}

struct SweepOpts {
    std::vector<double> alphas;
    double v_min = 0.0;
    double v_max = 0.0;
    int v_steps = 0;
    std::string out;
    bool svg = false;
    bool self_check = false;
};

std::string svg_path_for(const std::string& csv_path) {
    const size_t dot = csv_path.find_last_of('.');
    const size_t slash = csv_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return csv_path + ".svg";
    }
    return csv_path.substr(0, dot) + ".svg";
}

int run_sweep_cmd(const SweepOpts& opt) {
    SweepConfig config;
    config.alphas = opt.alphas;
    config.v_min = opt.v_min;
    config.v_max = opt.v_max;
    config.v_steps = opt.v_steps;
    config.self_check = opt.self_check;

    std::vector<double> skipped;
    const std::vector<SweepRow> rows = run_sweep(config, &skipped);
    for (double v : skipped) {
        std::cerr << "skipped regime-boundary row at v=" << format_sig9(v)
                  << '\n';
    }
    {
        OutputTarget target(opt.out);
        write_sweep_csv(target.stream(), rows);
    }
    if (opt.svg) {
        if (opt.out.empty()) {
            std::cerr << "--svg requires --out to derive the image path\n";
            return kExitUsage;
        }
        const std::string path = svg_path_for(opt.out);
        std::ofstream svg(path);
        if (!svg) {
            std::cerr << "cannot open output file: " << path << '\n';
            return kExitUsage;
        }
        write_sweep_svg(svg, rows);
    }
    return kExitOk;
}

struct CutoffOpts {
    std::vector<double> alphas;
    std::string format = "text";
    std::string out;
};

int run_cutoffs(const CutoffOpts& opt) {
    const std::vector<CutoffRow> rows = compute_cutoffs(opt.alphas);
    OutputTarget target(opt.out);
    std::ostream& os = target.stream();
    if (opt.format == "csv") {
        write_cutoffs_csv(os, rows);
    } else {
        os << "alpha  regime_boundary  cutoff_closed  cutoff_bisect  "
              "cutoff_ext\n";
        for (const CutoffRow& row : rows) {
            os << format_sig9(row.alpha) << "  "
               << format_sig9(row.regime_boundary) << "  "
               << format_sig9(row.cutoff_closed) << "  "
               << format_sig9(row.cutoff_bisect) << "  "
               << format_sig9(row.cutoff_ext) << '\n';
        }
    }
    for (const CutoffRow& row : rows) {
        if (std::abs(row.cutoff_closed - row.cutoff_bisect) > 1e-8) {
            std::cerr << "cutoff disagreement beyond 1e-8 at alpha="
                      << format_sig9(row.alpha) << '\n';
            return kExitSelfCheck;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-candidate electoral targeting games: equilibria, "
                 "verification, and welfare comparisons"};
    app.require_subcommand(1);

    SolveOpts solve_opts;
    CLI::App* solve = app.add_subcommand(
        "solve", "Compute the equilibrium for one parameter point");
    solve->add_option("mode", solve_opts.mode,
                      "informed|uninformed|uninformed-ext")
        ->required();
    solve->add_option("--alpha", solve_opts.alpha, "value of the targeted good")
        ->required();
    solve->add_option("--v", solve_opts.v, "budget")->required();
    solve->add_option("--placement", solve_opts.placement,
                      "small-budget placement: worst|best")
        ->check(CLI::IsMember({"worst", "best"}));
    solve->add_option("--format", solve_opts.format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    solve->add_option("--out", solve_opts.out, "write output to a file");

    VerifyOpts verify_opts;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check a strategy profile for equilibrium");
    verify->add_option("mode", verify_opts.mode,
                       "informed|uninformed|uninformed-ext")
        ->required();
    verify->add_option("--alpha", verify_opts.alpha, "value of the targeted good")
        ->required();
    verify->add_option("--v", verify_opts.v, "budget")->required();
    verify->add_option("--si", verify_opts.si,
                       "Incumbent strategy: interval literal or share")
        ->required();
    verify->add_option("--sc", verify_opts.sc,
                       "Challenger strategy: interval literal or share")
        ->required();
    verify->add_option("--grid-left", verify_opts.grid_left,
                       "left swing cells for the grid check");
    verify->add_option("--grid-right", verify_opts.grid_right,
                       "right swing cells for the grid check");
    verify->add_option("--format", verify_opts.format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    verify->add_option("--out", verify_opts.out, "write output to a file");

    SweepOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Welfare sweep over budgets, CSV output");
    sweep->add_option("--alpha", sweep_opts.alphas,
                      "value(s) of the targeted good")
        ->required();
    sweep->add_option("--v-min", sweep_opts.v_min, "smallest budget")
        ->required();
    sweep->add_option("--v-max", sweep_opts.v_max, "largest budget")
        ->required();
    sweep->add_option("--v-steps", sweep_opts.v_steps,
                      "number of budget points (>= 2)")
        ->required();
    sweep->add_option("--out", sweep_opts.out, "CSV path (default stdout)");
    sweep->add_flag("--svg", sweep_opts.svg,
                    "also write an SVG plot next to --out");
    sweep->add_flag("--self-check", sweep_opts.self_check,
                    "cross-check every welfare value against quadrature");

    CutoffOpts cutoff_opts;
    CLI::App* cutoffs = app.add_subcommand(
        "cutoffs", "Welfare cutoffs and regime boundaries per alpha");
    cutoffs->add_option("--alpha", cutoff_opts.alphas,
                        "value(s) of the targeted good")
        ->required();
    cutoffs->add_option("--format", cutoff_opts.format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    cutoffs->add_option("--out", cutoff_opts.out, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(solve_opts);
        if (verify->parsed()) return run_verify(verify_opts);
        if (sweep->parsed()) return run_sweep_cmd(sweep_opts);
        return run_cutoffs(cutoff_opts);
    } catch (const RegimeBoundaryError& e) {
        std::cerr << "regime boundary: " << e.what() << '\n';
        return kExitBoundary;
    } catch (const OracleError& e) {
        std::cerr << "self-check failure: " << e.what() << '\n';
        return kExitSelfCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
