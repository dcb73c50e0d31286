#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lpsep/lpsep.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Separability criteria from the Landau-Pollak uncertainty relation"};
    app.require_subcommand(1);

    lpsep::cli::CheckOptions check_opt;
    CLI::App* check = app.add_subcommand("check", "Evaluate criteria on a state file");
    check->add_option("state", check_opt.state_path, "StateFile JSON path")->required();
    check->add_option("--json", check_opt.json_out, "Also write the report as JSON here");
    check->add_option("--state-tol", check_opt.state_tol,
                      "Tolerance for density-matrix invariants");

    lpsep::cli::SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Detection thresholds over a family");
    sweep->add_option("--family", sweep_opt.family, "werner, gisin, or rho0")->required();
    sweep->add_option("--criteria", sweep_opt.criteria_names, "Comma-separated criteria")
        ->delimiter(',');
    sweep->add_option("--alpha-steps", sweep_opt.alpha_steps, "Gisin interior alpha grid size");
    sweep->add_option("--beta", sweep_opt.beta, "Gisin beta in [0, 2*pi)");
    sweep->add_option("--out", sweep_opt.out_path, "Output CSV path")->required();
    sweep->add_option("--tol", sweep_opt.bisect_tol, "Bisection tolerance");

    lpsep::cli::VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "Run oracle cross-checks");
    verify->add_option("mode", verify_opt.mode, "bounds, lp, or spin-overlap")->required();
    verify->add_option("--seed", verify_opt.seed, "RNG seed");
    verify->add_option("--count", verify_opt.count, "Sample count for lp");
    verify->add_option("--dmax", verify_opt.dmax, "Largest dimension for spin-overlap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const double tol = lpsep::cli::decision_tolerance_from_env();
        if (*check) {
            check_opt.decision_tol = tol;
            return lpsep::cli::run_check(check_opt, std::cout);
        }
        if (*sweep) {
            sweep_opt.decision_tol = tol;
            return lpsep::cli::run_sweep(sweep_opt, std::cout);
        }
        return lpsep::cli::run_verify(verify_opt, std::cout);
    } catch (const lpsep::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
