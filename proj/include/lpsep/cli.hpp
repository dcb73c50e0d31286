#pragma once

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "lpsep/io.hpp"
#include "lpsep/oracle.hpp"
#include "lpsep/random.hpp"

namespace lpsep::cli {

// LPSEP_TOL overrides the default verdict tolerance.
inline double decision_tolerance_from_env(double fallback = criteria::kDecisionTol) {
    const char* raw = std::getenv("LPSEP_TOL");
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(v > 0.0))
        throw ParseError("LPSEP_TOL must be a positive number, got '" + std::string(raw) + "'");
    return v;
}

inline criteria::CriterionResult evaluate_named_criterion(const std::string& name,
                                                          const quantum::DensityMatrix& rho,
                                                          double tol) {
    if (name == "sep1") return criteria::sep1(rho, tol);
    if (name == "sep2") return criteria::sep2(rho, tol);
    if (name == "sep3") return criteria::sep3(rho, tol);
    if (name == "sep4") return criteria::sep4(rho, {1.0, 2.0, 3.0, 4.0}, tol);
    throw InvalidParams("unknown criterion '" + name + "' (expected sep1..sep4)");
}

struct CheckOptions {
    std::string state_path;
    std::string json_out;  // empty: no JSON file
    double decision_tol = criteria::kDecisionTol;
    double state_tol = quantum::kStateTol;
};

inline int run_check(const CheckOptions& opt, std::ostream& out) {
    const quantum::DensityMatrix rho = io::load_state(opt.state_path, opt.state_tol);
    const io::Report rep = io::build_report(rho, opt.decision_tol);
    out << io::report_table(rep);
    if (!opt.json_out.empty())
        io::write_text_file(opt.json_out, io::report_to_json(rep).dump(2) + "\n");
    return 0;
}

struct SweepOptions {
    std::string family;
    std::vector<std::string> criteria_names = {"sep1", "sep2", "sep3", "sep4"};
    int alpha_steps = 9;  // Gisin: interior grid α_j = j·(π/2)/(steps+1)
    double beta = 0.0;
    std::string out_path;
    double bisect_tol = 1e-6;
    double decision_tol = criteria::kDecisionTol;
};

inline int run_sweep(const SweepOptions& opt, std::ostream& out) {
    const families::Family fam = families::family_from_string(opt.family);
    if (opt.alpha_steps < 1) throw InvalidParams("--alpha-steps must be >= 1");
    std::vector<families::FamilyParams> combos;
    if (fam == families::Family::Gisin) {
        for (int j = 1; j <= opt.alpha_steps; ++j)
            combos.push_back({fam, 0.0,
                              j * (std::numbers::pi / 2) / (opt.alpha_steps + 1), opt.beta});
    } else {
        combos.push_back({fam, 0.0, 0.0, 0.0});
    }
    std::vector<io::SweepRow> rows;
    for (const auto& combo : combos) {
        const double known = families::known_separability_boundary(combo);
        std::optional<double> ppt;
        try {
            ppt = oracle::ppt_boundary(fam, combo, opt.bisect_tol).threshold;
        } catch (const NoDetection&) {
        }
        for (const std::string& name : opt.criteria_names) {
            std::optional<double> threshold;
            try {
                threshold = oracle::detection_threshold(
                                fam,
                                [&](const quantum::DensityMatrix& rho) {
                                    return evaluate_named_criterion(name, rho, opt.decision_tol);
                                },
                                combo, opt.bisect_tol)
                                .threshold;
            } catch (const NoDetection&) {
            }
            rows.push_back({families::family_name(fam), combo.alpha, combo.beta, name, threshold,
                            known, ppt});
        }
    }
    io::write_text_file(opt.out_path, io::sweep_csv(rows));
    out << "wrote " << rows.size() << " rows to " << opt.out_path << "\n";
    return 0;
}

struct VerifyOptions {
    std::string mode;  // bounds | lp | spin-overlap
    std::uint64_t seed = 42;
    int count = 10000;
    int dmax = 6;
    oracle::GridSpec grid = {};
};

namespace detail {

inline int verify_bounds(const VerifyOptions& opt, std::ostream& out) {
    const auto& o = criteria::two_qubit_observables();
    struct Case {
        const char* name;
        std::vector<quantum::Observable> objective;
        double bound;
    };
    const Case cases[] = {
        {"sep1 [Z, X]", {o.Z, o.X}, 1.5},
        {"sep2 [X, Y, Z]", {o.X, o.Y, o.Z}, 2.0},
        {"sep3 [Sx, Sy, Sz]", {o.Sx, o.Sy, o.Sz}, 2.0},
        {"sep4 [B]", {o.B}, 0.5},
    };
    bool all_ok = true;
    for (const Case& c : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const oracle::ProductMaxResult res = oracle::max_over_product_states(c.objective, opt.grid);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = std::abs(res.value - c.bound) <= 1e-6;
        all_ok = all_ok && ok;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "bounds %-18s max %.9f expected %.9f |diff| %.2e (%.1fs) %s\n", c.name,
                      res.value, c.bound, std::abs(res.value - c.bound), secs,
                      ok ? "ok" : "FAIL");
        out << buf;
    }
    out << (all_ok ? "verify bounds: PASS\n" : "verify bounds: FAIL\n");
    return all_ok ? 0 : 1;
}

inline int verify_lp(const VerifyOptions& opt, std::ostream& out) {
    rng::Generator gen(opt.seed);
    double min_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < opt.count; ++i) {
        const int dim = 2 + i % 4;
        const quantum::DensityMatrix rho = rng::random_state(gen, {dim});
        const quantum::Observable x = rng::random_nondegenerate_observable(gen, dim);
        const quantum::Observable y = rng::random_nondegenerate_observable(gen, dim);
        min_slack = std::min(min_slack, criteria::landau_pollak_slack(rho, x, y));
    }
    const bool ok = min_slack >= -1e-9;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "lp slack over %d samples (seed %llu): min %.3e %s\n",
                  opt.count, static_cast<unsigned long long>(opt.seed), min_slack,
                  ok ? "ok" : "FAIL");
    out << buf;
    out << (ok ? "verify lp: PASS\n" : "verify lp: FAIL\n");
    return ok ? 0 : 1;
}

inline int verify_spin_overlap(const VerifyOptions& opt, std::ostream& out) {
    if (opt.dmax < 2) throw InvalidParams("--dmax must be >= 2");
    double worst = 0.0;
    for (int dim = 2; dim <= opt.dmax; ++dim)
        for (int k = 0; k <= 24; ++k) {
            const double theta = k * std::numbers::pi / 24;
            const double numeric = oracle::numeric_spin_overlap(dim, theta);
            const double formula = criteria::spin_overlap_formula(dim, theta);
            worst = std::max(worst, std::abs(numeric - formula));
        }
    const bool ok = worst <= 1e-8;
    char buf[120];
    std::snprintf(buf, sizeof(buf),
                  "spin-overlap D in [2, %d], 25 angles: max |numeric - formula| %.3e %s\n",
                  opt.dmax, worst, ok ? "ok" : "FAIL");
    out << buf;
    out << (ok ? "verify spin-overlap: PASS\n" : "verify spin-overlap: FAIL\n");
    return ok ? 0 : 1;
}

}  // namespace detail

inline int run_verify(const VerifyOptions& opt, std::ostream& out) {
    if (opt.mode == "bounds") return detail::verify_bounds(opt, out);
    if (opt.mode == "lp") return detail::verify_lp(opt, out);
    if (opt.mode == "spin-overlap") return detail::verify_spin_overlap(opt, out);
    throw InvalidParams("unknown verify mode '" + opt.mode +
                        "' (expected bounds, lp, or spin-overlap)");
}

}  // namespace lpsep::cli
