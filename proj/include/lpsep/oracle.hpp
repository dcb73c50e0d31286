#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lpsep/criteria.hpp"
#include "lpsep/families.hpp"
#include "lpsep/quantum.hpp"

namespace lpsep::oracle {

// Minimum eigenvalue of the partial transpose; nonnegative iff separable for
// 2×2 and 2×3 systems.
inline double ppt_min_eigenvalue(const quantum::DensityMatrix& rho) {
    if (rho.subsystem_dims.size() != 2)
        throw DimMismatch("ppt_min_eigenvalue: requires a bipartite state");
    const linalg::Matrix pt = linalg::partial_transpose(
        rho.matrix, rho.subsystem_dims[0], rho.subsystem_dims[1], linalg::Side::B);
    return linalg::hermitian_eig(pt).eigenvalues.minCoeff();
}

struct GridSpec {
    int resolution = 32;        // points per angle
    int refinement_rounds = 4;  // local shrink passes after the coarse scan
    double refinement_shrink = 0.25;
};

inline void validate(const GridSpec& grid) {
    if (grid.resolution < 8) throw InvalidParams("GridSpec: resolution must be >= 8");
    if (grid.refinement_rounds < 0)
        throw InvalidParams("GridSpec: refinement_rounds must be >= 0");
    if (!(grid.refinement_shrink > 0.0 && grid.refinement_shrink < 1.0))
        throw InvalidParams("GridSpec: refinement_shrink must lie in (0, 1)");
}

struct ProductMaxResult {
    double value;
    quantum::ProductStateParams argmax;
};

namespace detail {

// Fixed-size projector copies keep the inner grid loop free of allocation.
using ProjectorGroups = std::vector<std::vector<Eigen::Matrix4cd>>;

inline ProjectorGroups collect_projectors(const std::vector<quantum::Observable>& objective) {
    ProjectorGroups groups;
    for (const quantum::Observable& obs : objective) {
        if (obs.dim() != 4)
            throw DimMismatch("max_over_product_states: objective must be two-qubit observables");
        std::vector<Eigen::Matrix4cd> ps;
        for (const quantum::Outcome& o : obs.outcomes) ps.push_back(o.projector);
        groups.push_back(std::move(ps));
    }
    return groups;
}

// Σ_k max_n ⟨ψ|P_n^{(k)}|ψ⟩ for the pure product state |ψ⟩.
inline double objective_value(const ProjectorGroups& groups, const Eigen::Vector4cd& psi) {
    double sum = 0.0;
    for (const auto& projectors : groups) {
        double best = 0.0;
        for (const Eigen::Matrix4cd& p : projectors)
            best = std::max(best, psi.dot(p * psi).real());
        sum += best;
    }
    return sum;
}

}  // namespace detail

// Brute-force maximum of Σ_k M_∞(obs_k) over pure two-qubit product states:
// a full grid over (α, β, δ, γ), then refinement_rounds of re-gridding inside
// a window shrunk around the incumbent.
inline ProductMaxResult max_over_product_states(const std::vector<quantum::Observable>& objective,
                                                const GridSpec& grid = {}) {
    if (objective.empty()) throw EmptyObjective("max_over_product_states: no observables given");
    validate(grid);
    const detail::ProjectorGroups groups = detail::collect_projectors(objective);

    constexpr double kHalfPi = std::numbers::pi / 2;
    constexpr double kTwoPi = 2 * std::numbers::pi;
    std::array<double, 4> lo = {0.0, 0.0, 0.0, 0.0};
    std::array<double, 4> hi = {kHalfPi, kHalfPi, kTwoPi, kTwoPi};
    const std::array<double, 4> domain_lo = lo, domain_hi = hi;

    const int r = grid.resolution;
    std::array<std::vector<double>, 4> axis;
    double best = -1.0;
    std::array<double, 4> best_at = {0.0, 0.0, 0.0, 0.0};

    for (int round = 0; round <= grid.refinement_rounds; ++round) {
        for (int a = 0; a < 4; ++a) {
            axis[a].resize(r);
            for (int i = 0; i < r; ++i)
                axis[a][i] = lo[a] + (hi[a] - lo[a]) * i / (r - 1);
        }
        std::vector<double> cos_a(r), sin_a(r), cos_b(r), sin_b(r);
        std::vector<linalg::Complex> cis_d(r), cis_g(r);
        for (int i = 0; i < r; ++i) {
            cos_a[i] = std::cos(axis[0][i]);
            sin_a[i] = std::sin(axis[0][i]);
            cos_b[i] = std::cos(axis[1][i]);
            sin_b[i] = std::sin(axis[1][i]);
            cis_d[i] = std::polar(1.0, axis[2][i]);
            cis_g[i] = std::polar(1.0, axis[3][i]);
        }
        for (int ia = 0; ia < r; ++ia)
            for (int ib = 0; ib < r; ++ib)
                for (int id = 0; id < r; ++id) {
                    const linalg::Complex a1 = sin_a[ia] * cis_d[id];
                    for (int ig = 0; ig < r; ++ig) {
                        const linalg::Complex b1 = sin_b[ib] * cis_g[ig];
                        Eigen::Vector4cd psi;
                        psi << cos_a[ia] * cos_b[ib], cos_a[ia] * b1, a1 * cos_b[ib], a1 * b1;
                        const double v = detail::objective_value(groups, psi);
                        if (v > best) {
                            best = v;
                            best_at = {axis[0][ia], axis[1][ib], axis[2][id], axis[3][ig]};
                        }
                    }
                }
        for (int a = 0; a < 4; ++a) {
            const double half = 0.5 * grid.refinement_shrink * (hi[a] - lo[a]);
            lo[a] = std::max(domain_lo[a], best_at[a] - half);
            hi[a] = std::min(domain_hi[a], best_at[a] + half);
        }
    }
    return {best, {best_at[0], best_at[1], best_at[2], best_at[3]}};
}

// Numeric counterpart of the closed-form spin overlap: build J_z for spin
// (D−1)/2 from the ladder operators, rotate its eigenbasis by theta about y
// via the matrix exponential, and take the maximal overlap of the two
// resolved observables.
inline double numeric_spin_overlap(int dim, double theta) {
    if (dim < 2) throw InvalidDim("numeric_spin_overlap: dim must be >= 2");
    if (!(theta >= 0.0 && theta <= std::numbers::pi + 1e-12))
        throw InvalidParams("numeric_spin_overlap: theta must lie in [0, pi]");
    const double j = (dim - 1) / 2.0;
    linalg::Matrix jz = linalg::Matrix::Zero(dim, dim);
    linalg::Matrix jplus = linalg::Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const double m = j - k;  // row k holds |j, m⟩
        jz(k, k) = m;
        if (k > 0) jplus(k - 1, k) = std::sqrt(j * (j + 1) - (m) * (m + 1));
    }
    const linalg::Matrix jy =
        (jplus - jplus.adjoint()) / linalg::Complex(0.0, 2.0);
    const linalg::EigenSystem es = linalg::hermitian_eig(jy);
    linalg::Matrix phases = linalg::Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k)
        phases(k, k) = std::polar(1.0, -theta * es.eigenvalues(k));
    const linalg::Matrix u = es.eigenvectors * phases * es.eigenvectors.adjoint();
    const linalg::Matrix rotated = u * jz * u.adjoint();
    return quantum::max_overlap(quantum::resolve_observable(jz),
                                quantum::resolve_observable(rotated));
}

struct ThresholdResult {
    double threshold;
    double bracket_width;
    int evaluations;
};

namespace detail {

// 16-point monotonicity pre-scan, then bisection of the false→true transition.
template <typename Detected>
inline ThresholdResult bisect_detection(Detected&& detected, double tol) {
    if (!(tol > 0.0)) throw InvalidParams("detection threshold tolerance must be positive");
    constexpr int kScan = 16;
    int evaluations = 0;
    const auto probe = [&](double p) {
        ++evaluations;
        return detected(p);
    };
    std::array<bool, kScan> flags{};
    for (int k = 0; k < kScan; ++k) flags[k] = probe(k / double(kScan - 1));
    if (flags[0]) throw NotMonotone("already detected at p = 0");
    if (!flags[kScan - 1]) {
        for (int k = 1; k + 1 < kScan; ++k)
            if (flags[k]) throw NotMonotone("verdict not monotone in p");
        throw NoDetection("criterion never detects on [0, 1]");
    }
    int first_true = kScan - 1;
    while (first_true > 0 && flags[first_true - 1]) --first_true;
    for (int k = first_true; k < kScan; ++k)
        if (!flags[k]) throw NotMonotone("verdict not monotone in p");
    for (int k = 1; k < first_true; ++k)
        if (flags[k]) throw NotMonotone("verdict not monotone in p");
    double lo = (first_true - 1) / double(kScan - 1);
    double hi = first_true / double(kScan - 1);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (probe(mid) ? hi : lo) = mid;
    }
    return {0.5 * (lo + hi), hi - lo, evaluations};
}

}  // namespace detail

// Locates the Detected/Inconclusive boundary of a criterion over a family's
// mixing parameter p.  The evaluator maps a DensityMatrix to a CriterionResult.
template <typename CriterionFn>
inline ThresholdResult detection_threshold(families::Family family, CriterionFn&& criterion,
                                           const families::FamilyParams& fixed_params,
                                           double tol = 1e-6) {
    const auto detected = [&](double p) {
        families::FamilyParams fp = fixed_params;
        fp.family = family;
        fp.p = p;
        return criterion(families::build(fp)).verdict == criteria::Verdict::DetectedEntangled;
    };
    return detail::bisect_detection(detected, tol);
}

// Mixing parameter at which the family's partial transpose turns indefinite.
// The margin absorbs eigensolver noise on exactly-zero spectra.
inline ThresholdResult ppt_boundary(families::Family family,
                                    const families::FamilyParams& fixed_params,
                                    double tol = 1e-6) {
    const auto npt = [&](double p) {
        families::FamilyParams fp = fixed_params;
        fp.family = family;
        fp.p = p;
        return ppt_min_eigenvalue(families::build(fp)) < -1e-13;
    };
    return detail::bisect_detection(npt, tol);
}

}  // namespace lpsep::oracle
