#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lpsep/measures.hpp"
#include "lpsep/quantum.hpp"

namespace lpsep::criteria {

using quantum::DensityMatrix;
using quantum::Observable;

inline constexpr double kDecisionTol = 1e-9;

enum class CriterionId {
    Sep1,
    Sep2,
    Sep3,
    Sep4,
    GLBound,
    QuditSpin,
    QuditComplementary,
    MultipartiteBisep,
};

enum class Verdict { DetectedEntangled, Inconclusive };

inline const char* criterion_name(CriterionId id) {
    switch (id) {
        case CriterionId::Sep1: return "sep1";
        case CriterionId::Sep2: return "sep2";
        case CriterionId::Sep3: return "sep3";
        case CriterionId::Sep4: return "sep4";
        case CriterionId::GLBound: return "gl_bound";
        case CriterionId::QuditSpin: return "qudit_spin";
        case CriterionId::QuditComplementary: return "qudit_complementary";
        case CriterionId::MultipartiteBisep: return "multipartite_bisep";
    }
    return "";
}

inline const char* verdict_name(Verdict v) {
    return v == Verdict::DetectedEntangled ? "DetectedEntangled" : "Inconclusive";
}

struct CriterionResult {
    CriterionId criterion_id;
    double value;
    double bound;
    Verdict verdict;
};

// The conditions are necessary-only, so the verdict requires strict exceedance:
// boundary states stay Inconclusive.
inline Verdict decide(double value, double bound, double tol = kDecisionTol) {
    return value > bound + tol ? Verdict::DetectedEntangled : Verdict::Inconclusive;
}

inline CriterionResult make_result(CriterionId id, double value, double bound,
                                   double tol = kDecisionTol) {
    return CriterionResult{id, value, bound, decide(value, bound, tol)};
}

// Bell-diagonal observable B = Σ_s λ_s |B_s⟩⟨B_s| over (φ+, φ−, ψ+, ψ−).
// The λ only label outcomes; they must be pairwise distinct so that B resolves
// into four rank-1 eigenspaces.
inline Observable bell_observable(const std::array<double, 4>& lambdas) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(lambdas[i] - lambdas[j]) <= quantum::kGroupTol)
                throw DegenerateSpectrum("bell_observable: eigenvalues must be distinct");
    linalg::Matrix b = linalg::Matrix::Zero(4, 4);
    const std::array<quantum::BellState, 4> order = {
        quantum::BellState::PhiPlus, quantum::BellState::PhiMinus,
        quantum::BellState::PsiPlus, quantum::BellState::PsiMinus};
    for (int s = 0; s < 4; ++s) {
        const linalg::Vector ket = quantum::bell_ket(order[s]);
        b += lambdas[s] * (ket * ket.adjoint());
    }
    return quantum::resolve_observable(b);
}

// The fixed observables of the two-qubit conditions: pair products σi⊗σi,
// total-spin components σi⊗I + I⊗σi, and the default Bell-diagonal B.
struct TwoQubitObservables {
    Observable X, Y, Z;
    Observable Sx, Sy, Sz;
    Observable B;
};

inline const TwoQubitObservables& two_qubit_observables() {
    static const TwoQubitObservables obs = [] {
        using namespace quantum;
        const linalg::Matrix id2 = linalg::Matrix::Identity(2, 2);
        TwoQubitObservables o;
        o.X = resolve_observable(linalg::kron(pauli_x(), pauli_x()));
        o.Y = resolve_observable(linalg::kron(pauli_y(), pauli_y()));
        o.Z = resolve_observable(linalg::kron(pauli_z(), pauli_z()));
        o.Sx = resolve_observable(linalg::kron(pauli_x(), id2) + linalg::kron(id2, pauli_x()));
        o.Sy = resolve_observable(linalg::kron(pauli_y(), id2) + linalg::kron(id2, pauli_y()));
        o.Sz = resolve_observable(linalg::kron(pauli_z(), id2) + linalg::kron(id2, pauli_z()));
        o.B = bell_observable({1.0, 2.0, 3.0, 4.0});
        return o;
    }();
    return obs;
}

namespace detail {

inline void require_two_qubit(const DensityMatrix& rho, const char* who) {
    if (rho.subsystem_dims != std::vector<int>{2, 2})
        throw DimMismatch(std::string(who) + ": requires a two-qubit state");
}

inline double minf_of(const DensityMatrix& rho, const Observable& obs) {
    return measures::m_inf(quantum::outcome_distribution(rho, obs));
}

}  // namespace detail

// M_∞(Z) + M_∞(X) ≤ 3/2 on separable two-qubit states.
inline CriterionResult sep1(const DensityMatrix& rho, double tol = kDecisionTol) {
    detail::require_two_qubit(rho, "sep1");
    const auto& o = two_qubit_observables();
    const double value = detail::minf_of(rho, o.Z) + detail::minf_of(rho, o.X);
    return make_result(CriterionId::Sep1, value, 1.5, tol);
}

// M_∞(X) + M_∞(Y) + M_∞(Z) ≤ 2 on separable two-qubit states.
inline CriterionResult sep2(const DensityMatrix& rho, double tol = kDecisionTol) {
    detail::require_two_qubit(rho, "sep2");
    const auto& o = two_qubit_observables();
    const double value =
        detail::minf_of(rho, o.X) + detail::minf_of(rho, o.Y) + detail::minf_of(rho, o.Z);
    return make_result(CriterionId::Sep2, value, 2.0, tol);
}

// M_∞(S_x) + M_∞(S_y) + M_∞(S_z) ≤ 2 on separable two-qubit states.
inline CriterionResult sep3(const DensityMatrix& rho, double tol = kDecisionTol) {
    detail::require_two_qubit(rho, "sep3");
    const auto& o = two_qubit_observables();
    const double value =
        detail::minf_of(rho, o.Sx) + detail::minf_of(rho, o.Sy) + detail::minf_of(rho, o.Sz);
    return make_result(CriterionId::Sep3, value, 2.0, tol);
}

// M_∞(B) ≤ 1/2 on separable two-qubit states, B Bell diagonal with distinct λ.
inline CriterionResult sep4(const DensityMatrix& rho,
                            const std::array<double, 4>& lambdas = {1.0, 2.0, 3.0, 4.0},
                            double tol = kDecisionTol) {
    detail::require_two_qubit(rho, "sep4");
    const bool standard = lambdas == std::array<double, 4>{1.0, 2.0, 3.0, 4.0};
    const Observable& b = standard ? two_qubit_observables().B : bell_observable(lambdas);
    return make_result(CriterionId::Sep4, detail::minf_of(rho, b), 0.5, tol);
}

// Expectation values of the four optimal witnesses W_s = I/2 − |B_s⟩⟨B_s|,
// ordered (φ+, φ−, ψ+, ψ−).  A negative entry certifies entanglement.
struct WitnessValues {
    std::array<double, 4> values;
};

inline WitnessValues witness_values(const DensityMatrix& rho) {
    detail::require_two_qubit(rho, "witness_values");
    WitnessValues w{};
    const std::array<quantum::BellState, 4> order = {
        quantum::BellState::PhiPlus, quantum::BellState::PhiMinus,
        quantum::BellState::PsiPlus, quantum::BellState::PsiMinus};
    for (int s = 0; s < 4; ++s) {
        const linalg::Vector ket = quantum::bell_ket(order[s]);
        w.values[s] = 0.5 - (ket.adjoint() * rho.matrix * ket)(0, 0).real();
    }
    return w;
}

// Landau-Pollak slack arccos√M_∞(X) + arccos√M_∞(Y) − arccos c(X,Y);
// nonnegative (up to rounding) for every valid state.
inline double landau_pollak_slack(const DensityMatrix& rho, const Observable& x,
                                  const Observable& y) {
    if (rho.dim() != x.dim() || rho.dim() != y.dim())
        throw DimMismatch("landau_pollak_slack: dims differ");
    const auto angle = [](double v) { return std::acos(std::clamp(std::sqrt(v), 0.0, 1.0)); };
    const double ax = angle(detail::minf_of(rho, x));
    const double ay = angle(detail::minf_of(rho, y));
    const double ac = std::acos(std::clamp(quantum::max_overlap(x, y), 0.0, 1.0));
    return ax + ay - ac;
}

// Weak form of the Landau-Pollak relation: M_∞(X) + M_∞(Y) ≤ 1 + c(X,Y).
struct WeakLpValue {
    double value;
    double bound;
};

inline WeakLpValue weak_lp_value(const DensityMatrix& rho, const Observable& x,
                                 const Observable& y) {
    if (rho.dim() != x.dim() || rho.dim() != y.dim())
        throw DimMismatch("weak_lp_value: dims differ");
    return {detail::minf_of(rho, x) + detail::minf_of(rho, y),
            1.0 + quantum::max_overlap(x, y)};
}

// Bipartite product-observable condition: on separable states
// M_∞(A₁⊗B₁) + M_∞(A₂⊗B₂) ≤ 1 + min(c(A₁,A₂), c(B₁,B₂)).
// Either party's overlap bounds the sum, so the smaller one is used.
inline CriterionResult gl_bound(const DensityMatrix& rho, const Observable& a1,
                                const Observable& b1, const Observable& a2, const Observable& b2,
                                double tol = kDecisionTol,
                                CriterionId id = CriterionId::GLBound) {
    if (rho.subsystem_dims.size() != 2)
        throw DimMismatch("gl_bound: requires a bipartite state");
    if (a1.dim() != rho.subsystem_dims[0] || a2.dim() != rho.subsystem_dims[0] ||
        b1.dim() != rho.subsystem_dims[1] || b2.dim() != rho.subsystem_dims[1])
        throw DimMismatch("gl_bound: single-party observable dims do not match the state");
    const Observable joint1 = quantum::resolve_observable(linalg::kron(a1.matrix, b1.matrix));
    const Observable joint2 = quantum::resolve_observable(linalg::kron(a2.matrix, b2.matrix));
    const double value = detail::minf_of(rho, joint1) + detail::minf_of(rho, joint2);
    const double bound =
        1.0 + std::min(quantum::max_overlap(a1, a2), quantum::max_overlap(b1, b2));
    return make_result(id, value, bound, tol);
}

// sep2 and sep4 verdicts plus |Δp(X)| + |Δp(Y)| + |Δp(Z)|, Δp(τ) = p₊ − p₋.
// The two verdicts agree on every state, and the sum exceeds 1 exactly when
// sep2 detects.
struct EquivalenceResult {
    Verdict sep2_verdict;
    Verdict sep4_verdict;
    double delta_p_sum;
};

inline EquivalenceResult sep2_sep4_equivalence(const DensityMatrix& rho,
                                               double tol = kDecisionTol) {
    detail::require_two_qubit(rho, "sep2_sep4_equivalence");
    const auto& o = two_qubit_observables();
    double sum = 0.0;
    for (const Observable* obs : {&o.X, &o.Y, &o.Z}) {
        // outcomes ascend, so index 0 is the −1 eigenspace and index 1 the +1.
        const auto dist = quantum::outcome_distribution(rho, *obs);
        sum += std::abs(dist.probs[1] - dist.probs[0]);
    }
    return {sep2(rho, tol).verdict, sep4(rho, {1.0, 2.0, 3.0, 4.0}, tol).verdict, sum};
}

// Closed-form maximal overlap of two spin-(D−1)/2 components whose axes are
// separated by theta: the square is the peak of a Binomial(D−1, sin²(θ/2))
// probability mass.  At the floor boundary both adjacent indices are checked
// and the larger value kept.
inline double spin_overlap_formula(int dim, double theta) {
    if (dim < 2) throw InvalidDim("spin_overlap_formula: dim must be >= 2");
    if (!(theta >= 0.0 && theta <= std::numbers::pi + 1e-12))
        throw InvalidParams("spin_overlap_formula: theta must lie in [0, pi]");
    const double s2 = std::sin(theta / 2) * std::sin(theta / 2);
    const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
    const int n_star = static_cast<int>(std::floor(dim * s2));
    double best = 0.0;
    for (int n = std::max(0, n_star - 1); n <= std::min(dim - 1, n_star + 1); ++n) {
        const double log_binom =
            std::lgamma(dim) - std::lgamma(n + 1.0) - std::lgamma(dim - n + 0.0);
        const double pmf =
            std::exp(log_binom) * std::pow(c2, dim - 1 - n) * std::pow(s2, n);
        best = std::max(best, pmf);
    }
    return std::sqrt(std::min(best, 1.0));
}

// Separability bound 1 + c for two qudit spin components at axis angle theta.
inline double qudit_spin_bound(int dim, double theta) {
    return 1.0 + spin_overlap_formula(dim, theta);
}

// Biseparability condition for n parties: on states separable across any
// bipartite cut, M_∞(⊗obs1) + M_∞(⊗obs2) ≤ 1 + min_k c(obs1_k, obs2_k).
inline CriterionResult multipartite_bisep_value(const DensityMatrix& rho,
                                                const std::vector<Observable>& obs1,
                                                const std::vector<Observable>& obs2,
                                                double tol = kDecisionTol) {
    const std::size_t parties = rho.subsystem_dims.size();
    if (parties < 2) throw DimMismatch("multipartite_bisep_value: need at least 2 parties");
    if (obs1.size() != parties || obs2.size() != parties)
        throw DimMismatch("multipartite_bisep_value: one observable per party required");
    std::vector<linalg::Matrix> f1, f2;
    double min_overlap = 1.0;
    for (std::size_t k = 0; k < parties; ++k) {
        if (obs1[k].dim() != rho.subsystem_dims[k] || obs2[k].dim() != rho.subsystem_dims[k])
            throw DimMismatch("multipartite_bisep_value: party observable dim mismatch");
        f1.push_back(obs1[k].matrix);
        f2.push_back(obs2[k].matrix);
        min_overlap = std::min(min_overlap, quantum::max_overlap(obs1[k], obs2[k]));
    }
    const Observable joint1 = quantum::resolve_observable(linalg::kron_all(f1));
    const Observable joint2 = quantum::resolve_observable(linalg::kron_all(f2));
    const double value = detail::minf_of(rho, joint1) + detail::minf_of(rho, joint2);
    return make_result(CriterionId::MultipartiteBisep, value, 1.0 + min_overlap, tol);
}

}  // namespace lpsep::criteria
