#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lpsep/linalg.hpp"

namespace lpsep::quantum {

using linalg::Complex;
using linalg::Matrix;
using linalg::Vector;

inline constexpr double kStateTol = 1e-9;
inline constexpr double kGroupTol = 1e-8;
// More negative than this and a "probability" is treated as a broken state.
inline constexpr double kProbFloor = -1e-9;

// Density operator together with the tensor factorization it lives on.
struct DensityMatrix {
    Matrix matrix;
    std::vector<int> subsystem_dims;

    Eigen::Index dim() const { return matrix.rows(); }
};

inline Eigen::Index dims_product(const std::vector<int>& dims) {
    if (dims.empty()) throw InvalidDim("subsystem_dims must be non-empty");
    Eigen::Index n = 1;
    for (int d : dims) {
        if (d < 2) throw InvalidDim("subsystem dimension " + std::to_string(d) + " < 2");
        n *= d;
    }
    return n;
}

// Checks Hermiticity, unit trace, positivity, and the dims product, throwing
// InvalidState naming the violated invariant.
inline void validate_state(const DensityMatrix& rho, double tol = kStateTol) {
    if (rho.matrix.rows() != rho.matrix.cols()) throw InvalidState("density matrix not square");
    if (dims_product(rho.subsystem_dims) != rho.dim())
        throw InvalidState("subsystem_dims product does not match matrix dimension");
    if (linalg::inf_norm(rho.matrix - rho.matrix.adjoint()) > tol)
        throw InvalidState("density matrix not Hermitian within tolerance");
    if (std::abs(rho.matrix.trace().real() - 1.0) > tol ||
        std::abs(rho.matrix.trace().imag()) > tol)
        throw InvalidState("density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(Matrix(0.5 * (rho.matrix + rho.matrix.adjoint())),
                                                 Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol)
        throw InvalidState("density matrix has a negative eigenvalue beyond tolerance");
}

inline DensityMatrix pure_state(const Vector& psi, std::vector<int> dims) {
    if (dims_product(dims) != psi.size())
        throw DimMismatch("pure_state: vector length does not match subsystem dims");
    const double norm = psi.norm();
    if (norm <= 0.0) throw InvalidState("pure_state: zero vector");
    Vector unit = psi / norm;
    return DensityMatrix{unit * unit.adjoint(), std::move(dims)};
}

// (α, β, δ, γ) for |φ⟩_A ⊗ |φ⟩_B with
// |φ⟩_A = cos α |0⟩ + e^{iδ} sin α |1⟩,  |φ⟩_B = cos β |0⟩ + e^{iγ} sin β |1⟩.
struct ProductStateParams {
    double alpha = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double gamma = 0.0;
};

inline Vector qubit_ket(double angle, double phase) {
    Vector v(2);
    v << Complex(std::cos(angle), 0.0), std::polar(std::sin(angle), phase);
    return v;
}

inline Vector product_ket(const ProductStateParams& p) {
    const Vector a = qubit_ket(p.alpha, p.delta);
    const Vector b = qubit_ket(p.beta, p.gamma);
    Vector out(4);
    out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return out;
}

inline DensityMatrix product_state(const ProductStateParams& p) {
    return pure_state(product_ket(p), {2, 2});
}

struct Outcome {
    double eigenvalue;
    Matrix projector;
    int multiplicity;
};

// Hermitian operator resolved into distinct eigenvalues with eigenspace projectors.
struct Observable {
    Matrix matrix;
    std::vector<Outcome> outcomes;  // ascending eigenvalue

    Eigen::Index dim() const { return matrix.rows(); }
};

// Groups eigenvalues closer than group_tol into one eigenspace and sums the
// corresponding outer products into a single projector.
inline Observable resolve_observable(const Matrix& h, double group_tol = kGroupTol) {
    const linalg::EigenSystem es = linalg::hermitian_eig(h);
    Observable obs;
    obs.matrix = h;
    const Eigen::Index n = es.eigenvalues.size();
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index stop = start + 1;
        while (stop < n && es.eigenvalues(stop) - es.eigenvalues(stop - 1) <= group_tol) ++stop;
        const Eigen::Index len = stop - start;
        const Matrix block = es.eigenvectors.middleCols(start, len);
        obs.outcomes.push_back(Outcome{es.eigenvalues.segment(start, len).mean(),
                                       block * block.adjoint(), static_cast<int>(len)});
        start = stop;
    }
    return obs;
}

struct ProbabilityDistribution {
    std::vector<double> probs;
    std::vector<double> labels;  // outcome eigenvalues, same order
};

// p_n = Tr(P_n ρ), clamped to [0, 1].  A probability below the floor, or a total
// departing from 1, signals an invalid state or incomplete observable.
inline ProbabilityDistribution outcome_distribution(const DensityMatrix& rho,
                                                    const Observable& obs) {
    if (rho.dim() != obs.dim())
        throw DimMismatch("outcome_distribution: state dim " + std::to_string(rho.dim()) +
                          " vs observable dim " + std::to_string(obs.dim()));
    ProbabilityDistribution dist;
    dist.probs.reserve(obs.outcomes.size());
    dist.labels.reserve(obs.outcomes.size());
    double total = 0.0;
    for (const Outcome& o : obs.outcomes) {
        const double p = (o.projector * rho.matrix).trace().real();
        if (p < kProbFloor)
            throw InvalidState("outcome probability " + std::to_string(p) + " below floor");
        total += p;
        dist.probs.push_back(std::clamp(p, 0.0, 1.0));
        dist.labels.push_back(o.eigenvalue);
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw InvalidState("outcome probabilities sum to " + std::to_string(total));
    return dist;
}

// Maximal overlap c(X,Y): max over eigenspace pairs of the spectral norm
// ‖P_n(X) P_m(Y)‖.  Basis independent, so degenerate eigenspaces are handled
// without picking eigenvectors; for non-degenerate spectra this is
// max_{i,j} |⟨x_i|y_j⟩|.
inline double max_overlap(const Observable& x, const Observable& y) {
    if (x.dim() != y.dim()) throw DimMismatch("max_overlap: observable dims differ");
    double best = 0.0;
    for (const Outcome& ox : x.outcomes)
        for (const Outcome& oy : y.outcomes) {
            // ‖PQ‖² = λ_max(PQP) because Q is idempotent.
            const Matrix pqp = ox.projector * oy.projector * ox.projector;
            Eigen::SelfAdjointEigenSolver<Matrix> solver(Matrix(0.5 * (pqp + pqp.adjoint())),
                                                         Eigen::EigenvaluesOnly);
            best = std::max(best, solver.eigenvalues().maxCoeff());
        }
    return std::min(std::sqrt(std::max(best, 0.0)), 1.0);
}

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Matrix pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

inline Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline Vector bell_ket(BellState s) {
    const double r = 1.0 / std::numbers::sqrt2;
    Vector v = Vector::Zero(4);
    switch (s) {
        case BellState::PhiPlus:  v(0) = r;  v(3) = r;  break;
        case BellState::PhiMinus: v(0) = r;  v(3) = -r; break;
        case BellState::PsiPlus:  v(1) = r;  v(2) = r;  break;
        case BellState::PsiMinus: v(1) = r;  v(2) = -r; break;
    }
    return v;
}

inline const char* bell_name(BellState s) {
    switch (s) {
        case BellState::PhiPlus:  return "phi_plus";
        case BellState::PhiMinus: return "phi_minus";
        case BellState::PsiPlus:  return "psi_plus";
        case BellState::PsiMinus: return "psi_minus";
    }
    return "";
}

// Non-degenerate reference observable in the computational basis.  Qubits get
// σz; higher dimensions get diag(1..D) so every eigenvalue is nonzero.
inline Observable computational_observable(int dim) {
    if (dim < 2) throw InvalidDim("computational_observable: dim must be >= 2");
    Matrix h = Matrix::Zero(dim, dim);
    if (dim == 2) {
        h(0, 0) = 1.0;
        h(1, 1) = -1.0;
    } else {
        for (int k = 0; k < dim; ++k) h(k, k) = k + 1.0;
    }
    return resolve_observable(h);
}

// The computational observable conjugated by the discrete Fourier transform;
// together the two form a complementary pair with c = 1/√D.
inline Observable fourier_observable(int dim) {
    if (dim < 2) throw InvalidDim("fourier_observable: dim must be >= 2");
    Matrix f(dim, dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
            f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * j * k / dim);
    const Matrix h = f * computational_observable(dim).matrix * f.adjoint();
    return resolve_observable(h);
}

}  // namespace lpsep::quantum
