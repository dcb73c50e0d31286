#pragma once

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lpsep/errors.hpp"

namespace lpsep::linalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;

// Induced infinity norm: max absolute row sum.
inline double inf_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

inline bool is_hermitian(const Matrix& m, double tol = kHermitianTol) {
    if (m.rows() != m.cols()) return false;
    return inf_norm(m - m.adjoint()) <= tol;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Matrix kron_all(const std::vector<Matrix>& factors) {
    if (factors.empty()) throw DimMismatch("kron_all: empty factor list");
    Matrix out = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
    return out;
}

struct EigenSystem {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // orthonormal columns, ordered to match
};

// Full spectral decomposition of a Hermitian matrix.  The input is checked
// against `tol` in the infinity norm before symmetrizing for the solver.
inline EigenSystem hermitian_eig(const Matrix& h, double tol = kHermitianTol) {
    if (h.rows() != h.cols())
        throw DimMismatch("hermitian_eig: matrix is " + std::to_string(h.rows()) + "x" +
                          std::to_string(h.cols()));
    if (inf_norm(h - h.adjoint()) > tol)
        throw NotHermitian("hermitian_eig: deviation from Hermiticity exceeds tolerance");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(Matrix(0.5 * (h + h.adjoint())));
    if (solver.info() != Eigen::Success)
        throw NoConvergence("hermitian_eig: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

enum class Side { A, B };

// Transpose one tensor factor of a bipartite operator on C^{dim_a} x C^{dim_b}.
inline Matrix partial_transpose(const Matrix& rho, int dim_a, int dim_b, Side side) {
    if (dim_a < 1 || dim_b < 1) throw InvalidDim("partial_transpose: dimensions must be positive");
    const Eigen::Index d = static_cast<Eigen::Index>(dim_a) * dim_b;
    if (rho.rows() != d || rho.cols() != d)
        throw DimMismatch("partial_transpose: operator does not match " + std::to_string(dim_a) +
                          "x" + std::to_string(dim_b) + " factors");
    Matrix out(d, d);
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j)
            for (int k = 0; k < dim_a; ++k)
                for (int l = 0; l < dim_b; ++l) {
                    const Complex v = rho(i * dim_b + j, k * dim_b + l);
                    if (side == Side::A)
                        out(k * dim_b + j, i * dim_b + l) = v;
                    else
                        out(i * dim_b + l, k * dim_b + j) = v;
                }
    return out;
}

}  // namespace lpsep::linalg
