#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "lpsep/quantum.hpp"
#include "lpsep/random.hpp"

using namespace lpsep;
using linalg::Complex;
using linalg::Matrix;
using linalg::Vector;
using quantum::BellState;

namespace {

Matrix ket_projector(const Vector& v) { return v * v.adjoint(); }

Vector basis4(int k) {
    Vector v = Vector::Zero(4);
    v(k) = 1.0;
    return v;
}

}  // namespace

TEST_CASE("product_state at the poles") {
    const auto rho00 = quantum::product_state({0.0, 0.0, 0.3, 1.2});
    REQUIRE(linalg::inf_norm(rho00.matrix - ket_projector(basis4(0))) < 1e-15);
    const double half_pi = std::numbers::pi / 2;
    const auto rho11 = quantum::product_state({half_pi, half_pi, 0.7, 2.4});
    REQUIRE(linalg::inf_norm(rho11.matrix - ket_projector(basis4(3))) < 1e-15);
}

TEST_CASE("product_state at alpha=beta=pi/4 with zero phases is an X eigenstate") {
    const auto rho = quantum::product_state({std::numbers::pi / 4, std::numbers::pi / 4, 0.0, 0.0});
    const auto x = quantum::resolve_observable(
        linalg::kron(quantum::pauli_x(), quantum::pauli_x()));
    const auto dist = quantum::outcome_distribution(rho, x);
    // outcomes ascend: index 1 is the +1 eigenspace
    REQUIRE(dist.labels[1] == Catch::Approx(1.0));
    REQUIRE(dist.probs[1] == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("product_state probabilities match the closed forms") {
    rng::Generator gen(3);
    const auto z = quantum::resolve_observable(
        linalg::kron(quantum::pauli_z(), quantum::pauli_z()));
    const auto x = quantum::resolve_observable(
        linalg::kron(quantum::pauli_x(), quantum::pauli_x()));
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = rng::random_product_params(gen);
        const auto rho = quantum::product_state(p);
        const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
        const double cb = std::cos(p.beta), sb = std::sin(p.beta);
        const double plus_z = ca * ca * cb * cb + sa * sa * sb * sb;
        const auto dz = quantum::outcome_distribution(rho, z);
        REQUIRE(dz.probs[1] == Catch::Approx(plus_z).margin(1e-12));
        const double plus_x =
            0.5 * (1.0 + std::cos(p.delta) * std::cos(p.gamma) * std::sin(2 * p.alpha) *
                             std::sin(2 * p.beta));
        const auto dx = quantum::outcome_distribution(rho, x);
        REQUIRE(dx.probs[1] == Catch::Approx(plus_x).margin(1e-12));
    }
}

TEST_CASE("pure_state normalizes and rejects the zero vector") {
    Vector v = Vector::Zero(4);
    v(1) = 2.0;
    const auto rho = quantum::pure_state(v, {2, 2});
    REQUIRE(rho.matrix(1, 1).real() == Catch::Approx(1.0));
    REQUIRE_THROWS_AS(quantum::pure_state(Vector::Zero(4), {2, 2}), InvalidState);
    REQUIRE_THROWS_AS(quantum::pure_state(v, {2, 3}), DimMismatch);
}

TEST_CASE("resolve_observable on Z yields the parity projectors") {
    const auto z = quantum::resolve_observable(
        linalg::kron(quantum::pauli_z(), quantum::pauli_z()));
    REQUIRE(z.outcomes.size() == 2);
    REQUIRE(z.outcomes[0].eigenvalue == Catch::Approx(-1.0));
    REQUIRE(z.outcomes[1].eigenvalue == Catch::Approx(1.0));
    REQUIRE(z.outcomes[0].multiplicity == 2);
    REQUIRE(z.outcomes[1].multiplicity == 2);
    const Matrix p_plus = ket_projector(basis4(0)) + ket_projector(basis4(3));
    const Matrix p_minus = ket_projector(basis4(1)) + ket_projector(basis4(2));
    REQUIRE(linalg::inf_norm(z.outcomes[1].projector - p_plus) < 1e-12);
    REQUIRE(linalg::inf_norm(z.outcomes[0].projector - p_minus) < 1e-12);
}

TEST_CASE("resolve_observable on X and Y matches the Bell-state projectors") {
    const auto x = quantum::resolve_observable(
        linalg::kron(quantum::pauli_x(), quantum::pauli_x()));
    const Matrix phi_p = ket_projector(quantum::bell_ket(BellState::PhiPlus));
    const Matrix phi_m = ket_projector(quantum::bell_ket(BellState::PhiMinus));
    const Matrix psi_p = ket_projector(quantum::bell_ket(BellState::PsiPlus));
    const Matrix psi_m = ket_projector(quantum::bell_ket(BellState::PsiMinus));
    REQUIRE(linalg::inf_norm(x.outcomes[1].projector - (phi_p + psi_p)) < 1e-12);
    REQUIRE(linalg::inf_norm(x.outcomes[0].projector - (phi_m + psi_m)) < 1e-12);
    const auto y = quantum::resolve_observable(
        linalg::kron(quantum::pauli_y(), quantum::pauli_y()));
    REQUIRE(linalg::inf_norm(y.outcomes[1].projector - (phi_m + psi_p)) < 1e-12);
    REQUIRE(linalg::inf_norm(y.outcomes[0].projector - (phi_p + psi_m)) < 1e-12);
}

TEST_CASE("resolve_observable on S_z yields three outcomes with P_+ = |00><00|") {
    const Matrix id2 = Matrix::Identity(2, 2);
    const Matrix sz =
        linalg::kron(quantum::pauli_z(), id2) + linalg::kron(id2, quantum::pauli_z());
    const auto obs = quantum::resolve_observable(sz);
    REQUIRE(obs.outcomes.size() == 3);
    REQUIRE(obs.outcomes[0].eigenvalue == Catch::Approx(-2.0));
    REQUIRE(obs.outcomes[1].eigenvalue == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(obs.outcomes[2].eigenvalue == Catch::Approx(2.0));
    REQUIRE(linalg::inf_norm(obs.outcomes[2].projector - ket_projector(basis4(0))) < 1e-12);
    REQUIRE(linalg::inf_norm(obs.outcomes[0].projector - ket_projector(basis4(3))) < 1e-12);
}

TEST_CASE("resolved projectors are complete and orthogonal") {
    rng::Generator gen(5);
    for (int trial = 0; trial < 10; ++trial) {
        const int dim = 2 + trial % 4;
        const auto obs = quantum::resolve_observable(rng::random_hermitian(gen, dim));
        Matrix sum = Matrix::Zero(dim, dim);
        int mult = 0;
        for (const auto& o : obs.outcomes) {
            sum += o.projector;
            mult += o.multiplicity;
            REQUIRE(linalg::inf_norm(o.projector * o.projector - o.projector) < 1e-12);
        }
        REQUIRE(mult == dim);
        REQUIRE(linalg::inf_norm(sum - Matrix::Identity(dim, dim)) < 1e-12);
        for (std::size_t i = 0; i < obs.outcomes.size(); ++i)
            for (std::size_t j = i + 1; j < obs.outcomes.size(); ++j)
                REQUIRE(linalg::inf_norm(obs.outcomes[i].projector * obs.outcomes[j].projector) <
                        1e-12);
    }
}

TEST_CASE("resolve_observable groups eigenvalues within the tolerance") {
    Matrix h = Matrix::Zero(2, 2);
    h(1, 1) = 5e-9;
    const auto merged = quantum::resolve_observable(h, 1e-8);
    REQUIRE(merged.outcomes.size() == 1);
    REQUIRE(merged.outcomes[0].multiplicity == 2);
    const auto split = quantum::resolve_observable(h, 1e-10);
    REQUIRE(split.outcomes.size() == 2);
}

TEST_CASE("outcome_distribution clamps, sums to one, and validates dims") {
    rng::Generator gen(9);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + trial % 4;
        const auto rho = rng::random_state(gen, {dim});
        const auto obs = quantum::resolve_observable(rng::random_hermitian(gen, dim));
        const auto dist = quantum::outcome_distribution(rho, obs);
        double total = 0.0;
        for (double p : dist.probs) {
            REQUIRE(p >= 0.0);
            REQUIRE(p <= 1.0);
            total += p;
        }
        REQUIRE(total == Catch::Approx(1.0).margin(1e-9));
    }
    const auto rho2 = rng::random_state(gen, {2});
    const auto obs3 = quantum::resolve_observable(rng::random_hermitian(gen, 3));
    REQUIRE_THROWS_AS(quantum::outcome_distribution(rho2, obs3), DimMismatch);
}

TEST_CASE("outcome_distribution flags broken inputs") {
    // Unit-trace but indefinite diagonal: the |1><1| outcome sees -0.5.
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    const quantum::DensityMatrix rho{bad, {2}};
    const auto z = quantum::resolve_observable(quantum::pauli_z());
    REQUIRE_THROWS_AS(quantum::outcome_distribution(rho, z), InvalidState);

    // An incomplete observable no longer sums to 1 on a mixed state.
    quantum::Observable partial;
    partial.matrix = quantum::pauli_z();
    partial.outcomes.push_back({1.0, (Matrix(2, 2) << 1, 0, 0, 0).finished(), 1});
    rng::Generator gen(21);
    const auto mixed = rng::random_state(gen, {2});
    REQUIRE_THROWS_AS(quantum::outcome_distribution(mixed, partial), InvalidState);
}

TEST_CASE("maximally mixed state is uniform under Z") {
    const quantum::DensityMatrix rho{Matrix::Identity(4, 4) / 4.0, {2, 2}};
    const auto z = quantum::resolve_observable(
        linalg::kron(quantum::pauli_z(), quantum::pauli_z()));
    const auto dist = quantum::outcome_distribution(rho, z);
    REQUIRE(dist.probs[0] == Catch::Approx(0.5));
    REQUIRE(dist.probs[1] == Catch::Approx(0.5));
}

TEST_CASE("max_overlap of sigma_z and sigma_x is 1/sqrt(2)") {
    const auto z = quantum::resolve_observable(quantum::pauli_z());
    const auto x = quantum::resolve_observable(quantum::pauli_x());
    REQUIRE(quantum::max_overlap(z, x) == Catch::Approx(1.0 / std::numbers::sqrt2).margin(1e-12));
}

TEST_CASE("max_overlap of the commuting pair Z, X is 1") {
    const auto z = quantum::resolve_observable(
        linalg::kron(quantum::pauli_z(), quantum::pauli_z()));
    const auto x = quantum::resolve_observable(
        linalg::kron(quantum::pauli_x(), quantum::pauli_x()));
    REQUIRE(quantum::max_overlap(z, x) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("computational and Fourier observables are complementary") {
    for (int dim = 2; dim <= 6; ++dim) {
        const auto comp = quantum::computational_observable(dim);
        const auto four = quantum::fourier_observable(dim);
        REQUIRE(static_cast<int>(comp.outcomes.size()) == dim);
        REQUIRE(static_cast<int>(four.outcomes.size()) == dim);
        REQUIRE(quantum::max_overlap(comp, four) ==
                Catch::Approx(1.0 / std::sqrt(double(dim))).margin(1e-12));
        REQUIRE(quantum::max_overlap(four, comp) ==
                Catch::Approx(1.0 / std::sqrt(double(dim))).margin(1e-12));
    }
    REQUIRE_THROWS_AS(quantum::computational_observable(1), InvalidDim);
    REQUIRE_THROWS_AS(quantum::fourier_observable(0), InvalidDim);
}

TEST_CASE("max_overlap is symmetric, one on itself, and dimension checked") {
    rng::Generator gen(31);
    const auto a = quantum::resolve_observable(rng::random_hermitian(gen, 4));
    const auto b = quantum::resolve_observable(rng::random_hermitian(gen, 4));
    REQUIRE(quantum::max_overlap(a, b) == Catch::Approx(quantum::max_overlap(b, a)).margin(1e-12));
    REQUIRE(quantum::max_overlap(a, a) == Catch::Approx(1.0).margin(1e-12));
    const auto c = quantum::resolve_observable(rng::random_hermitian(gen, 3));
    REQUIRE_THROWS_AS(quantum::max_overlap(a, c), DimMismatch);
    const double floor = 1.0 / 2.0;  // 1/sqrt(D) for D = 4
    REQUIRE(quantum::max_overlap(a, b) >= floor - 1e-12);
    REQUIRE(quantum::max_overlap(a, b) <= 1.0 + 1e-12);
}

TEST_CASE("validate_state names the violated invariant") {
    rng::Generator gen(33);
    REQUIRE_NOTHROW(quantum::validate_state(rng::random_state(gen, {2, 2})));

    quantum::DensityMatrix bad_trace{Matrix::Identity(4, 4), {2, 2}};
    REQUIRE_THROWS_WITH(quantum::validate_state(bad_trace),
                        Catch::Matchers::ContainsSubstring("trace"));

    Matrix indefinite = Matrix::Zero(4, 4);
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    quantum::DensityMatrix bad_eig{indefinite, {2, 2}};
    REQUIRE_THROWS_WITH(quantum::validate_state(bad_eig),
                        Catch::Matchers::ContainsSubstring("eigenvalue"));

    Matrix skew = Matrix::Identity(4, 4) / 4.0;
    skew(0, 1) = Complex(0.1, 0.0);
    quantum::DensityMatrix bad_herm{skew, {2, 2}};
    REQUIRE_THROWS_WITH(quantum::validate_state(bad_herm),
                        Catch::Matchers::ContainsSubstring("Hermitian"));

    quantum::DensityMatrix bad_dims{Matrix::Identity(4, 4) / 4.0, {2, 3}};
    REQUIRE_THROWS_WITH(quantum::validate_state(bad_dims),
                        Catch::Matchers::ContainsSubstring("subsystem"));
}
