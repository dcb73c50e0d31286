#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "lpsep/quantum.hpp"

namespace lpsep::rng {

// Seeded generator with its own Box-Muller transform so that sampled values
// depend only on the mt19937_64 stream, not on library-specific distributions.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}

    // Uniform in (0, 1]; the open lower end keeps log() finite.
    double uniform() { return 1.0 - static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double t = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    linalg::Complex complex_normal() { return {normal(), normal()}; }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline linalg::Matrix ginibre(Generator& g, int rows, int cols) {
    linalg::Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = g.complex_normal();
    return m;
}

// Full-rank random state GG†/Tr(GG†) on the given tensor factors.
inline quantum::DensityMatrix random_state(Generator& g, std::vector<int> dims) {
    const int d = static_cast<int>(quantum::dims_product(dims));
    const linalg::Matrix gm = ginibre(g, d, d);
    linalg::Matrix m = gm * gm.adjoint();
    m /= m.trace().real();
    return quantum::DensityMatrix{std::move(m), std::move(dims)};
}

inline quantum::ProductStateParams random_product_params(Generator& g) {
    return {g.uniform_in(0.0, std::numbers::pi / 2), g.uniform_in(0.0, std::numbers::pi / 2),
            g.uniform_in(0.0, 2 * std::numbers::pi), g.uniform_in(0.0, 2 * std::numbers::pi)};
}

inline linalg::Matrix random_hermitian(Generator& g, int dim) {
    const linalg::Matrix m = ginibre(g, dim, dim);
    return 0.5 * (m + m.adjoint());
}

// Hermitian observable with a fully non-degenerate spectrum: eigenvalue gaps
// below twice the grouping tolerance trigger a redraw.
inline quantum::Observable random_nondegenerate_observable(Generator& g, int dim) {
    for (;;) {
        const quantum::Observable obs = quantum::resolve_observable(random_hermitian(g, dim));
        if (static_cast<int>(obs.outcomes.size()) != dim) continue;
        bool separated = true;
        for (std::size_t k = 1; k < obs.outcomes.size(); ++k)
            if (obs.outcomes[k].eigenvalue - obs.outcomes[k - 1].eigenvalue <
                2 * quantum::kGroupTol)
                separated = false;
        if (separated) return obs;
    }
}

// Qubit observable with two distinct eigenvalues bounded away from zero.
inline quantum::Observable random_two_outcome_observable(Generator& g) {
    const auto draw = [&g] {
        const double magnitude = g.uniform_in(0.2, 2.0);
        return g.uniform() < 0.5 ? -magnitude : magnitude;
    };
    double l1 = draw(), l2 = draw();
    while (std::abs(l1 - l2) < 1e-3) l2 = draw();
    const linalg::EigenSystem basis = linalg::hermitian_eig(random_hermitian(g, 2));
    const linalg::Matrix v = basis.eigenvectors;
    linalg::Matrix h = l1 * (v.col(0) * v.col(0).adjoint()) + l2 * (v.col(1) * v.col(1).adjoint());
    return quantum::resolve_observable(h);
}

}  // namespace lpsep::rng
