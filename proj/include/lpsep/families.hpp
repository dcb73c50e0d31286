#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lpsep/quantum.hpp"

namespace lpsep::families {

enum class Family { Werner, Gisin, Rho0 };

// Mixing parameter p plus the Gisin angles; non-Gisin families ignore alpha/beta.
struct FamilyParams {
    Family family = Family::Werner;
    double p = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

enum class ObservableSet { XZ, XYZ, Spin, Bell };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Werner: return "werner";
        case Family::Gisin: return "gisin";
        case Family::Rho0: return "rho0";
    }
    return "";
}

inline Family family_from_string(const std::string& name) {
    if (name == "werner") return Family::Werner;
    if (name == "gisin") return Family::Gisin;
    if (name == "rho0") return Family::Rho0;
    throw InvalidFamily("unknown family '" + name + "' (expected werner, gisin, or rho0)");
}

inline const char* observable_set_name(ObservableSet s) {
    switch (s) {
        case ObservableSet::XZ: return "XZ";
        case ObservableSet::XYZ: return "XYZ";
        case ObservableSet::Spin: return "Spin";
        case ObservableSet::Bell: return "Bell";
    }
    return "";
}

inline void validate(const FamilyParams& fp) {
    if (!(fp.p >= 0.0 && fp.p <= 1.0))
        throw InvalidParams("family parameter p must lie in [0, 1]");
    if (fp.family == Family::Gisin) {
        if (!(fp.alpha >= 0.0 && fp.alpha <= std::numbers::pi / 2))
            throw InvalidParams("Gisin alpha must lie in [0, pi/2]");
        if (!(fp.beta >= 0.0 && fp.beta < 2 * std::numbers::pi))
            throw InvalidParams("Gisin beta must lie in [0, 2*pi)");
    }
}

inline quantum::DensityMatrix build(const FamilyParams& fp) {
    validate(fp);
    using linalg::Matrix;
    using linalg::Vector;
    Matrix m;
    switch (fp.family) {
        case Family::Werner: {
            const Vector psi = quantum::bell_ket(quantum::BellState::PsiMinus);
            m = (1.0 - fp.p) / 4.0 * Matrix::Identity(4, 4) +
                fp.p * (psi * psi.adjoint());
            break;
        }
        case Family::Gisin: {
            Vector chi = Vector::Zero(4);
            chi(1) = std::cos(fp.alpha);
            chi(2) = std::polar(std::sin(fp.alpha), fp.beta);
            m = fp.p * (chi * chi.adjoint());
            m(0, 0) += (1.0 - fp.p) / 2.0;
            m(3, 3) += (1.0 - fp.p) / 2.0;
            break;
        }
        case Family::Rho0: {
            const Vector psi = quantum::bell_ket(quantum::BellState::PsiMinus);
            m = fp.p * (psi * psi.adjoint());
            m(0, 0) += 1.0 - fp.p;
            break;
        }
    }
    return quantum::DensityMatrix{std::move(m), {2, 2}};
}

// Closed-form value of the summed M_∞ over the named observable set, used as
// an oracle against direct evaluation on build(params).
inline double closed_form_minf(const FamilyParams& fp, ObservableSet set) {
    validate(fp);
    const double p = fp.p;
    switch (fp.family) {
        case Family::Werner:
            switch (set) {
                case ObservableSet::XZ: return 1.0 + p;
                case ObservableSet::XYZ: return 3.0 * (1.0 + p) / 2.0;
                case ObservableSet::Spin: return 3.0 * (1.0 + p) / 2.0;
                case ObservableSet::Bell: return (1.0 + 3.0 * p) / 4.0;
            }
            break;
        case Family::Gisin: {
            // The pair products see sin2α|cosβ|; the total-spin components keep
            // the sign of cosβ.
            const double signed_c = std::sin(2.0 * fp.alpha) * std::cos(fp.beta);
            const double abs_c = std::abs(signed_c);
            switch (set) {
                case ObservableSet::XZ:
                    return std::max(p, 1.0 - p) + (1.0 + p * abs_c) / 2.0;
                case ObservableSet::XYZ:
                    return std::max(p, 1.0 - p) + 1.0 + p * abs_c;
                case ObservableSet::Spin:
                    return std::max(p, (1.0 - p) / 2.0) +
                           2.0 * std::max((1.0 - p * signed_c) / 2.0,
                                          (1.0 + p * signed_c) / 4.0);
                case ObservableSet::Bell:
                    return std::max((1.0 - p) / 2.0, p * (1.0 + abs_c) / 2.0);
            }
            break;
        }
        case Family::Rho0:
            switch (set) {
                case ObservableSet::XZ: return std::max(p, 1.0 - p) + (1.0 + p) / 2.0;
                case ObservableSet::XYZ: return std::max(p, 1.0 - p) + 1.0 + p;
                case ObservableSet::Spin: return std::max(p, 1.0 - p) + 1.0 + p;
                case ObservableSet::Bell: return std::max(p, (1.0 - p) / 2.0);
            }
            break;
    }
    throw InvalidParams("closed_form_minf: unreachable family/set combination");
}

// Exact separability boundary in p from the literature (PPT boundary for 2×2).
inline double known_separability_boundary(const FamilyParams& fp) {
    switch (fp.family) {
        case Family::Werner: return 1.0 / 3.0;
        case Family::Gisin: return 1.0 / (1.0 + std::sin(2.0 * fp.alpha));
        case Family::Rho0: return 0.0;
    }
    throw InvalidParams("known_separability_boundary: unknown family");
}

}  // namespace lpsep::families
