#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "lpsep/errors.hpp"
#include "lpsep/quantum.hpp"

namespace lpsep::measures {

namespace detail {

inline double max_prob(const std::vector<double>& probs) {
    if (probs.empty()) throw InvalidParams("empty probability list");
    double best = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw InvalidParams("negative probability");
        best = std::max(best, p);
    }
    if (best <= 0.0) throw InvalidParams("all-zero probability list");
    return best;
}

}  // namespace detail

// M_r(P) = (Σ_n p_n^{1+r})^{1/r} for r > −1, r ≠ 0.  Evaluated in log space so
// that extreme orders (|r| large, r near 0) neither overflow nor collapse.
inline double m_r(const std::vector<double>& probs, double r) {
    if (!(r > -1.0) || r == 0.0) throw InvalidOrder("m_r: requires r > -1 and r != 0");
    const double pmax = detail::max_prob(probs);
    const double e = 1.0 + r;
    const double log_pmax = std::log(pmax);
    double scaled = 0.0;  // Σ (p/pmax)^{1+r}, every term in (0, 1]
    for (double p : probs)
        if (p > 0.0) scaled += std::exp(e * (std::log(p) - log_pmax));
    return std::exp((e * log_pmax + std::log(scaled)) / r);
}

// M_∞(P) = max_n p_n, the r → ∞ limit of M_r.
inline double m_inf(const std::vector<double>& probs) { return detail::max_prob(probs); }

// Shannon entropy with the 0·ln 0 := 0 convention.
inline double shannon(const std::vector<double>& probs) {
    double h = 0.0;
    for (double p : probs)
        if (p > 0.0) h -= p * std::log(p);
    return h;
}

// Rényi entropy H_q = ln(Σ p^q)/(1−q); the q → 1 limit is taken directly.
inline double renyi(const std::vector<double>& probs, double q) {
    if (q <= 0.0) throw InvalidOrder("renyi: requires q > 0");
    if (q == 1.0) return shannon(probs);
    const double pmax = detail::max_prob(probs);
    const double log_pmax = std::log(pmax);
    double scaled = 0.0;
    for (double p : probs)
        if (p > 0.0) scaled += std::exp(q * (std::log(p) - log_pmax));
    return (q * log_pmax + std::log(scaled)) / (1.0 - q);
}

// Tsallis entropy H_q = (Σ p^q − 1)/(1−q); the q → 1 limit is taken directly.
inline double tsallis(const std::vector<double>& probs, double q) {
    if (q <= 0.0) throw InvalidOrder("tsallis: requires q > 0");
    if (q == 1.0) return shannon(probs);
    detail::max_prob(probs);
    double sum = 0.0;
    for (double p : probs)
        if (p > 0.0) sum += std::pow(p, q);
    return (sum - 1.0) / (1.0 - q);
}

// True iff P majorizes Q: every partial sum of P sorted descending dominates
// the matching partial sum of Q.  Shorter lists are padded with zeros.
inline bool majorizes(const std::vector<double>& p, const std::vector<double>& q,
                      double slack = 1e-12) {
    std::vector<double> ps(p), qs(q);
    const std::size_t n = std::max(ps.size(), qs.size());
    ps.resize(n, 0.0);
    qs.resize(n, 0.0);
    std::sort(ps.begin(), ps.end(), std::greater<>());
    std::sort(qs.begin(), qs.end(), std::greater<>());
    double cp = 0.0, cq = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        cp += ps[k];
        cq += qs[k];
        if (cp < cq - slack) return false;
    }
    return true;
}

inline double m_r(const quantum::ProbabilityDistribution& p, double r) { return m_r(p.probs, r); }
inline double m_inf(const quantum::ProbabilityDistribution& p) { return m_inf(p.probs); }
inline double shannon(const quantum::ProbabilityDistribution& p) { return shannon(p.probs); }
inline double renyi(const quantum::ProbabilityDistribution& p, double q) {
    return renyi(p.probs, q);
}
inline double tsallis(const quantum::ProbabilityDistribution& p, double q) {
    return tsallis(p.probs, q);
}
inline bool majorizes(const quantum::ProbabilityDistribution& p,
                      const quantum::ProbabilityDistribution& q, double slack = 1e-12) {
    return majorizes(p.probs, q.probs, slack);
}

}  // namespace lpsep::measures
