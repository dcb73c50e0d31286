#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lpsep/criteria.hpp"
#include "lpsep/measures.hpp"
#include "lpsep/oracle.hpp"
#include "lpsep/quantum.hpp"

namespace lpsep::io {

using Json = nlohmann::ordered_json;

// StateFile layout: {"dims": [d1, d2, ...], "matrix": [[[re, im], ...], ...]}
// with the matrix row-major and every entry an explicit [re, im] pair.

inline quantum::DensityMatrix state_from_json(const Json& doc,
                                              double tol = quantum::kStateTol) {
    std::vector<int> dims;
    linalg::Matrix m;
    try {
        dims = doc.at("dims").get<std::vector<int>>();
        const Json& rows = doc.at("matrix");
        if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a non-empty array");
        const std::size_t n = rows.size();
        m.resize(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const Json& row = rows.at(i);
            if (!row.is_array() || row.size() != n)
                throw ParseError("matrix row " + std::to_string(i) + " is not length " +
                                 std::to_string(n));
            for (std::size_t j = 0; j < n; ++j) {
                const Json& entry = row.at(j);
                if (!entry.is_array() || entry.size() != 2)
                    throw ParseError("matrix entries must be [re, im] pairs");
                m(i, j) = linalg::Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
            }
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("malformed state file: ") + e.what());
    }
    quantum::DensityMatrix rho{std::move(m), std::move(dims)};
    quantum::validate_state(rho, tol);
    return rho;
}

inline Json state_to_json(const quantum::DensityMatrix& rho) {
    Json doc;
    doc["dims"] = rho.subsystem_dims;
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < rho.dim(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < rho.dim(); ++j)
            row.push_back({rho.matrix(i, j).real(), rho.matrix(i, j).imag()});
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc;
}

inline quantum::DensityMatrix load_state(const std::string& path,
                                         double tol = quantum::kStateTol) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open '" + path + "' for reading");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return state_from_json(doc, tol);
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IOError("write to '" + path + "' failed");
}

inline void save_state(const quantum::DensityMatrix& rho, const std::string& path) {
    write_text_file(path, state_to_json(rho).dump(2) + "\n");
}

struct EntropyRow {
    std::string observable;
    double shannon;
    double renyi2;
    double tsallis2;
};

struct Report {
    std::vector<int> dims;
    double decision_tol;
    std::vector<criteria::CriterionResult> rows;
    std::optional<criteria::WitnessValues> witnesses;  // two-qubit states only
    std::optional<double> ppt_min;                     // bipartite states only
    std::vector<EntropyRow> entropies;
};

namespace detail {

inline EntropyRow entropy_row(const std::string& name, const quantum::DensityMatrix& rho,
                              const quantum::Observable& obs) {
    const auto dist = quantum::outcome_distribution(rho, obs);
    return {name, measures::shannon(dist), measures::renyi(dist, 2.0),
            measures::tsallis(dist, 2.0)};
}

}  // namespace detail

// Two-qubit states get the four conditions plus witnesses; other bipartite
// states get the complementary-pair bound; three or more parties get the
// multipartite biseparability bound.  Entropies use q = 2 for Rényi/Tsallis.
inline Report build_report(const quantum::DensityMatrix& rho,
                           double decision_tol = criteria::kDecisionTol) {
    Report rep;
    rep.dims = rho.subsystem_dims;
    rep.decision_tol = decision_tol;
    const auto& dims = rho.subsystem_dims;
    if (dims == std::vector<int>{2, 2}) {
        rep.rows = {criteria::sep1(rho, decision_tol), criteria::sep2(rho, decision_tol),
                    criteria::sep3(rho, decision_tol),
                    criteria::sep4(rho, {1.0, 2.0, 3.0, 4.0}, decision_tol)};
        rep.witnesses = criteria::witness_values(rho);
        rep.ppt_min = oracle::ppt_min_eigenvalue(rho);
        const auto& o = criteria::two_qubit_observables();
        rep.entropies = {detail::entropy_row("X", rho, o.X),   detail::entropy_row("Y", rho, o.Y),
                         detail::entropy_row("Z", rho, o.Z),   detail::entropy_row("Sx", rho, o.Sx),
                         detail::entropy_row("Sy", rho, o.Sy), detail::entropy_row("Sz", rho, o.Sz),
                         detail::entropy_row("B", rho, o.B)};
    } else {
        std::vector<quantum::Observable> comp, four;
        std::vector<linalg::Matrix> comp_m, four_m;
        for (int d : dims) {
            comp.push_back(quantum::computational_observable(d));
            four.push_back(quantum::fourier_observable(d));
            comp_m.push_back(comp.back().matrix);
            four_m.push_back(four.back().matrix);
        }
        if (dims.size() == 2) {
            rep.rows = {criteria::gl_bound(rho, comp[0], comp[1], four[0], four[1], decision_tol,
                                           criteria::CriterionId::QuditComplementary)};
            rep.ppt_min = oracle::ppt_min_eigenvalue(rho);
        } else {
            rep.rows = {criteria::multipartite_bisep_value(rho, comp, four, decision_tol)};
        }
        rep.entropies = {
            detail::entropy_row("computational_product", rho,
                                quantum::resolve_observable(linalg::kron_all(comp_m))),
            detail::entropy_row("fourier_product", rho,
                                quantum::resolve_observable(linalg::kron_all(four_m)))};
    }
    return rep;
}

inline std::string format_sig(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

inline Json report_to_json(const Report& rep) {
    Json j;
    j["dims"] = rep.dims;
    j["decision_tolerance"] = rep.decision_tol;
    Json rows = Json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"criterion", criteria::criterion_name(r.criterion_id)},
                        {"value", r.value},
                        {"bound", r.bound},
                        {"verdict", criteria::verdict_name(r.verdict)}});
    j["criteria"] = std::move(rows);
    if (rep.witnesses) {
        const auto& w = rep.witnesses->values;
        j["witnesses"] = {{"phi_plus", w[0]}, {"phi_minus", w[1]}, {"psi_plus", w[2]},
                          {"psi_minus", w[3]}};
    } else {
        j["witnesses"] = nullptr;
    }
    j["ppt_min_eigenvalue"] = rep.ppt_min ? Json(*rep.ppt_min) : Json(nullptr);
    Json ent = Json::array();
    for (const auto& e : rep.entropies)
        ent.push_back({{"observable", e.observable},
                       {"shannon", e.shannon},
                       {"renyi_2", e.renyi2},
                       {"tsallis_2", e.tsallis2}});
    j["entropies"] = std::move(ent);
    return j;
}

inline std::string report_table(const Report& rep) {
    std::ostringstream os;
    char buf[160];
    os << "dims:";
    for (int d : rep.dims) os << ' ' << d;
    os << "\n\n";
    os << "criterion             value          bound  verdict\n";
    for (const auto& r : rep.rows) {
        std::snprintf(buf, sizeof(buf), "%-20s %10.6f %14.6f  %s\n",
                      criteria::criterion_name(r.criterion_id), r.value, r.bound,
                      criteria::verdict_name(r.verdict));
        os << buf;
    }
    if (rep.witnesses) {
        os << "\nwitness expectation values (negative certifies entanglement)\n";
        static constexpr const char* names[4] = {"phi_plus", "phi_minus", "psi_plus",
                                                 "psi_minus"};
        for (int s = 0; s < 4; ++s) {
            std::snprintf(buf, sizeof(buf), "  W[%-9s] %12.6f\n", names[s],
                          rep.witnesses->values[s]);
            os << buf;
        }
    }
    if (rep.ppt_min) {
        std::snprintf(buf, sizeof(buf), "\nppt min eigenvalue %12.6f (%s)\n", *rep.ppt_min,
                      *rep.ppt_min < 0.0 ? "NPT: entangled" : "PPT");
        os << buf;
    }
    os << "\nobservable              shannon        renyi_2      tsallis_2\n";
    for (const auto& e : rep.entropies) {
        std::snprintf(buf, sizeof(buf), "%-21s %9.6f %14.6f %14.6f\n", e.observable.c_str(),
                      e.shannon, e.renyi2, e.tsallis2);
        os << buf;
    }
    return os.str();
}

struct SweepRow {
    std::string family;
    double alpha;
    double beta;
    std::string criterion;
    std::optional<double> threshold;  // empty when the criterion never detects
    double known_boundary;
    std::optional<double> ppt_boundary;
};

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "family,alpha,beta,criterion,threshold,known_boundary,ppt_boundary\n";
    for (const auto& r : rows) {
        os << r.family << ',' << format_sig(r.alpha) << ',' << format_sig(r.beta) << ','
           << r.criterion << ',' << (r.threshold ? format_sig(*r.threshold) : "NA") << ','
           << format_sig(r.known_boundary) << ','
           << (r.ppt_boundary ? format_sig(*r.ppt_boundary) : "NA") << '\n';
    }
    return os.str();
}

}  // namespace lpsep::io
