#pragma once

#include <cmath>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include "polyps/conditioning.hpp"
#include "polyps/numkernel.hpp"
#include "polyps/structures.hpp"
#include "polyps/types.hpp"

namespace polyps {

/// Estimate of the distance from defectivity plus the most sensitive
/// eigenvalue pair(s). Indices are 1-based positions in the input sequence.
struct DefectivityReport {
    double epsilon = 0.0;
    std::vector<std::pair<int, int>> pairs;
    bool structured = false;
};

/// min over distinct pairs of |lambda_i - lambda_j| / (kappa_i + kappa_j);
/// all minimizers within 1e-9 relative tolerance are reported.
inline DefectivityReport defectivity_estimate(const std::vector<Complex>& eigs,
                                              const std::vector<double>& kappas,
                                              bool structured = false) {
    if (eigs.size() != kappas.size())
        throw DimensionMismatch("eigenvalue and condition-number sequences disagree in length");
    const std::size_t n = eigs.size();
    if (n < 2) throw DegenerateSpectrum();
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> ratio(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double r = std::abs(eigs[i] - eigs[j]) / (kappas[i] + kappas[j]);
            ratio[i][j] = r;
            best = std::min(best, r);
        }
    }
    DefectivityReport rep;
    rep.epsilon = best;
    rep.structured = structured;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (ratio[i][j] <= best * (1.0 + 1e-9))
                rep.pairs.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return rep;
}

namespace detail {

template <typename KappaFn>
DefectivityReport estimate_from_triplets(const std::vector<EigenTriplet>& trips, KappaFn&& kfn,
                                         bool structured) {
    std::vector<Complex> eigs;
    std::vector<double> kappas;
    std::vector<int> canonical; // 1-based index of each simple eigenvalue
    for (std::size_t i = 0; i < trips.size(); ++i) {
        if (!trips[i].simple) continue;
        eigs.push_back(trips[i].lambda);
        kappas.push_back(kfn(trips[i]));
        canonical.push_back(static_cast<int>(i) + 1);
    }
    if (eigs.size() < 2) throw DegenerateSpectrum("fewer than two simple eigenvalues");
    DefectivityReport rep = defectivity_estimate(eigs, kappas, structured);
    for (auto& [i, j] : rep.pairs) {
        i = canonical[static_cast<std::size_t>(i) - 1];
        j = canonical[static_cast<std::size_t>(j) - 1];
    }
    return rep;
}

} // namespace detail

/// Estimate over the simple eigenvalues of P; reported indices are
/// canonical-order positions.
inline DefectivityReport unstructured_defectivity_estimate(const MatrixPolynomial& P,
                                                           const Weights& w) {
    const auto trips = eigen_triplets(P);
    return detail::estimate_from_triplets(
        trips, [&](const EigenTriplet& t) { return kappa(P, w, t); }, false);
}

inline DefectivityReport structured_defectivity_estimate(const MatrixPolynomial& P, const Weights& w,
                                                         const StructureSet& S) {
    const auto trips = eigen_triplets(P);
    return detail::estimate_from_triplets(
        trips, [&](const EigenTriplet& t) { return kappa_structured(P, w, S, t); }, true);
}

/// Largest epsilon for which a first-order analysis keeps the origin out
/// of the (structured) omega_m*eps-pseudospectrum of A_m:
/// min_i |lambda_i| / (kappa_i * omega_m). +inf when omega_m = 0.
inline double boundedness_threshold(const ComplexMatrix& Am, double omega_m,
                                    const std::optional<StructureClass>& S = std::nullopt) {
    if (Am.rows() != Am.cols()) throw DimensionMismatch("leading coefficient must be square");
    if (omega_m == 0.0) return std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(Am.rows());
    // Triplets of A_m via the pencil lambda*I - A_m.
    MatrixPolynomial pencil({-Am, ComplexMatrix::Identity(n, n)});
    const auto trips = eigen_triplets(pencil);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : trips) {
        if (std::abs(t.lambda) == 0.0) throw SingularLeadingCoefficient();
        const double k = S ? kappa_single_structured(Am, *S, t.lambda, t.x, t.y)
                           : kappa_single(Am, t.lambda, t.x, t.y);
        best = std::min(best, std::abs(t.lambda) / (k * omega_m));
    }
    return best;
}

inline void write_report(const DefectivityReport& rep, std::ostream& os) {
    os.precision(17);
    os << "epsilon=" << rep.epsilon << "; pairs=";
    for (std::size_t k = 0; k < rep.pairs.size(); ++k) {
        if (k) os << ',';
        os << '(' << rep.pairs[k].first << ',' << rep.pairs[k].second << ')';
    }
    os << "; structured=" << (rep.structured ? "true" : "false") << '\n';
}

} // namespace polyps
