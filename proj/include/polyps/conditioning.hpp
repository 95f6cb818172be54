#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "polyps/numkernel.hpp"
#include "polyps/structures.hpp"
#include "polyps/types.hpp"

namespace polyps {

/// omega(t) = sum_j omega_j t^j.
inline double weight_poly(const Weights& w, double t) {
    double acc = 0.0;
    for (std::size_t j = w.size(); j-- > 0;) acc = acc * t + w[j];
    return acc;
}

/// omega^S(t) = sum_j ||y x^H|_{S_j}||_F omega_j t^j for unit x, y.
inline double structured_weight_poly(const Weights& w, const StructureSet& S,
                                     const ComplexVector& x, const ComplexVector& y, double t) {
    if (S.size() != w.size()) throw DimensionMismatch("structure set and weights disagree in length");
    const ComplexMatrix G = y * x.adjoint();
    double acc = 0.0;
    double tj = 1.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] > 0.0) acc += projection_norm(G, S[j]) * w[j] * tj;
        tj *= t;
    }
    return acc;
}

namespace detail {

inline Complex y_dPdx(const MatrixPolynomial& P, const EigenTriplet& trip, double* dnorm = nullptr) {
    const ComplexMatrix Pp = eval_derivative(P, trip.lambda);
    if (dnorm) *dnorm = Pp.norm();
    return trip.y.dot(Pp * trip.x);
}

} // namespace detail

/// kappa(lambda) = omega(|lambda|) / |y^H P'(lambda) x|.
inline double kappa(const MatrixPolynomial& P, const Weights& w, const EigenTriplet& trip) {
    double dnorm = 0.0;
    const Complex d = detail::y_dPdx(P, trip, &dnorm);
    if (!trip.simple || !(std::abs(d) > 1e-12 * dnorm))
        throw NotSimple("condition number undefined: eigenvalue is not simple");
    return weight_poly(w, std::abs(trip.lambda)) / std::abs(d);
}

/// kappa^S(lambda) = omega^S(|lambda|) / |y^H P'(lambda) x|.
inline double kappa_structured(const MatrixPolynomial& P, const Weights& w, const StructureSet& S,
                               const EigenTriplet& trip) {
    double dnorm = 0.0;
    const Complex d = detail::y_dPdx(P, trip, &dnorm);
    if (!trip.simple || !(std::abs(d) > 1e-12 * dnorm))
        throw NotSimple("structured condition number undefined: eigenvalue is not simple");
    return structured_weight_poly(w, S, trip.x, trip.y, std::abs(trip.lambda)) / std::abs(d);
}

/// Single-matrix eigenvalue condition number 1/|y^H x|.
inline double kappa_single(const ComplexMatrix&, Complex, const ComplexVector& x,
                           const ComplexVector& y) {
    const double yx = std::abs(y.dot(x));
    if (!(yx > 1e-14)) throw NotSimple("left and right eigenvectors are numerically orthogonal");
    return 1.0 / yx;
}

/// Structured single-matrix condition number ||y x^H|_S||_F / |y^H x|.
inline double kappa_single_structured(const ComplexMatrix&, const StructureClass& S, Complex,
                                      const ComplexVector& x, const ComplexVector& y) {
    const double yx = std::abs(y.dot(x));
    if (!(yx > 1e-14)) throw NotSimple("left and right eigenvectors are numerically orthogonal");
    return projection_norm(y * x.adjoint(), S) / yx;
}

struct ConditionRow {
    int index; // 1-based, canonical order
    Complex lambda;
    std::optional<double> kappa;
    std::optional<double> kappa_structured;
    bool simple;
};

struct ConditionTable {
    std::vector<ConditionRow> rows;
};

inline ConditionTable condition_table(const MatrixPolynomial& P, const Weights& w,
                                      const std::optional<StructureSet>& S = std::nullopt) {
    const auto trips = eigen_triplets(P);
    ConditionTable table;
    table.rows.reserve(trips.size());
    for (std::size_t i = 0; i < trips.size(); ++i) {
        ConditionRow row;
        row.index = static_cast<int>(i) + 1;
        row.lambda = trips[i].lambda;
        row.simple = trips[i].simple;
        if (trips[i].simple) {
            row.kappa = kappa(P, w, trips[i]);
            if (S) row.kappa_structured = kappa_structured(P, w, *S, trips[i]);
        }
        table.rows.push_back(row);
    }
    return table;
}

inline void write_csv(const ConditionTable& table, std::ostream& os) {
    os << "index,re,im,kappa,kappa_structured,simple\n";
    os.precision(17);
    for (const auto& r : table.rows) {
        os << r.index << ',' << r.lambda.real() << ',' << r.lambda.imag() << ',';
        if (r.kappa) os << *r.kappa;
        os << ',';
        if (r.kappa_structured) os << *r.kappa_structured;
        os << ',' << (r.simple ? "true" : "false") << '\n';
    }
}

} // namespace polyps
