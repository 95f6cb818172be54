#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "polyps/rng.hpp"
#include "polyps/structures.hpp"
#include "polyps/types.hpp"

namespace polyps {

/// Coefficient matrices W_0..W_m of a perturbation polynomial
/// W(lambda) = sum_h W_h lambda^h with ||W_h||_F <= omega_h.
struct PerturbationDirection {
    std::vector<ComplexMatrix> coeffs;
    std::string source;

    int order() const { return static_cast<int>(coeffs.front().rows()); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

namespace detail {

// arg(0) := 0 so the phase factors stay defined at a zero eigenvalue.
inline double safe_arg(Complex z) { return z == Complex(0.0) ? 0.0 : std::arg(z); }

} // namespace detail

/// Maximal rank-one direction W_h = omega_h e^{-i h arg(lambda)} y x^H.
inline PerturbationDirection maximal_direction(const EigenTriplet& trip, const Weights& w) {
    const double phase = detail::safe_arg(trip.lambda);
    const ComplexMatrix G = trip.y * trip.x.adjoint();
    PerturbationDirection D;
    D.coeffs.reserve(w.size());
    for (std::size_t h = 0; h < w.size(); ++h)
        D.coeffs.push_back(w[h] * std::exp(Complex(0.0, -static_cast<double>(h) * phase)) * G);
    D.source = "maximal";
    return D;
}

/// Structured maximal direction: the rank-one factor is replaced by the
/// normalized projection onto each coefficient's class. Coefficients whose
/// projection vanishes are kept as zero matrices.
inline PerturbationDirection maximal_structured_direction(const EigenTriplet& trip, const Weights& w,
                                                          const StructureSet& S) {
    if (S.size() != w.size()) throw DimensionMismatch("structure set and weights disagree in length");
    const double phase = detail::safe_arg(trip.lambda);
    const ComplexMatrix G = trip.y * trip.x.adjoint();
    const int n = static_cast<int>(G.rows());
    PerturbationDirection D;
    D.coeffs.reserve(w.size());
    D.source = "maximal-structured";
    bool any_nonzero = false;
    for (std::size_t h = 0; h < w.size(); ++h) {
        ComplexMatrix Wh;
        try {
            Wh = w[h] * std::exp(Complex(0.0, -static_cast<double>(h) * phase)) *
                 normalized_project(G, S[h]);
            if (w[h] > 0.0) any_nonzero = true;
        } catch (const ZeroProjection&) {
            Wh = ComplexMatrix::Zero(n, n);
            D.source += ";zero-projection:" + std::to_string(h);
        }
        D.coeffs.push_back(std::move(Wh));
    }
    if (!any_nonzero) throw AllZeroDirection();
    return D;
}

namespace detail {

inline ComplexMatrix unit_rank_one(GaussianSource& g, int n) {
    const ComplexVector u = g.complex_normal_vector(n);
    const ComplexVector v = g.complex_normal_vector(n);
    ComplexMatrix R = u * v.adjoint();
    return R / R.norm();
}

} // namespace detail

/// Random baseline: W_h = omega_h * unit-norm rank-one Gaussian draw.
inline PerturbationDirection random_direction(const Weights& w, int n, std::uint64_t rng_seed) {
    GaussianSource g(rng_seed);
    PerturbationDirection D;
    D.coeffs.reserve(w.size());
    for (std::size_t h = 0; h < w.size(); ++h) {
        ComplexMatrix R = detail::unit_rank_one(g, n);
        D.coeffs.push_back(w[h] == 0.0 ? ComplexMatrix::Zero(n, n).eval() : (w[h] * R).eval());
    }
    D.source = "random:" + std::to_string(rng_seed);
    return D;
}

/// Random structured baseline: each draw is projected into its class and
/// renormalized; draws that project to zero are repeated up to 8 times.
inline PerturbationDirection random_structured_direction(const Weights& w, const StructureSet& S,
                                                         int n, std::uint64_t rng_seed) {
    if (S.size() != w.size()) throw DimensionMismatch("structure set and weights disagree in length");
    GaussianSource g(rng_seed);
    PerturbationDirection D;
    D.coeffs.reserve(w.size());
    bool any_nonzero = false;
    for (std::size_t h = 0; h < w.size(); ++h) {
        if (w[h] == 0.0) {
            D.coeffs.push_back(ComplexMatrix::Zero(n, n));
            continue;
        }
        bool placed = false;
        for (int attempt = 0; attempt < 8 && !placed; ++attempt) {
            const ComplexMatrix R = detail::unit_rank_one(g, n);
            try {
                D.coeffs.push_back(w[h] * normalized_project(R, S[h]));
                placed = true;
                any_nonzero = true;
            } catch (const ZeroProjection&) {
            }
        }
        if (!placed) throw AllZeroDirection("structured random draw projected to zero 8 times");
    }
    if (!any_nonzero) throw AllZeroDirection();
    D.source = "random-structured:" + std::to_string(rng_seed);
    return D;
}

/// P(lambda) + eps e^{i theta} W(lambda).
inline MatrixPolynomial apply(const MatrixPolynomial& P, double eps, double theta,
                              const PerturbationDirection& D) {
    if (D.degree() != P.degree() || D.order() != P.order())
        throw DimensionMismatch("perturbation direction does not match the polynomial");
    const Complex scale = eps * std::exp(Complex(0.0, theta));
    std::vector<ComplexMatrix> coeffs;
    coeffs.reserve(P.coeffs().size());
    for (std::size_t h = 0; h < P.coeffs().size(); ++h)
        coeffs.push_back(P.coeff(static_cast<int>(h)) + scale * D.coeffs[h]);
    return MatrixPolynomial(std::move(coeffs));
}

} // namespace polyps
