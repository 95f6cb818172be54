#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "polyps/errors.hpp"
#include "polyps/parallel.hpp"
#include "polyps/types.hpp"

namespace polyps {

/// Horner evaluation of P(z).
inline ComplexMatrix eval(const MatrixPolynomial& P, Complex z) {
    const int m = P.degree();
    ComplexMatrix R = P.coeff(m);
    for (int j = m - 1; j >= 0; --j) R = (R * z + P.coeff(j)).eval();
    return R;
}

/// Horner evaluation of P'(z); the zero matrix for degree 0.
inline ComplexMatrix eval_derivative(const MatrixPolynomial& P, Complex z) {
    const int m = P.degree();
    const int n = P.order();
    if (m == 0) return ComplexMatrix::Zero(n, n);
    ComplexMatrix R = static_cast<double>(m) * P.coeff(m);
    for (int j = m - 1; j >= 1; --j) R = (R * z + static_cast<double>(j) * P.coeff(j)).eval();
    return R;
}

/// First companion pencil (A, B) of order m*n: B = diag(A_m, I, ..., I),
/// A carries -A_{m-1} ... -A_0 in the first block row and an identity
/// subdiagonal. Generalized eigenvalues of (A, B) are the eigenvalues of P.
inline std::pair<ComplexMatrix, ComplexMatrix> companion_linearize(const MatrixPolynomial& P) {
    const int m = P.degree();
    const int n = P.order();
    if (m < 1) throw DimensionMismatch("companion form needs degree >= 1");
    const int N = m * n;
    ComplexMatrix A = ComplexMatrix::Zero(N, N);
    ComplexMatrix B = ComplexMatrix::Zero(N, N);
    B.topLeftCorner(n, n) = P.coeff(m);
    for (int b = 1; b < m; ++b) B.block(b * n, b * n, n, n).setIdentity();
    for (int b = 0; b < m; ++b) A.block(0, b * n, n, n) = -P.coeff(m - 1 - b);
    for (int b = 1; b < m; ++b) A.block(b * n, (b - 1) * n, n, n).setIdentity();
    return {std::move(A), std::move(B)};
}

struct SingularTriplet {
    double sigma;
    ComplexVector u;
    ComplexVector v;
};

namespace detail {

inline Eigen::JacobiSVD<ComplexMatrix> small_svd(const ComplexMatrix& M) {
    return Eigen::JacobiSVD<ComplexMatrix>(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

/// Full SVD with the solver picked by size; Jacobi is accurate for small
/// matrices, BDC is needed for the 250x250 mass-spring evaluations.
template <typename Solver>
SingularTriplet last_triplet(const Solver& svd) {
    const Eigen::Index k = svd.singularValues().size() - 1;
    return {svd.singularValues()(k), svd.matrixU().col(k), svd.matrixV().col(k)};
}

inline SingularTriplet svd_smallest(const ComplexMatrix& M) {
    if (M.rows() <= 32) return last_triplet(small_svd(M));
    Eigen::BDCSVD<ComplexMatrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return last_triplet(svd);
}

/// Rotate v so its largest-magnitude component is real positive; keeps
/// singular vectors deterministic and conjugate-covariant.
inline void fix_phase(ComplexVector& v) {
    Eigen::Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    const Complex piv = v(k);
    if (std::abs(piv) > 0.0) v *= std::conj(piv) / std::abs(piv);
}

} // namespace detail

/// Smallest singular value with its left/right singular vectors.
inline SingularTriplet smallest_singular_triplet(const ComplexMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("smallest_singular_triplet needs a square matrix");
    SingularTriplet t = detail::svd_smallest(M);
    detail::fix_phase(t.u);
    detail::fix_phase(t.v);
    return t;
}

namespace detail {

inline void require_nonsingular_leading(const MatrixPolynomial& P) {
    const ComplexMatrix& Am = P.coeff(P.degree());
    Eigen::JacobiSVD<ComplexMatrix> svd(Am);
    const double smin = svd.singularValues().minCoeff();
    const double tol = P.order() * std::numeric_limits<double>::epsilon() * Am.norm();
    if (!(smin > tol)) throw SingularLeadingCoefficient();
}

inline std::vector<Complex> generalized_eigenvalues(ComplexMatrix A, ComplexMatrix B) {
    const lapack_int n = static_cast<lapack_int>(A.rows());
    std::vector<Complex> alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
    lapack_int info = LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', n, A.data(), n, B.data(), n,
                                    alpha.data(), beta.data(), nullptr, 1, nullptr, 1);
    if (info != 0) throw Error("zggev failed with info=" + std::to_string(info));
    std::vector<Complex> eigs(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        if (std::abs(beta[i]) == 0.0)
            throw SingularLeadingCoefficient("infinite generalized eigenvalue encountered");
        eigs[i] = alpha[i] / beta[i];
    }
    return eigs;
}

/// Canonical order: real part descending, imaginary part descending,
/// magnitude descending as a final tie break.
inline bool canonical_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() > b.real();
    if (a.imag() != b.imag()) return a.imag() > b.imag();
    return std::abs(a) > std::abs(b);
}

/// For real-coefficient P the spectrum is conjugate symmetric; replace
/// nearly conjugate computed pairs by exact conjugates so downstream
/// symmetry checks are not limited by QZ roundoff.
inline void symmetrize_conjugate_pairs(std::vector<Complex>& eigs) {
    std::vector<bool> done(eigs.size(), false);
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        if (done[i] || eigs[i].imag() == 0.0) continue;
        const double tol = 1e-8 * (1.0 + std::abs(eigs[i]));
        std::size_t best = i;
        double best_d = tol;
        for (std::size_t j = 0; j < eigs.size(); ++j) {
            if (j == i || done[j]) continue;
            const double d = std::abs(std::conj(eigs[i]) - eigs[j]);
            if (d < best_d) { best_d = d; best = j; }
        }
        if (best != i) {
            const double re = 0.5 * (eigs[i].real() + eigs[best].real());
            const double im = 0.5 * (std::abs(eigs[i].imag()) + std::abs(eigs[best].imag()));
            eigs[i] = {re, eigs[i].imag() > 0 ? im : -im};
            eigs[best] = std::conj(eigs[i]);
            done[i] = done[best] = true;
        }
    }
}

} // namespace detail

/// All m*n finite eigenvalues of P in canonical order, via the companion
/// pencil and QZ.
inline std::vector<Complex> polyeig(const MatrixPolynomial& P) {
    if (P.degree() == 0) return {};
    detail::require_nonsingular_leading(P);
    // Scale by the largest coefficient norm before QZ; eigenvalues are unchanged.
    const double s = P.max_coeff_norm();
    std::vector<ComplexMatrix> scaled;
    scaled.reserve(P.coeffs().size());
    for (const auto& A : P.coeffs()) scaled.push_back(A / s);
    auto [A, B] = companion_linearize(MatrixPolynomial(std::move(scaled)));
    auto eigs = detail::generalized_eigenvalues(std::move(A), std::move(B));
    if (P.is_real()) detail::symmetrize_conjugate_pairs(eigs);
    std::sort(eigs.begin(), eigs.end(), detail::canonical_less);
    return eigs;
}

/// Guard thresholds shared by all condition-number consumers.
inline bool simplicity_guard(Complex lambda, double min_gap, Complex yPpx, double dnorm) {
    return min_gap > 1e-8 * (1.0 + std::abs(lambda)) && std::abs(yPpx) > 1e-12 * dnorm;
}

/// Eigen-triplets in canonical order. Eigenvectors are the singular
/// vectors of P(lambda) belonging to sigma_min: right from V, left from U.
inline std::vector<EigenTriplet> eigen_triplets(const MatrixPolynomial& P) {
    const auto eigs = polyeig(P);
    std::vector<EigenTriplet> trips(eigs.size());
    const bool real_poly = P.is_real();
    parallel_for(static_cast<int>(eigs.size()), [&](int i) {
        const Complex lambda = eigs[static_cast<std::size_t>(i)];
        // Conjugate eigenvalues of a real P get exactly conjugate triplets;
        // compute only the upper-half-plane member here.
        if (real_poly && lambda.imag() < 0.0) return;
        const ComplexMatrix Pl = eval(P, lambda);
        SingularTriplet sv = smallest_singular_triplet(Pl);
        EigenTriplet t;
        t.lambda = lambda;
        t.x = sv.v;
        t.y = sv.u;
        t.residual_right = (Pl * t.x).norm();
        t.residual_left = (Pl.adjoint() * t.y).norm();
        trips[static_cast<std::size_t>(i)] = std::move(t);
    });
    if (real_poly) {
        for (std::size_t i = 0; i < eigs.size(); ++i) {
            if (eigs[i].imag() >= 0.0) continue;
            const Complex partner = std::conj(eigs[i]);
            for (std::size_t j = 0; j < eigs.size(); ++j) {
                if (eigs[j] == partner && eigs[j].imag() > 0.0) {
                    trips[i].lambda = eigs[i];
                    trips[i].x = trips[j].x.conjugate();
                    trips[i].y = trips[j].y.conjugate();
                    trips[i].residual_right = trips[j].residual_right;
                    trips[i].residual_left = trips[j].residual_left;
                    break;
                }
            }
            if (trips[i].x.size() == 0) {
                // Unpaired negative-imaginary eigenvalue; compute directly.
                const ComplexMatrix Pl = eval(P, eigs[i]);
                SingularTriplet sv = smallest_singular_triplet(Pl);
                trips[i].lambda = eigs[i];
                trips[i].x = sv.v;
                trips[i].y = sv.u;
                trips[i].residual_right = (Pl * trips[i].x).norm();
                trips[i].residual_left = (Pl.adjoint() * trips[i].y).norm();
            }
        }
    }
    // Simplicity flags need the whole spectrum.
    for (std::size_t i = 0; i < trips.size(); ++i) {
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < trips.size(); ++j)
            if (j != i) min_gap = std::min(min_gap, std::abs(trips[i].lambda - trips[j].lambda));
        const ComplexMatrix Pp = eval_derivative(P, trips[i].lambda);
        const Complex yPpx = trips[i].y.dot(Pp * trips[i].x);
        trips[i].simple = simplicity_guard(trips[i].lambda, min_gap, yPpx, Pp.norm());
    }
    return trips;
}

} // namespace polyps
