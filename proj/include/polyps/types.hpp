#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polyps/errors.hpp"

namespace polyps {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline bool all_finite(const ComplexMatrix& M) {
    return M.array().real().isFinite().all() && M.array().imag().isFinite().all();
}

/// P(z) = A_0 + A_1 z + ... + A_m z^m with square complex coefficients.
class MatrixPolynomial {
public:
    MatrixPolynomial(std::vector<ComplexMatrix> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty())
            throw DimensionMismatch("matrix polynomial needs at least one coefficient");
        const Eigen::Index n = coeffs_.front().rows();
        for (const auto& A : coeffs_) {
            if (A.rows() != n || A.cols() != n)
                throw DimensionMismatch("coefficients must be square with a common order");
            if (!all_finite(A))
                throw DimensionMismatch("coefficient contains NaN or Inf entries");
        }
    }

    int order() const { return static_cast<int>(coeffs_.front().rows()); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const ComplexMatrix& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
    const std::vector<ComplexMatrix>& coeffs() const { return coeffs_; }

    bool is_real() const {
        for (const auto& A : coeffs_)
            if (A.imag().cwiseAbs().maxCoeff() != 0.0) return false;
        return true;
    }

    double max_coeff_norm() const {
        double s = 0.0;
        for (const auto& A : coeffs_) s = std::max(s, A.norm());
        return s;
    }

private:
    std::vector<ComplexMatrix> coeffs_;
};

/// Eigenvalue with unit right/left eigenvectors and the residual norms
/// ||P(lambda) x||_2 and ||y^H P(lambda)||_2.
struct EigenTriplet {
    Complex lambda;
    ComplexVector x;
    ComplexVector y;
    double residual_right = 0.0;
    double residual_left = 0.0;
    bool simple = true;
};

/// Per-coefficient perturbation budgets omega_0..omega_m.
struct Weights {
    std::vector<double> values;

    Weights(std::initializer_list<double> v) : values(v) { validate(); }
    explicit Weights(std::vector<double> v) : values(std::move(v)) { validate(); }

    double operator[](std::size_t j) const { return values[j]; }
    std::size_t size() const { return values.size(); }

    void validate() const {
        if (values.empty()) throw DimensionMismatch("weights must be nonempty");
        bool any_positive = false;
        for (double w : values) {
            if (!(w >= 0.0)) throw DimensionMismatch("weights must be nonnegative");
            if (w > 0.0) any_positive = true;
        }
        if (!any_positive) throw DimensionMismatch("at least one weight must be positive");
    }
};

} // namespace polyps
