#pragma once

#include <string>
#include <vector>

#include "polyps/errors.hpp"
#include "polyps/types.hpp"

namespace polyps {

enum class StructureTag {
    Full,
    Symmetric,
    SkewSymmetric,
    Hermitian,
    Tridiagonal,
    Banded,
    Toeplitz,
    Hankel,
    TridiagonalToeplitz,
    SymmetricTridiagonalToeplitz,
};

/// A linear subspace of n x n matrices, identified by tag (plus bandwidths
/// for Banded). Symmetric/SkewSymmetric use the plain transpose over the
/// complex field; Hermitian is a separate, real-linear class.
struct StructureClass {
    StructureTag tag = StructureTag::Full;
    int lower = 0; // Banded only
    int upper = 0;

    static StructureClass full() { return {StructureTag::Full}; }
    static StructureClass symmetric() { return {StructureTag::Symmetric}; }
    static StructureClass skew_symmetric() { return {StructureTag::SkewSymmetric}; }
    static StructureClass hermitian() { return {StructureTag::Hermitian}; }
    static StructureClass tridiagonal() { return {StructureTag::Tridiagonal}; }
    static StructureClass banded(int l, int u) { return {StructureTag::Banded, l, u}; }
    static StructureClass toeplitz() { return {StructureTag::Toeplitz}; }
    static StructureClass hankel() { return {StructureTag::Hankel}; }
    static StructureClass tridiagonal_toeplitz() { return {StructureTag::TridiagonalToeplitz}; }
    static StructureClass symmetric_tridiagonal_toeplitz() {
        return {StructureTag::SymmetricTridiagonalToeplitz};
    }

    bool operator==(const StructureClass& o) const {
        if (tag != o.tag) return false;
        if (tag == StructureTag::Banded) return lower == o.lower && upper == o.upper;
        return true;
    }
};

inline std::string to_string(const StructureClass& s) {
    switch (s.tag) {
        case StructureTag::Full: return "full";
        case StructureTag::Symmetric: return "symmetric";
        case StructureTag::SkewSymmetric: return "skew-symmetric";
        case StructureTag::Hermitian: return "hermitian";
        case StructureTag::Tridiagonal: return "tridiagonal";
        case StructureTag::Banded:
            return "banded:" + std::to_string(s.lower) + ":" + std::to_string(s.upper);
        case StructureTag::Toeplitz: return "toeplitz";
        case StructureTag::Hankel: return "hankel";
        case StructureTag::TridiagonalToeplitz: return "tridiagonal-toeplitz";
        case StructureTag::SymmetricTridiagonalToeplitz: return "symmetric-tridiagonal-toeplitz";
    }
    return "full";
}

inline StructureClass structure_from_string(const std::string& name) {
    if (name == "full") return StructureClass::full();
    if (name == "symmetric") return StructureClass::symmetric();
    if (name == "skew-symmetric") return StructureClass::skew_symmetric();
    if (name == "hermitian") return StructureClass::hermitian();
    if (name == "tridiagonal") return StructureClass::tridiagonal();
    if (name == "toeplitz") return StructureClass::toeplitz();
    if (name == "hankel") return StructureClass::hankel();
    if (name == "tridiagonal-toeplitz") return StructureClass::tridiagonal_toeplitz();
    if (name == "symmetric-tridiagonal-toeplitz")
        return StructureClass::symmetric_tridiagonal_toeplitz();
    if (name.rfind("banded:", 0) == 0) {
        const auto rest = name.substr(7);
        const auto sep = rest.find(':');
        if (sep != std::string::npos) {
            try {
                int l = std::stoi(rest.substr(0, sep));
                int u = std::stoi(rest.substr(sep + 1));
                if (l >= 0 && u >= 0) return StructureClass::banded(l, u);
            } catch (const std::exception&) {
            }
        }
    }
    throw ParseError("unknown structure tag: \"" + name + "\"");
}

/// One structure class per coefficient A_0..A_m.
struct StructureSet {
    std::vector<StructureClass> classes;

    StructureSet() = default;
    explicit StructureSet(std::vector<StructureClass> c) : classes(std::move(c)) {}
    static StructureSet all_full(int degree) {
        return StructureSet(std::vector<StructureClass>(static_cast<std::size_t>(degree) + 1,
                                                        StructureClass::full()));
    }
    static StructureSet uniform(const StructureClass& s, int degree) {
        return StructureSet(std::vector<StructureClass>(static_cast<std::size_t>(degree) + 1, s));
    }

    const StructureClass& operator[](std::size_t j) const { return classes[j]; }
    std::size_t size() const { return classes.size(); }
};

namespace detail {

inline ComplexMatrix band_mask(const ComplexMatrix& M, int lower, int upper) {
    const Eigen::Index n = M.rows();
    ComplexMatrix R = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (j - i <= upper && i - j <= lower) R(i, j) = M(i, j);
    return R;
}

inline ComplexMatrix toeplitz_mean(const ComplexMatrix& M) {
    const Eigen::Index n = M.rows();
    ComplexMatrix R(n, n);
    for (Eigen::Index d = -(n - 1); d <= n - 1; ++d) {
        Complex sum = 0.0;
        Eigen::Index count = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Eigen::Index j = i + d;
            if (j >= 0 && j < n) { sum += M(i, j); ++count; }
        }
        const Complex mean = sum / static_cast<double>(count);
        for (Eigen::Index i = 0; i < n; ++i) {
            const Eigen::Index j = i + d;
            if (j >= 0 && j < n) R(i, j) = mean;
        }
    }
    return R;
}

inline ComplexMatrix hankel_mean(const ComplexMatrix& M) {
    const Eigen::Index n = M.rows();
    ComplexMatrix R(n, n);
    for (Eigen::Index s = 0; s <= 2 * (n - 1); ++s) {
        Complex sum = 0.0;
        Eigen::Index count = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Eigen::Index j = s - i;
            if (j >= 0 && j < n) { sum += M(i, j); ++count; }
        }
        const Complex mean = sum / static_cast<double>(count);
        for (Eigen::Index i = 0; i < n; ++i) {
            const Eigen::Index j = s - i;
            if (j >= 0 && j < n) R(i, j) = mean;
        }
    }
    return R;
}

inline ComplexMatrix tridiag_toeplitz_mean(const ComplexMatrix& M) {
    const Eigen::Index n = M.rows();
    ComplexMatrix R = ComplexMatrix::Zero(n, n);
    if (n == 1) { R(0, 0) = M(0, 0); return R; }
    Complex diag = 0.0, super = 0.0, sub = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) diag += M(i, i);
    for (Eigen::Index i = 0; i + 1 < n; ++i) { super += M(i, i + 1); sub += M(i + 1, i); }
    diag /= static_cast<double>(n);
    super /= static_cast<double>(n - 1);
    sub /= static_cast<double>(n - 1);
    for (Eigen::Index i = 0; i < n; ++i) R(i, i) = diag;
    for (Eigen::Index i = 0; i + 1 < n; ++i) { R(i, i + 1) = super; R(i + 1, i) = sub; }
    return R;
}

inline ComplexMatrix sym_tridiag_toeplitz_mean(const ComplexMatrix& M) {
    const Eigen::Index n = M.rows();
    ComplexMatrix R = ComplexMatrix::Zero(n, n);
    if (n == 1) { R(0, 0) = M(0, 0); return R; }
    Complex diag = 0.0, off = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) diag += M(i, i);
    for (Eigen::Index i = 0; i + 1 < n; ++i) off += M(i, i + 1) + M(i + 1, i);
    diag /= static_cast<double>(n);
    off /= static_cast<double>(2 * (n - 1));
    for (Eigen::Index i = 0; i < n; ++i) R(i, i) = diag;
    for (Eigen::Index i = 0; i + 1 < n; ++i) { R(i, i + 1) = off; R(i + 1, i) = off; }
    return R;
}

} // namespace detail

/// Frobenius-orthogonal projection of M onto the class subspace.
inline ComplexMatrix project(const ComplexMatrix& M, const StructureClass& S) {
    if (M.rows() != M.cols()) throw DimensionMismatch("project needs a square matrix");
    switch (S.tag) {
        case StructureTag::Full: return M;
        case StructureTag::Symmetric: return 0.5 * (M + M.transpose());
        case StructureTag::SkewSymmetric: return 0.5 * (M - M.transpose());
        case StructureTag::Hermitian: return 0.5 * (M + M.adjoint());
        case StructureTag::Tridiagonal: return detail::band_mask(M, 1, 1);
        case StructureTag::Banded: return detail::band_mask(M, S.lower, S.upper);
        case StructureTag::Toeplitz: return detail::toeplitz_mean(M);
        case StructureTag::Hankel: return detail::hankel_mean(M);
        case StructureTag::TridiagonalToeplitz: return detail::tridiag_toeplitz_mean(M);
        case StructureTag::SymmetricTridiagonalToeplitz: return detail::sym_tridiag_toeplitz_mean(M);
    }
    return M;
}

inline double projection_norm(const ComplexMatrix& M, const StructureClass& S) {
    return project(M, S).norm();
}

/// Unit-Frobenius-norm projection M|_S / ||M|_S||_F.
inline ComplexMatrix normalized_project(const ComplexMatrix& M, const StructureClass& S) {
    ComplexMatrix Pm = project(M, S);
    const double pn = Pm.norm();
    if (!(pn > 1e-14 * M.norm()))
        throw ZeroProjection("projection onto " + to_string(S) + " vanishes");
    return Pm / pn;
}

inline bool in_class(const ComplexMatrix& M, const StructureClass& S, double tol = 1e-12) {
    return (M - project(M, S)).norm() <= tol * std::max(1.0, M.norm());
}

} // namespace polyps
