#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyps/rng.hpp"
#include "polyps/structures.hpp"
#include "polyps/types.hpp"

namespace polyps {

struct ProblemBundle {
    MatrixPolynomial P;
    Weights w;
    StructureSet S;
    std::string id;
};

/// The fixed 3x3 quadratic studied alongside its condition-number table;
/// weights {1,1,1}, no structure constraints.
inline ProblemBundle gen_example2() {
    ComplexMatrix A2(3, 3), A1(3, 3), A0(3, 3);
    A2 << 17.6, 1.28, 2.89,
          1.28, 0.824, 0.413,
          2.89, 0.413, 0.725;
    A1 << 7.66, 2.45, 2.1,
          0.23, 1.04, 0.223,
          0.6, 0.756, 0.658;
    A0 << 121.0, 18.9, 15.9,
          0.0, 2.7, 0.145,
          11.9, 3.64, 15.5;
    return {MatrixPolynomial({A0, A1, A2}), Weights{1.0, 1.0, 1.0}, StructureSet::all_full(2),
            "example2"};
}

namespace detail {

inline ComplexMatrix tridiag_toeplitz(int n, double sub, double diag, double super) {
    ComplexMatrix M = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) M(i, i) = diag;
    for (int i = 0; i + 1 < n; ++i) {
        M(i, i + 1) = super;
        M(i + 1, i) = sub;
    }
    return M;
}

} // namespace detail

/// Damped mass-spring chain: M = I, C = 10*tridiag(-1,3,-1),
/// K = 5*tridiag(-1,3,-1), weights {||K||_F, ||C||_F, ||M||_F}, all three
/// coefficients constrained to symmetric tridiagonal Toeplitz form.
inline ProblemBundle gen_mass_spring(int n) {
    if (n < 2) throw DimensionMismatch("mass-spring needs n >= 2");
    ComplexMatrix M = ComplexMatrix::Identity(n, n);
    ComplexMatrix C = detail::tridiag_toeplitz(n, -10.0, 30.0, -10.0);
    ComplexMatrix K = detail::tridiag_toeplitz(n, -5.0, 15.0, -5.0);
    Weights w{K.norm(), C.norm(), M.norm()};
    return {MatrixPolynomial({K, C, M}), std::move(w),
            StructureSet::uniform(StructureClass::symmetric_tridiagonal_toeplitz(), 2),
            "mass-spring:" + std::to_string(n)};
}

/// Random quadratic: dense real Gaussian A_0, A_1 and a real tridiagonal
/// Toeplitz leading coefficient; weights ||A_i||_F.
inline ProblemBundle gen_random_quadratic(int n, std::uint64_t seed) {
    if (n < 2) throw DimensionMismatch("random quadratic needs n >= 2");
    GaussianSource g(mix_seed(seed, 0x71ad));
    ComplexMatrix A0 = g.real_normal_matrix(n, n).cast<Complex>();
    ComplexMatrix A1 = g.real_normal_matrix(n, n).cast<Complex>();
    ComplexMatrix A2;
    const double sing_tol = 1e-10;
    for (int attempt = 0;; ++attempt) {
        A2 = detail::tridiag_toeplitz(n, g.normal(), g.normal(), g.normal());
        Eigen::JacobiSVD<ComplexMatrix> svd(A2);
        if (svd.singularValues().minCoeff() > sing_tol * A2.norm()) break;
        if (attempt >= 8) throw SingularLeadingCoefficient("leading coefficient redraw exhausted");
    }
    Weights w{A0.norm(), A1.norm(), A2.norm()};
    StructureSet S({StructureClass::full(), StructureClass::full(),
                    StructureClass::tridiagonal_toeplitz()});
    return {MatrixPolynomial({A0, A1, A2}), std::move(w), std::move(S),
            "random-quadratic:" + std::to_string(n) + ":" + std::to_string(seed)};
}

inline nlohmann::json to_json(const ProblemBundle& b) {
    nlohmann::json j;
    j["n"] = b.P.order();
    j["m"] = b.P.degree();
    auto& coeffs = j["coefficients"] = nlohmann::json::array();
    for (const auto& A : b.P.coeffs()) {
        nlohmann::json mat = nlohmann::json::array();
        for (Eigen::Index r = 0; r < A.rows(); ++r)
            for (Eigen::Index c = 0; c < A.cols(); ++c)
                mat.push_back({A(r, c).real(), A(r, c).imag()});
        coeffs.push_back(std::move(mat));
    }
    j["weights"] = b.w.values;
    auto& st = j["structures"] = nlohmann::json::array();
    for (const auto& s : b.S.classes) st.push_back(to_string(s));
    j["id"] = b.id;
    return j;
}

inline ProblemBundle bundle_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        const int m = j.at("m").get<int>();
        if (n < 1 || m < 0) throw ParseError("invalid dimensions n=" + std::to_string(n) +
                                             ", m=" + std::to_string(m));
        const auto& coeffs = j.at("coefficients");
        if (static_cast<int>(coeffs.size()) != m + 1)
            throw ParseError("expected " + std::to_string(m + 1) + " coefficients, got " +
                             std::to_string(coeffs.size()));
        std::vector<ComplexMatrix> mats;
        mats.reserve(coeffs.size());
        for (const auto& mat : coeffs) {
            if (static_cast<int>(mat.size()) != n * n)
                throw ParseError("coefficient entry count " + std::to_string(mat.size()) +
                                 " does not match n*n");
            ComplexMatrix A(n, n);
            int k = 0;
            for (Eigen::Index r = 0; r < n; ++r)
                for (Eigen::Index c = 0; c < n; ++c, ++k)
                    A(r, c) = Complex(mat[k].at(0).get<double>(), mat[k].at(1).get<double>());
            mats.push_back(std::move(A));
        }
        std::vector<double> wv = j.at("weights").get<std::vector<double>>();
        if (static_cast<int>(wv.size()) != m + 1)
            throw ParseError("expected " + std::to_string(m + 1) + " weights");
        std::vector<StructureClass> classes;
        for (const auto& s : j.at("structures")) classes.push_back(structure_from_string(s.get<std::string>()));
        if (static_cast<int>(classes.size()) != m + 1)
            throw ParseError("expected " + std::to_string(m + 1) + " structure tags");
        std::string id = j.value("id", std::string{});
        return {MatrixPolynomial(std::move(mats)), Weights(std::move(wv)),
                StructureSet(std::move(classes)), std::move(id)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed bundle: ") + e.what());
    }
}

inline void save_polynomial(const ProblemBundle& b, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ParseError("cannot open " + path + " for writing");
    os << to_json(b).dump(2) << '\n';
}

inline ProblemBundle load_polynomial(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(path) + ": " + e.what());
    }
    return bundle_from_json(j);
}

} // namespace polyps
