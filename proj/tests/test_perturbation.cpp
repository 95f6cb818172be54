#include <doctest.h>

#include <cmath>

#include "polyps/numkernel.hpp"
#include "polyps/perturbation.hpp"
#include "polyps/problems.hpp"

using namespace polyps;

namespace {

EigenTriplet make_triplet(Complex lambda, int n, GaussianSource& g) {
    EigenTriplet t;
    t.lambda = lambda;
    t.x = g.complex_normal_vector(n).normalized();
    t.y = g.complex_normal_vector(n).normalized();
    return t;
}

} // namespace

TEST_CASE("maximal direction") {
    GaussianSource g(1);
    const Weights w{1.5, 0.0, 0.25};

    // positive real eigenvalue: no phase twist
    auto t = make_triplet(2.0, 4, g);
    auto D = maximal_direction(t, w);
    const ComplexMatrix G = t.y * t.x.adjoint();
    for (std::size_t h = 0; h < w.size(); ++h) {
        CHECK((D.coeffs[h] - w[h] * G).norm() < 1e-14);
        CHECK(D.coeffs[h].norm() == doctest::Approx(w[h]));
    }

    // lambda = i: phases 1, -i, -1
    auto ti = make_triplet(Complex(0.0, 1.0), 4, g);
    auto Di = maximal_direction(ti, Weights{1.0, 1.0, 1.0});
    const ComplexMatrix Gi = ti.y * ti.x.adjoint();
    CHECK((Di.coeffs[0] - Gi).norm() < 1e-14);
    CHECK((Di.coeffs[1] + Complex(0.0, 1.0) * Gi).norm() < 1e-14);
    CHECK((Di.coeffs[2] + Gi).norm() < 1e-14);

    // zero eigenvalue: arg(0) treated as 0
    auto t0 = make_triplet(0.0, 4, g);
    auto D0 = maximal_direction(t0, Weights{1.0, 1.0});
    CHECK((D0.coeffs[1] - t0.y * t0.x.adjoint()).norm() < 1e-14);

    // rank one for every nonzero weight
    Eigen::JacobiSVD<ComplexMatrix> svd(D.coeffs[0]);
    CHECK(svd.singularValues()(1) < 1e-12 * svd.singularValues()(0));
}

TEST_CASE("maximal structured direction") {
    GaussianSource g(2);
    const Weights w{1.0, 2.0};

    auto t = make_triplet(Complex(0.4, -1.1), 4, g);
    auto full = maximal_structured_direction(t, w, StructureSet::all_full(1));
    auto plain = maximal_direction(t, w);
    for (std::size_t h = 0; h < w.size(); ++h)
        CHECK((full.coeffs[h] - plain.coeffs[h]).norm() < 1e-13);

    // e1/e2 with Symmetric gives the normalized symmetric part, norm omega_h
    EigenTriplet te;
    te.lambda = Complex(0.7, 0.2);
    te.x = ComplexVector::Zero(3);
    te.y = ComplexVector::Zero(3);
    te.x(1) = 1.0;
    te.y(0) = 1.0;
    auto sym = maximal_structured_direction(te, w, StructureSet::uniform(StructureClass::symmetric(), 1));
    for (std::size_t h = 0; h < w.size(); ++h) {
        CHECK(sym.coeffs[h].norm() == doctest::Approx(w[h]));
        CHECK(in_class(sym.coeffs[h], StructureClass::symmetric()));
    }

    // mass-spring triplets produce symmetric tridiagonal Toeplitz coefficients
    auto ms = gen_mass_spring(12);
    auto trips = eigen_triplets(ms.P);
    for (const auto& trip : trips) {
        if (!trip.simple) continue;
        auto D = maximal_structured_direction(trip, ms.w, ms.S);
        for (const auto& W : D.coeffs)
            CHECK(in_class(W, StructureClass::symmetric_tridiagonal_toeplitz()));
        break;
    }

    // a direction whose every coefficient projects to zero is an error
    EigenTriplet tsym;
    tsym.lambda = 1.0;
    tsym.x = ComplexVector::Zero(2);
    tsym.y = ComplexVector::Zero(2);
    tsym.x(0) = 1.0;
    tsym.y(0) = 1.0; // y x^H = e1 e1^H is symmetric, skew part zero
    CHECK_THROWS_AS(
        maximal_structured_direction(tsym, Weights{1.0},
                                     StructureSet::uniform(StructureClass::skew_symmetric(), 0)),
        AllZeroDirection);
}

TEST_CASE("random directions") {
    const Weights w{2.0, 0.0, 0.7};
    auto D1 = random_direction(w, 5, 99);
    auto D2 = random_direction(w, 5, 99);
    for (std::size_t h = 0; h < w.size(); ++h) {
        CHECK((D1.coeffs[h] - D2.coeffs[h]).norm() == 0.0);
        CHECK(D1.coeffs[h].norm() == doctest::Approx(w[h]));
        if (w[h] > 0.0) {
            Eigen::JacobiSVD<ComplexMatrix> svd(D1.coeffs[h]);
            CHECK(svd.singularValues()(1) < 1e-12 * svd.singularValues()(0));
        }
    }
    auto D3 = random_direction(w, 5, 100);
    CHECK((D1.coeffs[0] - D3.coeffs[0]).norm() > 1e-8);
}

TEST_CASE("random structured directions") {
    const Weights w{1.0, 1.0, 1.0};
    const StructureSet S({StructureClass::toeplitz(), StructureClass::full(),
                          StructureClass::tridiagonal_toeplitz()});
    auto D1 = random_structured_direction(w, S, 4, 7);
    auto D2 = random_structured_direction(w, S, 4, 7);
    for (std::size_t h = 0; h < w.size(); ++h) {
        CHECK((D1.coeffs[h] - D2.coeffs[h]).norm() == 0.0);
        CHECK(D1.coeffs[h].norm() == doctest::Approx(w[h]));
        CHECK(in_class(D1.coeffs[h], S[h]));
    }
}

TEST_CASE("apply") {
    auto rq = gen_random_quadratic(4, 10);
    auto trips = eigen_triplets(rq.P);
    auto D = maximal_direction(trips[0], rq.w);

    auto same = apply(rq.P, 0.0, 1.0, D);
    for (int h = 0; h <= 2; ++h) CHECK((same.coeff(h) - rq.P.coeff(h)).norm() == 0.0);

    auto a = apply(rq.P, 0.1, 0.3, D);
    auto b = apply(rq.P, 0.1, 0.3 + 2.0 * std::numbers::pi, D);
    for (int h = 0; h <= 2; ++h)
        CHECK((a.coeff(h) - b.coeff(h)).norm() < 1e-15 * (1.0 + a.coeff(h).norm()));

    // admissibility of the perturbed coefficients
    const double eps = 0.05;
    auto q = apply(rq.P, eps, 1.2, D);
    for (int h = 0; h <= 2; ++h) {
        const double moved = (q.coeff(h) - rq.P.coeff(h)).norm();
        CHECK(moved == doctest::Approx(eps * D.coeffs[static_cast<std::size_t>(h)].norm()));
        CHECK(moved <= eps * rq.w[static_cast<std::size_t>(h)] * (1.0 + 1e-12));
    }

    // mismatched shapes are rejected
    auto other = gen_random_quadratic(5, 11);
    CHECK_THROWS_AS(apply(other.P, 0.1, 0.0, D), DimensionMismatch);
}
