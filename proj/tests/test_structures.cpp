#include <doctest.h>

#include "polyps/rng.hpp"
#include "polyps/structures.hpp"

#include "oracles.hpp"

using namespace polyps;

namespace {

std::vector<StructureClass> all_classes(int n) {
    return {StructureClass::full(),
            StructureClass::symmetric(),
            StructureClass::skew_symmetric(),
            StructureClass::hermitian(),
            StructureClass::tridiagonal(),
            StructureClass::banded(1, std::min(2, n - 1)),
            StructureClass::toeplitz(),
            StructureClass::hankel(),
            StructureClass::tridiagonal_toeplitz(),
            StructureClass::symmetric_tridiagonal_toeplitz()};
}

ComplexMatrix random_complex(GaussianSource& g, int n) {
    ComplexMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = g.complex_normal();
    return M;
}

} // namespace

TEST_CASE("projection examples") {
    ComplexMatrix M(2, 2);
    M << 0.0, 1.0, 0.0, 0.0;
    ComplexMatrix Ps = project(M, StructureClass::symmetric());
    CHECK(Ps(0, 1).real() == doctest::Approx(0.5));
    CHECK(Ps(1, 0).real() == doctest::Approx(0.5));
    CHECK(Ps(0, 0).real() == doctest::Approx(0.0));

    ComplexMatrix T(2, 2);
    T << 1.0, 2.0, 3.0, 5.0;
    ComplexMatrix Pt = project(T, StructureClass::toeplitz());
    CHECK(Pt(0, 0).real() == doctest::Approx(3.0));
    CHECK(Pt(1, 1).real() == doctest::Approx(3.0));
    CHECK(Pt(0, 1).real() == doctest::Approx(2.0));
    CHECK(Pt(1, 0).real() == doctest::Approx(3.0));
}

TEST_CASE("normalized projection") {
    ComplexMatrix M(2, 2);
    M << 0.0, 1.0, 0.0, 0.0;
    ComplexMatrix N = normalized_project(M, StructureClass::symmetric());
    CHECK(N.norm() == doctest::Approx(1.0));
    CHECK(N(0, 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    ComplexMatrix skew(2, 2);
    skew << 0.0, 1.0, -1.0, 0.0;
    CHECK_THROWS_AS(normalized_project(skew, StructureClass::symmetric()), ZeroProjection);

    // member with ||M||_F = 2 scales to M/2
    ComplexMatrix D = ComplexMatrix::Zero(2, 2);
    D(0, 0) = 2.0;
    ComplexMatrix Nd = normalized_project(D, StructureClass::tridiagonal());
    CHECK((Nd - D / 2.0).norm() < 1e-15);
}

TEST_CASE("projection norm of rank-one products") {
    ComplexVector e1 = ComplexVector::Zero(2), e2 = ComplexVector::Zero(2);
    e1(0) = 1.0;
    e2(1) = 1.0;
    CHECK(projection_norm(e1 * e2.adjoint(), StructureClass::full()) == doctest::Approx(1.0));
    CHECK(projection_norm(e1 * e2.adjoint(), StructureClass::symmetric()) ==
          doctest::Approx(1.0 / std::sqrt(2.0)));

    GaussianSource g(5);
    ComplexVector y = g.complex_normal_vector(5), x = g.complex_normal_vector(5);
    y.normalize();
    x.normalize();
    const ComplexMatrix G = y * x.adjoint();
    const double pn = projection_norm(G, StructureClass::toeplitz());
    CHECK(pn >= 0.0);
    CHECK(pn <= 1.0 + 1e-12);
    CHECK(pn == doctest::Approx(oracles::least_squares_fit(G, StructureClass::toeplitz()).norm())
              .epsilon(1e-12));
}

TEST_CASE("projection equals basis least-squares fit") {
    GaussianSource g(17);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 5;
        ComplexMatrix M = random_complex(g, n);
        for (const auto& S : all_classes(n)) {
            const ComplexMatrix expect = oracles::least_squares_fit(M, S);
            CHECK((project(M, S) - expect).norm() < 1e-12);
        }
    }
}

TEST_CASE("projection invariants") {
    GaussianSource g(23);
    const int n = 5;
    for (const auto& S : all_classes(n)) {
        ComplexMatrix M = random_complex(g, n);
        ComplexMatrix N = random_complex(g, n);
        const ComplexMatrix PM = project(M, S);

        // idempotence + membership stability
        CHECK((project(PM, S) - PM).norm() < 1e-14 * std::max(1.0, PM.norm()));
        CHECK(in_class(PM, S));

        // linearity (real scalars for the real-linear Hermitian class)
        const Complex a = oracles::real_linear_only(S) ? Complex(1.7) : Complex(1.3, -0.4);
        const Complex b = oracles::real_linear_only(S) ? Complex(-0.6) : Complex(0.2, 2.1);
        CHECK((project((a * M + b * N).eval(), S) - (a * PM + b * project(N, S))).norm() < 1e-12);

        // contraction
        CHECK(PM.norm() <= M.norm() + 1e-14);

        // orthogonality of the residual against the class basis
        for (const auto& Z : oracles::basis(S, n)) {
            const Complex inner = ((M - PM).adjoint() * Z).trace();
            if (oracles::real_linear_only(S))
                CHECK(std::abs(inner.real()) < 1e-12);
            else
                CHECK(std::abs(inner) < 1e-12);
        }

        // nearest point among random class members
        const double dist = (M - PM).norm();
        GaussianSource gz(99);
        for (int k = 0; k < 1000; ++k) {
            ComplexMatrix Z = project(random_complex(gz, n), S);
            CHECK(dist <= (M - Z).norm() + 1e-12);
        }
    }
}

TEST_CASE("rank-one projection norms are at most one") {
    GaussianSource g(31);
    for (int rep = 0; rep < 20; ++rep) {
        ComplexVector y = g.complex_normal_vector(4), x = g.complex_normal_vector(4);
        y.normalize();
        x.normalize();
        for (const auto& S : all_classes(4))
            CHECK(projection_norm(y * x.adjoint(), S) <= 1.0 + 1e-12);
    }
}

TEST_CASE("structure tag serialization") {
    for (const auto& S : all_classes(4)) CHECK(structure_from_string(to_string(S)) == S);
    CHECK_THROWS_AS(structure_from_string("circulant"), ParseError);
}
