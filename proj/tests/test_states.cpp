#include "qsd/states.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace qsd;
using namespace qsd::testing;

namespace {

PureState ket(std::initializer_list<Complex> amps, int da = 0, int db = 1) {
    Vector v(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index i = 0;
    for (Complex a : amps) v(i++) = a;
    if (da == 0) da = static_cast<int>(v.size());
    return PureState(std::move(v), da, db);
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_SUITE("states") {

TEST_CASE("density_from_ensemble basics and many-to-one") {
    Ensemble single{{1.0, ket({1, 0})}};
    CHECK(max_abs(density_from_ensemble(single).matrix() -
                  basis_vector(2, 0) * basis_vector(2, 0).adjoint()) < 1e-15);

    Ensemble zw{{0.5, ket({1, 0})}, {0.5, ket({0, 1})}};
    CHECK(max_abs(density_from_ensemble(zw).matrix() - 0.5 * Matrix::Identity(2, 2)) < 1e-15);

    // a different ensemble with the same density operator
    Ensemble pm{{0.5, ket({kInvSqrt2, kInvSqrt2})}, {0.5, ket({kInvSqrt2, -kInvSqrt2})}};
    CHECK(max_abs(density_from_ensemble(pm).matrix() - 0.5 * Matrix::Identity(2, 2)) < 1e-12);

    Ensemble bad_probs;
    bad_probs.items = {{0.7, ket({1, 0})}, {0.7, ket({0, 1})}};
    CHECK_THROWS_AS(density_from_ensemble(bad_probs), Error);
}

TEST_CASE("validate_density classifies violations") {
    CHECK_NOTHROW(validate_density(0.5 * Matrix::Identity(2, 2)));

    Matrix neg = Matrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(validate_density(neg), NotPsdError);
    try {
        validate_density(neg);
    } catch (const NotPsdError& e) {
        CHECK(e.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
    }

    CHECK_THROWS_AS(validate_density(0.6 * Matrix::Identity(2, 2)), TraceError);

    Matrix nh = 0.5 * Matrix::Identity(2, 2);
    nh(0, 1) = Complex(0.1, 0.0);
    CHECK_THROWS_AS(validate_density(nh), NotHermitianError);
}

TEST_CASE("purification reproduces the state") {
    // maximally mixed qubit: purification is a Bell state up to local unitary
    DensityOperator mixed = validate_density(0.5 * Matrix::Identity(2, 2));
    PureState pur = purify(mixed);
    Matrix red = partial_trace(pur.projector(), 2, 2, Subsystem::B);
    CHECK(max_abs(red - mixed.matrix()) <= 1e-10);
    CHECK(entanglement_entropy(pur) == doctest::Approx(1.0).epsilon(1e-10));

    // pure input: product purification of Schmidt rank 1
    DensityOperator pure0 =
        validate_density(basis_vector(2, 0) * basis_vector(2, 0).adjoint());
    CHECK(schmidt_decompose(purify(pure0)).rank == 1);

    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        DensityOperator rho = random_density(rng, 3);
        PureState p = purify(rho);
        CHECK(max_abs(partial_trace(p.projector(), 3, 3, Subsystem::B) - rho.matrix()) <= 1e-10);
    }
}

TEST_CASE("schmidt decomposition on known states") {
    PureState bell = ket({kInvSqrt2, 0, 0, kInvSqrt2}, 2, 2);
    SchmidtDecomposition s = schmidt_decompose(bell);
    CHECK(s.coefficients(0) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(s.coefficients(1) == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(s.rank == 2);

    CHECK(schmidt_decompose(ket({0, 1, 0, 0}, 2, 2)).rank == 1);

    s = schmidt_decompose(ket({0.8, 0, 0, 0.6}, 2, 2));
    CHECK(s.coefficients(0) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(s.coefficients(1) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("schmidt reconstruction and reduced spectra agree") {
    Rng rng(22);
    for (int trial = 0; trial < 25; ++trial) {
        const int da = 2 + static_cast<int>(rng() % 3);
        const int db = 2 + static_cast<int>(rng() % 3);
        PureState psi = random_pure_state(rng, da, db);
        SchmidtDecomposition s = schmidt_decompose(psi);

        Vector recon = Vector::Zero(da * db);
        for (int k = 0; k < s.coefficients.size(); ++k)
            recon += s.coefficients(k) *
                     kron(Vector(s.left_basis.col(k)), Vector(s.right_basis.col(k)));
        CHECK((recon - psi.amplitudes()).cwiseAbs().maxCoeff() <= 1e-10);

        // lambda^2 are the eigenvalues of both reduced operators
        RealVector eva = hermitian_eig(partial_trace(psi.projector(), da, db, Subsystem::B))
                             .eigenvalues;
        RealVector evb = hermitian_eig(partial_trace(psi.projector(), da, db, Subsystem::A))
                             .eigenvalues;
        const int common = std::min(da, db);
        for (int k = 0; k < common; ++k) {
            CHECK(std::abs(eva(k) - evb(k)) <= 1e-10);
            CHECK(std::abs(eva(k) - s.coefficients(k) * s.coefficients(k)) <= 1e-10);
        }
        double sum2 = s.coefficients.squaredNorm();
        CHECK(std::abs(sum2 - 1.0) <= 1e-10);
    }
}

TEST_CASE("entanglement entropy values") {
    CHECK(entanglement_entropy(ket({kInvSqrt2, 0, 0, kInvSqrt2}, 2, 2)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entanglement_entropy(ket({1, 0, 0, 0}, 2, 2)) == doctest::Approx(0.0).epsilon(1e-12));

    const double a2 = 0.8, b2 = 0.2;
    const double expected = -a2 * std::log2(a2) - b2 * std::log2(b2);
    PureState psi = ket({std::sqrt(a2), 0, 0, std::sqrt(b2)}, 2, 2);
    CHECK(entanglement_entropy(psi) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("entanglement entropy is invariant under local unitaries") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        PureState psi = random_pure_state(rng, 3, 2);
        const double before = entanglement_entropy(psi);
        const Matrix u = kron(random_unitary(rng, 3), random_unitary(rng, 2));
        PureState rotated(u * psi.amplitudes(), 3, 2);
        CHECK(std::abs(entanglement_entropy(rotated) - before) <= 1e-10);
    }
}

TEST_CASE("concurrence of Bell-form and product states") {
    PureState bell = ket({kInvSqrt2, 0, 0, kInvSqrt2}, 2, 2);
    CHECK(concurrence(to_density(bell)) == doctest::Approx(1.0).epsilon(1e-10));

    CHECK(concurrence(to_density(ket({0, 1, 0, 0}, 2, 2))) ==
          doctest::Approx(0.0).epsilon(1e-10));

    CHECK(concurrence(to_density(ket({0.8, 0, 0, 0.6}, 2, 2))) ==
          doctest::Approx(0.96).epsilon(1e-10));

    CHECK_THROWS_AS(concurrence(validate_density(Matrix::Identity(2, 2) * 0.5)), DimensionError);
}

TEST_CASE("concurrence matches 2ab on a grid of Bell-form states") {
    for (int i = 1; i < 50; ++i) {
        const double a = std::sqrt(i / 50.0);
        const double b = std::sqrt(1.0 - i / 50.0);
        PureState psi = ket({a, 0, 0, b}, 2, 2);
        CHECK(std::abs(concurrence(to_density(psi)) - 2.0 * a * b) <= 1e-10);
    }
}

TEST_CASE("log negativity of products and Bell states") {
    Rng rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        const Vector prod = kron(random_state_vector(rng, 2), random_state_vector(rng, 3));
        DensityOperator rho = validate_density(prod * prod.adjoint(), std::make_pair(2, 3));
        CHECK(std::abs(log_negativity(rho)) <= 1e-10);
    }

    const Vector bell = bell_phi_plus();
    DensityOperator rho = validate_density(bell * bell.adjoint(), std::make_pair(2, 2));
    CHECK(log_negativity(rho) == doctest::Approx(1.0).epsilon(1e-12));

    DensityOperator no_dims = validate_density(0.25 * Matrix::Identity(4, 4));
    CHECK_THROWS_AS(log_negativity(no_dims), DimensionError);
}

}  // TEST_SUITE
