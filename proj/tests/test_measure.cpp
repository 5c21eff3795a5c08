#include "qsd/measure.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace qsd;
using namespace qsd::testing;

namespace {

Measurement z_basis() {
    Matrix p0 = basis_vector(2, 0) * basis_vector(2, 0).adjoint();
    Matrix p1 = basis_vector(2, 1) * basis_vector(2, 1).adjoint();
    return Measurement({p0, p1}, {"0", "1"});
}

// Three-element qubit POVM built from scaled projectors (trine-like).
Povm trine_povm() {
    std::vector<Matrix> elems;
    for (int k = 0; k < 3; ++k) {
        const double angle = 2.0 * M_PI * k / 3.0;
        Vector v(2);
        v << std::cos(angle / 2.0), std::sin(angle / 2.0);
        elems.push_back((2.0 / 3.0) * v * v.adjoint());
    }
    return Povm(elems);
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_SUITE("measure") {

TEST_CASE("constructors enforce completeness and positivity") {
    Matrix p0 = basis_vector(2, 0) * basis_vector(2, 0).adjoint();
    CHECK_THROWS_AS(Measurement({p0}), IncompleteMeasurementError);
    CHECK_THROWS_AS(Povm({p0}), IncompleteMeasurementError);
    CHECK_THROWS_AS(Povm({2.0 * p0, Matrix::Identity(2, 2) - 2.0 * p0}), NotPsdError);
    CHECK_NOTHROW(trine_povm());
}

TEST_CASE("outcome probabilities on simple states") {
    DensityOperator mixed = validate_density(0.5 * Matrix::Identity(2, 2));
    auto p = outcome_probabilities(z_basis(), mixed);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-12));

    DensityOperator zero = validate_density(basis_vector(2, 0) * basis_vector(2, 0).adjoint());
    p = outcome_probabilities(z_basis(), zero);
    CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("law of total probability for a POVM over an ensemble") {
    Rng rng(31);
    Povm povm = trine_povm();
    for (int trial = 0; trial < 100; ++trial) {
        Ensemble e;
        const int n = 2 + static_cast<int>(rng() % 3);
        RealVector probs = random_prob_vector(rng, n);
        for (int i = 0; i < n; ++i) e.items.emplace_back(probs(i), random_pure_state(rng, 2));

        auto on_mixture = outcome_probabilities(povm, density_from_ensemble(e));
        for (std::size_t m = 0; m < povm.size(); ++m) {
            double total = 0.0;
            for (const auto& [pi, s] : e.items)
                total += pi * outcome_probabilities(povm, to_density(s))[m];
            CHECK(std::abs(on_mixture[m] - total) <= 1e-10);
        }
    }
}

TEST_CASE("posterior states") {
    DensityOperator mixed = validate_density(0.5 * Matrix::Identity(2, 2));
    DensityOperator post = posterior_state(z_basis(), mixed, 0);
    CHECK(max_abs(post.matrix() - basis_vector(2, 0) * basis_vector(2, 0).adjoint()) < 1e-12);

    DensityOperator zero = validate_density(basis_vector(2, 0) * basis_vector(2, 0).adjoint());
    CHECK_THROWS_AS(posterior_state(z_basis(), zero, 1), ZeroProbabilityError);
}

TEST_CASE("Kraus posterior on a Bell state has the predicted Schmidt pair") {
    // Alice applies M1 = diag(cos b, sin b) with b = pi/6 to half a Bell pair.
    const double beta = M_PI / 6.0;
    Matrix m1 = Matrix::Zero(2, 2), m2 = Matrix::Zero(2, 2);
    m1(0, 0) = std::cos(beta);
    m1(1, 1) = std::sin(beta);
    m2(0, 0) = std::sin(beta);
    m2(1, 1) = std::cos(beta);
    Measurement m({kron(m1, Matrix::Identity(2, 2)), kron(m2, Matrix::Identity(2, 2))});

    const Vector bell = bell_phi_plus();
    DensityOperator post =
        posterior_state(m, validate_density(bell * bell.adjoint(), std::make_pair(2, 2)), 0);

    // direct 4x4 computation: amplitudes (cos b, 0, 0, sin b)
    Vector expect(4);
    expect << std::cos(beta), 0.0, 0.0, std::sin(beta);
    CHECK(max_abs(post.matrix() - expect * expect.adjoint()) <= 1e-12);
    SchmidtDecomposition s = schmidt_decompose(PureState(expect, 2, 2));
    CHECK(s.coefficients(0) == doctest::Approx(std::cos(beta)).epsilon(1e-12));
    CHECK(s.coefficients(1) == doctest::Approx(std::sin(beta)).epsilon(1e-12));
}

TEST_CASE("forgetful measurements") {
    Vector plus(2);
    plus << kInvSqrt2, kInvSqrt2;
    DensityOperator rho = validate_density(plus * plus.adjoint());
    CHECK(max_abs(forgetful_apply(z_basis(), rho).matrix() - 0.5 * Matrix::Identity(2, 2)) <
          1e-12);

    DensityOperator mixed = validate_density(0.5 * Matrix::Identity(2, 2));
    CHECK(max_abs(forgetful_apply(z_basis(), mixed).matrix() - mixed.matrix()) < 1e-12);

    Rng rng(32);
    const Matrix u = random_unitary(rng, 2);
    Measurement unitary({u});
    DensityOperator rho2 = random_density(rng, 2);
    CHECK(max_abs(forgetful_apply(unitary, rho2).matrix() -
                  u * rho2.matrix() * u.adjoint()) < 1e-12);
}

TEST_CASE("forgetful projective application is idempotent") {
    Rng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        DensityOperator rho = random_density(rng, 2);
        DensityOperator once = forgetful_apply(z_basis(), rho);
        DensityOperator twice = forgetful_apply(z_basis(), once);
        CHECK(max_abs(once.matrix() - twice.matrix()) <= 1e-10);
    }
}

TEST_CASE("posterior remixing reproduces the forgetful state") {
    Rng rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        DensityOperator rho = random_density(rng, 2);
        Measurement m = z_basis();
        auto p = outcome_probabilities(m, rho);
        Matrix remix = Matrix::Zero(2, 2);
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (p[k] <= 1e-12) continue;
            remix += p[k] * posterior_state(m, rho, k).matrix();
        }
        CHECK(max_abs(remix - forgetful_apply(m, rho).matrix()) <= 1e-10);
    }
}

TEST_CASE("bayes posterior updates") {
    // orthogonal states with perfect projectors: posterior is a point mass
    Ensemble orth{{0.5, PureState(basis_vector(2, 0), 2)},
                  {0.5, PureState(basis_vector(2, 1), 2)}};
    Ensemble post = bayes_posterior(orth, z_basis(), 1);
    CHECK(post.items[0].first == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(post.items[1].first == doctest::Approx(1.0).epsilon(1e-12));

    // uniform prior over {|0>, |+>}, outcome |1><1|: posterior (0, 1)
    Vector plus(2);
    plus << kInvSqrt2, kInvSqrt2;
    Ensemble prior{{0.5, PureState(basis_vector(2, 0), 2)}, {0.5, PureState(plus, 2)}};
    post = bayes_posterior(prior, z_basis(), 1);
    CHECK(post.items[0].first == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(post.items[1].first == doctest::Approx(1.0).epsilon(1e-12));

    // uninformative measurement: posterior equals prior
    Matrix half = 0.5 * Matrix::Identity(2, 2);
    Povm flat({half, half});
    post = bayes_posterior(prior, flat, 0);
    CHECK(post.items[0].first == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(post.items[1].first == doctest::Approx(0.5).epsilon(1e-12));

    // impossible outcome
    Ensemble zero_only{{1.0, PureState(basis_vector(2, 0), 2)}};
    CHECK_THROWS_AS(bayes_posterior(zero_only, z_basis(), 1), ZeroProbabilityError);
}

}  // TEST_SUITE
