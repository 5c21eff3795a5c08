#include "qsd/discriminate.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace qsd;
using namespace qsd::testing;

namespace {

PureState qubit(double c0, double c1) {
    Vector v(2);
    v << c0, c1;
    return PureState(v / v.norm(), 2);
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_SUITE("discriminate") {

TEST_CASE("perfect discrimination of orthogonal states") {
    DiscriminationResult r =
        perfect_discrimination({PureState(basis_vector(2, 0), 2), PureState(basis_vector(2, 1), 2)});
    CHECK(r.error_probability == 0.0);
    CHECK(r.per_state_stats[0].success == doctest::Approx(1.0));

    CHECK_THROWS_AS(
        perfect_discrimination({qubit(1, 0), qubit(kInvSqrt2, kInvSqrt2)}),
        NotOrthogonalError);

    // single state in a qutrit space: P0 completes the measurement
    DiscriminationResult r3 = perfect_discrimination({PureState(basis_vector(3, 0), 3)});
    CHECK(r3.povm().size() == 2);
    Rng rng(51);
    DensityOperator any = random_density(rng, 3);
    auto p = outcome_probabilities(r3.povm(), any);
    double total = 0.0;
    for (double v : p) total += v;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("helstrom on orthogonal, identical and known pairs") {
    DensityOperator z0 = to_density(qubit(1, 0));
    DensityOperator z1 = to_density(qubit(0, 1));
    CHECK(helstrom_two_state(0.3, z0, 0.7, z1).error_probability ==
          doctest::Approx(0.0).epsilon(1e-12));

    // identical states: error = min(p1, p2) since Tr|Lambda| = |p2 - p1|
    CHECK(helstrom_two_state(0.3, z0, 0.7, z0).error_probability ==
          doctest::Approx(0.3).epsilon(1e-12));

    // overlap cos(pi/4) at equal priors
    const double c = std::cos(M_PI / 8.0), s = std::sin(M_PI / 8.0);
    PureState psi1 = qubit(c, s), psi2 = qubit(c, -s);
    DiscriminationResult r = helstrom_two_state(0.5, to_density(psi1), 0.5, to_density(psi2));
    CHECK(r.error_probability == doctest::Approx(0.146447).epsilon(1e-5));
    CHECK(r.error_probability ==
          doctest::Approx(0.5 * (1.0 - std::sqrt(0.5))).epsilon(1e-12));
}

TEST_CASE("helstrom POVM is consistent with its bound through the statistics") {
    Rng rng(52);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 3);
        DensityOperator r1 = random_density(rng, d);
        DensityOperator r2 = random_density(rng, d);
        std::uniform_real_distribution<double> u(0.05, 0.95);
        const double p1 = u(rng);
        DiscriminationResult r = helstrom_two_state(p1, r1, 1.0 - p1, r2);

        // error evaluated through the measurement statistics
        auto probs1 = outcome_probabilities(r.povm(), r1);
        auto probs2 = outcome_probabilities(r.povm(), r2);
        const double err = p1 * probs1[1] + (1.0 - p1) * probs2[0];
        CHECK(std::abs(err - r.error_probability) <= 1e-10);

        // p_er = p2 - Tr(Lambda E2) consistency
        const Matrix lambda = (1.0 - p1) * r2.matrix() - p1 * r1.matrix();
        const double via_e2 =
            (1.0 - p1) - (lambda * r.povm().elements()[1]).trace().real();
        CHECK(std::abs(via_e2 - r.error_probability) <= 1e-10);
    }
}

TEST_CASE("pure-state bound special values and operator agreement") {
    CHECK(helstrom_pure_bound(0.5, 0.5, 0.0) == doctest::Approx(0.0));
    CHECK(helstrom_pure_bound(0.5, 0.5, 1.0) == doctest::Approx(0.5));

    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        PureState a = random_pure_state(rng, 2);
        PureState b = random_pure_state(rng, 2);
        std::uniform_real_distribution<double> u(0.05, 0.95);
        const double p1 = u(rng);
        const double via_bound = helstrom_pure_bound(p1, 1.0 - p1, overlap(a, b));
        const double via_operator =
            helstrom_two_state(p1, to_density(a), 1.0 - p1, to_density(b)).error_probability;
        CHECK(std::abs(via_bound - via_operator) <= 1e-10);
    }
}

TEST_CASE("optimality verifier") {
    // Helstrom output is optimal
    Rng rng(54);
    PureState a = random_pure_state(rng, 2), b = random_pure_state(rng, 2);
    DiscriminationResult r = helstrom_two_state(0.4, to_density(a), 0.6, to_density(b));
    Ensemble e{{0.4, a}, {0.6, b}};
    CHECK(verify_min_error_optimality(e, r.povm()).optimal);

    // guessing the likelier of two identical states is optimal (Lambda >= 0)
    DensityOperator mixed = validate_density(0.5 * Matrix::Identity(2, 2));
    Ensemble guess_e{{0.1, mixed}, {0.9, mixed}};
    Povm guess({Matrix::Zero(2, 2), Matrix::Identity(2, 2)});
    CHECK(verify_min_error_optimality(guess_e, guess).optimal);

    // an off-axis projective measurement on a nonorthogonal pair is not
    Ensemble skew{{0.5, qubit(1, 0)}, {0.5, qubit(kInvSqrt2, kInvSqrt2)}};
    Matrix p0 = basis_vector(2, 0) * basis_vector(2, 0).adjoint();
    Povm naive({p0, Matrix::Identity(2, 2) - p0});
    CHECK_FALSE(verify_min_error_optimality(skew, naive).optimal);
}

TEST_CASE("brute force oracle matches the closed form") {
    Ensemble orth{{0.5, qubit(1, 0)}, {0.5, qubit(0, 1)}};
    CHECK(brute_force_min_error(orth, 24) <= 1e-9);

    const double c = std::cos(M_PI / 8.0), s = std::sin(M_PI / 8.0);
    Ensemble eq{{0.5, qubit(c, s)}, {0.5, qubit(c, -s)}};
    CHECK(std::abs(brute_force_min_error(eq, 32) - 0.5 * (1.0 - std::sqrt(0.5))) <= 1e-6);

    Ensemble biased{{0.9, qubit(c, s)}, {0.1, qubit(c, -s)}};
    const double expected = helstrom_pure_bound(0.9, 0.1, std::cos(M_PI / 4.0));
    CHECK(std::abs(brute_force_min_error(biased, 32) - expected) <= 1e-6);
}

TEST_CASE("uqsd regimes") {
    // orthogonal states never fail
    DiscriminationResult r = uqsd_two_state(0.4, qubit(1, 0), 0.6, qubit(0, 1));
    CHECK(r.failure_probability == doctest::Approx(0.0).epsilon(1e-12));

    // equal priors: failure equals the overlap (IDP bound)
    const double s = 0.5;
    PureState psi1 = qubit(1, 0);
    PureState psi2 = qubit(s, std::sqrt(1 - s * s));
    r = uqsd_two_state(0.5, psi1, 0.5, psi2);
    CHECK(r.strategy == Strategy::Unambiguous);
    CHECK(r.failure_probability == doctest::Approx(s).epsilon(1e-12));
    CHECK(r.povm().size() == 3);

    // below the lower edge s^2/(1+s^2) = 0.2: first projective strategy
    r = uqsd_two_state(0.1, psi1, 0.9, psi2);
    CHECK(r.failure_probability == doctest::Approx(0.1 + 0.9 * s * s).epsilon(1e-12));
    CHECK(r.povm().size() == 2);

    CHECK_THROWS_AS(uqsd_two_state(0.5, psi1, 0.5, qubit(1, 0)), LinearlyDependentError);
}

TEST_CASE("uqsd conclusive outcomes are error free in all regimes") {
    Rng rng(55);
    for (double p1 : {0.1, 0.3, 0.5, 0.7, 0.92}) {
        PureState psi1 = random_pure_state(rng, 3);
        PureState psi2 = random_pure_state(rng, 3);
        DiscriminationResult r = uqsd_two_state(p1, psi1, 1.0 - p1, psi2);
        const auto& elems = r.povm().elements();
        const auto& labels = r.povm().labels();
        for (std::size_t k = 0; k < elems.size(); ++k) {
            if (labels[k] == "1")
                CHECK(std::abs((psi2.amplitudes().adjoint() * elems[k] * psi2.amplitudes())(0)) <=
                      1e-10);
            if (labels[k] == "2")
                CHECK(std::abs((psi1.amplitudes().adjoint() * elems[k] * psi1.amplitudes())(0)) <=
                      1e-10);
        }
        // per-state failure product obeys the overlap constraint
        const double s2 = std::norm(overlap(psi1, psi2));
        CHECK(r.per_state_stats[0].inconclusive * r.per_state_stats[1].inconclusive >=
              s2 - 1e-10);
        // unambiguity costs at least twice the Helstrom error
        const double helstrom =
            helstrom_two_state(p1, to_density(psi1), 1.0 - p1, to_density(psi2))
                .error_probability;
        CHECK(r.failure_probability >= 2.0 * helstrom - 1e-10);
    }
}

TEST_CASE("reciprocal states are biorthogonal") {
    // orthonormal basis: reciprocal set is the same basis
    std::vector<PureState> basis = {PureState(basis_vector(2, 0), 2),
                                    PureState(basis_vector(2, 1), 2)};
    auto recip = reciprocal_states(basis);
    CHECK((recip[0] - basis_vector(2, 0)).norm() <= 1e-12);
    CHECK((recip[1] - basis_vector(2, 1)).norm() <= 1e-12);

    // {|0>, |+>}: verified against the hand-inverted 2x2 Gram matrix
    std::vector<PureState> pair = {qubit(1, 0), qubit(kInvSqrt2, kInvSqrt2)};
    recip = reciprocal_states(pair);
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            CHECK(std::abs(pair[k].amplitudes().dot(recip[i]) - (k == i ? 1.0 : 0.0)) <= 1e-9);

    Rng rng(56);
    std::vector<PureState> trio = {random_pure_state(rng, 3), random_pure_state(rng, 3),
                                   random_pure_state(rng, 3)};
    recip = reciprocal_states(trio);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(trio[k].amplitudes().dot(recip[i]) - (k == i ? 1.0 : 0.0)) <= 1e-9);

    CHECK_THROWS_AS(reciprocal_states({qubit(1, 0), qubit(1, 0)}), LinearlyDependentError);
}

TEST_CASE("qss feasibility") {
    PureState psi1 = qubit(1, 0);
    PureState psi2 = qubit(0.5, std::sqrt(0.75));
    OverlapMatrix a = overlap_matrix({psi1, psi2});

    // identity separation: A' = A with K all ones gives F = 0
    Matrix ones = Matrix::Ones(2, 2);
    QssFeasibility f = qss_feasibility(a, a, ones);
    CHECK(f.feasible);
    CHECK(max_abs(f.failure_operator) <= 1e-12);

    // UQSD target A' = I with the optimal-success K: feasible exactly inside
    // the existence interval [0.2, 0.8] at overlap 0.5
    OverlapMatrix id{Matrix::Identity(2, 2)};
    const double s = 0.5;
    auto k_for = [&](double p1) {
        Matrix k = Matrix::Zero(2, 2);
        k(0, 0) = 1.0 - std::sqrt((1.0 - p1) / p1) * s;
        k(1, 1) = 1.0 - std::sqrt(p1 / (1.0 - p1)) * s;
        return k;
    };
    CHECK(qss_feasibility(a, id, k_for(0.5)).feasible);
    CHECK(qss_feasibility(a, id, k_for(0.25)).feasible);
    CHECK_FALSE(qss_feasibility(a, id, k_for(0.1)).feasible);   // K_11 < 0
    CHECK_FALSE(qss_feasibility(a, id, k_for(0.95)).feasible);  // K_22 < 0

    Matrix bad = Matrix::Identity(2, 2);
    bad(1, 1) = -0.2;
    CHECK_FALSE(qss_feasibility(a, a, bad).feasible);
}

TEST_CASE("qss success operators") {
    PureState psi1 = qubit(1, 0);
    PureState psi2 = qubit(0.5, std::sqrt(0.75));

    // identity separation: unitary-like success with certainty
    QssOperators ops = qss_success_operators({{0.5, psi1}, {0.5, psi2}}, {psi1, psi2},
                                             Matrix::Ones(2, 2));
    CHECK(ops.total_success_probability == doctest::Approx(1.0).epsilon(1e-10));

    // two-state UQSD at equal priors: p_S = 1 - s
    const double s = 0.5;
    Matrix k = Matrix::Zero(2, 2);
    k(0, 0) = 1.0 - s;
    k(1, 1) = 1.0 - s;
    std::vector<PureState> orth = {qubit(1, 0), qubit(0, 1)};
    ops = qss_success_operators({{0.5, psi1}, {0.5, psi2}}, orth, k);
    CHECK(ops.total_success_probability == doctest::Approx(1.0 - s).epsilon(1e-10));

    // success operators act as M|psi_i> proportional to |psi_i'>
    Rng rng(57);
    for (int trial = 0; trial < 20; ++trial) {
        PureState in1 = random_pure_state(rng, 2), in2 = random_pure_state(rng, 2);
        if (std::abs(overlap(in1, in2)) > 0.95) continue;
        std::vector<PureState> targets = {PureState(basis_vector(2, 0), 2),
                                          PureState(basis_vector(2, 1), 2)};
        const double s12 = std::abs(overlap(in1, in2));
        Matrix kk = Matrix::Zero(2, 2);
        kk(0, 0) = 1.0 - s12;
        kk(1, 1) = 1.0 - s12;
        QssOperators qs = qss_success_operators({{0.5, in1}, {0.5, in2}}, targets, kk);
        double captured1 = 0.0, captured2 = 0.0;
        for (const Matrix& m : qs.success_operators) {
            const Vector out1 = m * in1.amplitudes();
            const Vector out2 = m * in2.amplitudes();
            // residual orthogonal to the target direction must vanish
            const Vector res1 = out1 - targets[0].amplitudes().dot(out1) * targets[0].amplitudes();
            const Vector res2 = out2 - targets[1].amplitudes().dot(out2) * targets[1].amplitudes();
            CHECK(res1.norm() <= 1e-9);
            CHECK(res2.norm() <= 1e-9);
            captured1 += out1.squaredNorm();
            captured2 += out2.squaredNorm();
        }
        CHECK(captured1 == doctest::Approx(kk(0, 0).real()).epsilon(1e-9));
        CHECK(captured2 == doctest::Approx(kk(1, 1).real()).epsilon(1e-9));
    }

    Matrix infeasible = Matrix::Identity(2, 2) * 2.0;
    CHECK_THROWS_AS(
        qss_success_operators({{0.5, psi1}, {0.5, psi2}},
                              {qubit(1, 0), qubit(0, 1)}, infeasible),
        InfeasibleError);
}

}  // TEST_SUITE
