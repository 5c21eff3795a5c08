#pragma once

// Seeded random generators shared by the test suites. Everything is
// deterministic for a fixed seed.

#include <random>

#include "qsd/states.hpp"

namespace qsd::testing {

using Rng = std::mt19937_64;

inline Matrix random_complex_matrix(Rng& rng, int rows, int cols) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

inline Matrix random_hermitian(Rng& rng, int d) {
    Matrix m = random_complex_matrix(rng, d, d);
    return (m + m.adjoint()) / 2.0;
}

inline Matrix random_unitary(Rng& rng, int d) {
    Eigen::HouseholderQR<Matrix> qr(random_complex_matrix(rng, d, d));
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) {
        const Complex diag = r(i, i);
        if (std::abs(diag) > 1e-14) q.col(i) *= diag / std::abs(diag);
    }
    return q;
}

inline Vector random_state_vector(Rng& rng, int d) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(g(rng), g(rng));
    v /= v.norm();
    return v;
}

inline PureState random_pure_state(Rng& rng, int dim_a, int dim_b = 1) {
    return PureState(random_state_vector(rng, dim_a * dim_b), dim_a, dim_b);
}

inline DensityOperator random_density(Rng& rng, int d) {
    Matrix m = random_complex_matrix(rng, d, d);
    Matrix rho = m * m.adjoint();
    rho /= rho.trace().real();
    return validate_density((rho + rho.adjoint()) / 2.0);
}

inline RealVector random_prob_vector(Rng& rng, int d) {
    std::exponential_distribution<double> ex(1.0);
    RealVector v(d);
    for (int i = 0; i < d; ++i) v(i) = ex(rng);
    v /= v.sum();
    return v;
}

inline RealVector sorted_descending(RealVector v) {
    std::sort(v.data(), v.data() + v.size(), std::greater<double>());
    return v;
}

// x = (product of random T-transforms) y, so x is majorized by y.
inline std::pair<RealVector, RealVector> random_majorized_pair(Rng& rng, int d, int mixes = 3) {
    RealVector y = sorted_descending(random_prob_vector(rng, d));
    RealVector x = y;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, d - 1);
    for (int m = 0; m < mixes; ++m) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const double t = u(rng);
        const double xi = x(i), xj = x(j);
        x(i) = t * xi + (1.0 - t) * xj;
        x(j) = (1.0 - t) * xi + t * xj;
    }
    return {sorted_descending(x), y};
}

inline Vector basis_vector(int d, int k) {
    Vector v = Vector::Zero(d);
    v(k) = 1.0;
    return v;
}

inline Vector bell_phi_plus() {
    Vector v(4);
    v << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
    return v;
}

}  // namespace qsd::testing
