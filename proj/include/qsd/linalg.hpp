#pragma once

// Dense complex linear algebra for small operators (dim <= 64): spectral
// decompositions, SVD, Kronecker products, partial trace/transpose, trace norm.

#include "qsd/types.hpp"

namespace qsd {

enum class Subsystem { A, B };

// Result of diagonalizing a Hermitian matrix. Eigenvalues descending,
// eigenvector columns match the eigenvalue order.
struct HermitianEig {
    RealVector eigenvalues;
    Matrix eigenvectors;
};

// a = u * diag(singular_values) * v; singular values nonnegative descending.
struct SvdResult {
    Matrix u;
    RealVector singular_values;
    Matrix v;
};

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

// Reduced operator of a (dA*dB)x(dA*dB) matrix. Tracing over B keeps A.
Matrix partial_trace(const Matrix& rho, int dim_a, int dim_b, Subsystem over);

// Transpose on the A indices only.
Matrix partial_transpose(const Matrix& rho, int dim_a, int dim_b);

// Requires ||a - a^dagger||_max <= 1e-10; rejects instead of symmetrizing.
HermitianEig hermitian_eig(const Matrix& a);

SvdResult svd(const Matrix& a);

// Sum of singular values; equals sum |eigenvalue| for Hermitian input.
double trace_norm(const Matrix& a);

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tolerance = tol::hermitian);

// Hermitian square root via spectral decomposition; negative rounding noise
// in the spectrum is clamped to zero.
Matrix hermitian_sqrt(const Matrix& a);

}  // namespace qsd
