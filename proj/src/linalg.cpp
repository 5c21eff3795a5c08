#include "qsd/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <numeric>

namespace qsd {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

static void check_bipartite(const Matrix& rho, int dim_a, int dim_b, const char* op) {
    if (dim_a < 1 || dim_b < 1)
        throw DimensionError(std::string(op) + ": dimensions must be positive");
    const Eigen::Index d = static_cast<Eigen::Index>(dim_a) * dim_b;
    if (rho.rows() != d || rho.cols() != d)
        throw DimensionError(std::string(op) + ": operator is not (dA*dB) x (dA*dB)");
}

Matrix partial_trace(const Matrix& rho, int dim_a, int dim_b, Subsystem over) {
    check_bipartite(rho, dim_a, dim_b, "partial_trace");
    if (over == Subsystem::B) {
        Matrix out = Matrix::Zero(dim_a, dim_a);
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j)
                for (int b = 0; b < dim_b; ++b)
                    out(i, j) += rho(i * dim_b + b, j * dim_b + b);
        return out;
    }
    Matrix out = Matrix::Zero(dim_b, dim_b);
    for (int i = 0; i < dim_b; ++i)
        for (int j = 0; j < dim_b; ++j)
            for (int a = 0; a < dim_a; ++a)
                out(i, j) += rho(a * dim_b + i, a * dim_b + j);
    return out;
}

Matrix partial_transpose(const Matrix& rho, int dim_a, int dim_b) {
    check_bipartite(rho, dim_a, dim_b, "partial_transpose");
    Matrix out(rho.rows(), rho.cols());
    for (int a1 = 0; a1 < dim_a; ++a1)
        for (int a2 = 0; a2 < dim_a; ++a2)
            for (int b1 = 0; b1 < dim_b; ++b1)
                for (int b2 = 0; b2 < dim_b; ++b2)
                    out(a1 * dim_b + b1, a2 * dim_b + b2) = rho(a2 * dim_b + b1, a1 * dim_b + b2);
    return out;
}

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tolerance;
}

HermitianEig hermitian_eig(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("hermitian_eig: matrix not square");
    require_finite(a, "hermitian_eig");
    if (!is_hermitian(a))
        throw NotHermitianError("hermitian_eig: input exceeds Hermiticity tolerance");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success)
        throw Error("hermitian_eig: eigensolver failed to converge");
    const Eigen::Index n = a.rows();
    HermitianEig out;
    out.eigenvalues = RealVector(n);
    out.eigenvectors = Matrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {  // Eigen sorts ascending
        out.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
        out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

SvdResult svd(const Matrix& a) {
    require_finite(a, "svd");
    Eigen::JacobiSVD<Matrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out;
    out.u = solver.matrixU();
    out.singular_values = solver.singularValues();
    out.v = solver.matrixV().adjoint();  // a = u * diag(s) * v
    return out;
}

double trace_norm(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("trace_norm: matrix not square");
    require_finite(a, "trace_norm");
    Eigen::JacobiSVD<Matrix> solver(a);
    return solver.singularValues().sum();
}

Matrix hermitian_sqrt(const Matrix& a) {
    HermitianEig eig = hermitian_eig(a);
    RealVector s = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors * s.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace qsd
