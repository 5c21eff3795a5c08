#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qsd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Default tolerances used across the library. Absolute, since all operators
// handled here are unit scale (traces and norms close to one).
namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double psd = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double norm = 1e-10;
inline constexpr double completeness = 1e-9;
inline constexpr double majorization = 1e-10;
inline constexpr double gram_det = 1e-12;
inline constexpr double zero_prob = 1e-12;
inline constexpr double rank_cut = 1e-12;
}  // namespace tol

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};
struct NotHermitianError : Error {
    using Error::Error;
};
struct NotPsdError : Error {
    NotPsdError(const std::string& what, double min_eig)
        : Error(what), min_eigenvalue(min_eig) {}
    double min_eigenvalue;
};
struct TraceError : Error {
    using Error::Error;
};
struct NotFiniteError : Error {
    using Error::Error;
};
struct ZeroProbabilityError : Error {
    using Error::Error;
};
struct IncompleteMeasurementError : Error {
    using Error::Error;
};
struct NotOrthogonalError : Error {
    using Error::Error;
};
struct LinearlyDependentError : Error {
    using Error::Error;
};
struct NotMajorizedError : Error {
    using Error::Error;
};
struct NotDoublyStochasticError : Error {
    using Error::Error;
};
struct SingularDensityError : Error {
    using Error::Error;
};
struct InfeasibleError : Error {
    using Error::Error;
};

inline void require_finite(const Matrix& m, const char* where) {
    if (!m.allFinite()) throw NotFiniteError(std::string(where) + ": non-finite entries");
}
inline void require_finite(const Vector& v, const char* where) {
    if (!v.allFinite()) throw NotFiniteError(std::string(where) + ": non-finite entries");
}

}  // namespace qsd
