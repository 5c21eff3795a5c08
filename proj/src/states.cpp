#include "qsd/states.hpp"

#include <cmath>

namespace qsd {

PureState::PureState(Vector amplitudes, int dim_a, int dim_b)
    : amps_(std::move(amplitudes)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a_ < 1 || dim_b_ < 1)
        throw DimensionError("PureState: dimensions must be positive");
    if (static_cast<Eigen::Index>(dim_a_) * dim_b_ != amps_.size())
        throw DimensionError("PureState: dA*dB does not match amplitude count");
    require_finite(amps_, "PureState");
    const double norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol::norm)
        throw Error("PureState: amplitudes not normalized (|1 - sum |a|^2| = " +
                    std::to_string(std::abs(norm2 - 1.0)) + ")");
}

Matrix PureState::coefficient_matrix() const {
    Matrix c(dim_a_, dim_b_);
    for (int i = 0; i < dim_a_; ++i)
        for (int j = 0; j < dim_b_; ++j) c(i, j) = amps_(i * dim_b_ + j);
    return c;
}

Matrix PureState::projector() const { return amps_ * amps_.adjoint(); }

Complex overlap(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw DimensionError("overlap: dimension mismatch");
    return a.amplitudes().dot(b.amplitudes());
}

DensityOperator DensityOperator::with_dims(int dim_a, int dim_b) const {
    if (static_cast<Eigen::Index>(dim_a) * dim_b != mat_.rows())
        throw DimensionError("with_dims: split does not match operator size");
    return DensityOperator(mat_, std::make_pair(dim_a, dim_b));
}

DensityOperator validate_density(const Matrix& m, std::optional<std::pair<int, int>> dims) {
    if (m.rows() != m.cols()) throw DimensionError("validate_density: matrix not square");
    require_finite(m, "validate_density");
    if (!is_hermitian(m))
        throw NotHermitianError("validate_density: operator is not Hermitian");
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > tol::trace)
        throw TraceError("validate_density: trace is " + std::to_string(tr) + ", expected 1");
    HermitianEig eig = hermitian_eig(m);
    const double min_eig = eig.eigenvalues(eig.eigenvalues.size() - 1);
    if (min_eig < -tol::psd)
        throw NotPsdError("validate_density: negative eigenvalue " + std::to_string(min_eig),
                          min_eig);
    if (dims && static_cast<Eigen::Index>(dims->first) * dims->second != m.rows())
        throw DimensionError("validate_density: bipartite split does not match size");
    return DensityOperator(m, dims);
}

DensityOperator to_density(const State& s) {
    if (std::holds_alternative<PureState>(s)) {
        const PureState& p = std::get<PureState>(s);
        return validate_density(p.projector(),
                                p.dim_b() > 1 ? std::make_optional(std::make_pair(p.dim_a(), p.dim_b()))
                                              : std::nullopt);
    }
    return std::get<DensityOperator>(s);
}

int state_dim(const State& s) {
    return std::holds_alternative<PureState>(s) ? std::get<PureState>(s).dim()
                                                : std::get<DensityOperator>(s).dim();
}

Ensemble::Ensemble(std::initializer_list<std::pair<double, State>> init) : items(init) {
    validate();
}

void Ensemble::validate() const {
    if (items.empty()) throw Error("Ensemble: empty");
    double total = 0.0;
    const int d = state_dim(items.front().second);
    for (const auto& [p, s] : items) {
        if (p < -tol::trace) throw Error("Ensemble: negative probability");
        if (state_dim(s) != d) throw DimensionError("Ensemble: mixed state dimensions");
        total += p;
    }
    if (std::abs(total - 1.0) > tol::trace)
        throw Error("Ensemble: probabilities sum to " + std::to_string(total));
}

DensityOperator density_from_ensemble(const Ensemble& e) {
    e.validate();
    const int d = state_dim(e.items.front().second);
    Matrix rho = Matrix::Zero(d, d);
    for (const auto& [p, s] : e.items) rho += p * to_density(s).matrix();
    return validate_density(rho);
}

PureState purify(const DensityOperator& rho) {
    HermitianEig eig = hermitian_eig(rho.matrix());
    const int d = rho.dim();
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(d) * d);
    for (int k = 0; k < d; ++k) {
        const double w = std::max(0.0, eig.eigenvalues(k));
        if (w <= 0.0) continue;
        const double r = std::sqrt(w);
        for (int i = 0; i < d; ++i) amps(i * d + k) += r * eig.eigenvectors(i, k);
    }
    amps /= amps.norm();
    return PureState(std::move(amps), d, d);
}

SchmidtDecomposition schmidt_decompose(const PureState& psi) {
    if (psi.dim_b() < 1) throw DimensionError("schmidt_decompose: missing dims");
    SvdResult s = svd(psi.coefficient_matrix());
    SchmidtDecomposition out;
    out.coefficients = s.singular_values;
    out.left_basis = s.u;
    out.right_basis = s.v.transpose();  // columns |k_B>, row k of v
    out.rank = 0;
    for (Eigen::Index i = 0; i < out.coefficients.size(); ++i)
        if (out.coefficients(i) > tol::rank_cut) ++out.rank;
    return out;
}

double entanglement_entropy(const PureState& psi) {
    SchmidtDecomposition s = schmidt_decompose(psi);
    double h = 0.0;
    for (Eigen::Index i = 0; i < s.coefficients.size(); ++i) {
        const double p = s.coefficients(i) * s.coefficients(i);
        if (p > 1e-15) h -= p * std::log2(p);
    }
    return h;
}

double concurrence(const DensityOperator& rho) {
    if (rho.dim() != 4)
        throw DimensionError("concurrence: defined for two-qubit states only");
    Matrix sy(2, 2);
    sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    const Matrix yy = kron(sy, sy);
    // The lambda_i are the singular values of sqrt(rho) YY sqrt(rho)^*, which
    // avoids taking square roots of near-zero eigenvalues.
    const Matrix root = hermitian_sqrt(rho.matrix());
    RealVector lam = svd(root * yy * root.conjugate()).singular_values;
    return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

double log_negativity(const DensityOperator& rho, int dim_a, int dim_b) {
    const Matrix pt = partial_transpose(rho.matrix(), dim_a, dim_b);
    const double value = std::log2(trace_norm(pt));
    return value < 0.0 && value > -1e-9 ? 0.0 : value;
}

double log_negativity(const DensityOperator& rho) {
    if (!rho.dims()) throw DimensionError("log_negativity: missing bipartite dims");
    return log_negativity(rho, rho.dims()->first, rho.dims()->second);
}

}  // namespace qsd
