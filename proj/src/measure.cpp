#include "qsd/measure.hpp"

#include <cmath>

namespace qsd {

namespace {

std::vector<std::string> default_labels(std::size_t n, const std::vector<std::string>& given) {
    if (!given.empty()) {
        if (given.size() != n) throw DimensionError("measurement: label count mismatch");
        return given;
    }
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
    return out;
}

double clamp_probability(double p) {
    if (p < 0.0) {
        if (p < -tol::psd) throw Error("negative outcome probability " + std::to_string(p));
        return 0.0;
    }
    return std::min(p, 1.0);
}

}  // namespace

Measurement::Measurement(std::vector<Matrix> operators, std::vector<std::string> labels)
    : ops_(std::move(operators)), labels_(default_labels(ops_.size(), labels)) {
    if (ops_.empty()) throw Error("Measurement: no operators");
    const Eigen::Index d = ops_.front().cols();
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& m : ops_) {
        if (m.cols() != d) throw DimensionError("Measurement: operator domain mismatch");
        require_finite(m, "Measurement");
        sum += m.adjoint() * m;
    }
    if (max_abs(sum - Matrix::Identity(d, d)) > tol::completeness)
        throw IncompleteMeasurementError("Measurement: sum M^dagger M deviates from identity by " +
                                         std::to_string(max_abs(sum - Matrix::Identity(d, d))));
}

double Measurement::completeness_residual() const {
    const Eigen::Index d = ops_.front().cols();
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& m : ops_) sum += m.adjoint() * m;
    return max_abs(sum - Matrix::Identity(d, d));
}

Povm::Povm(std::vector<Matrix> elements, std::vector<std::string> labels)
    : elems_(std::move(elements)), labels_(default_labels(elems_.size(), labels)) {
    if (elems_.empty()) throw Error("Povm: no elements");
    const Eigen::Index d = elems_.front().cols();
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& e : elems_) {
        if (e.rows() != d || e.cols() != d) throw DimensionError("Povm: element size mismatch");
        require_finite(e, "Povm");
        if (!is_hermitian(e)) throw NotHermitianError("Povm: element not Hermitian");
        HermitianEig eig = hermitian_eig(e);
        const double min_eig = eig.eigenvalues(eig.eigenvalues.size() - 1);
        if (min_eig < -tol::psd)
            throw NotPsdError("Povm: element has negative eigenvalue", min_eig);
        sum += e;
    }
    if (max_abs(sum - Matrix::Identity(d, d)) > tol::completeness)
        throw IncompleteMeasurementError("Povm: elements do not sum to identity");
}

std::vector<double> outcome_probabilities(const Measurement& m, const DensityOperator& rho) {
    if (m.dim() != rho.dim()) throw DimensionError("outcome_probabilities: dimension mismatch");
    std::vector<double> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Matrix& op = m.operators()[i];
        out[i] = clamp_probability((op.adjoint() * op * rho.matrix()).trace().real());
    }
    return out;
}

std::vector<double> outcome_probabilities(const Povm& m, const DensityOperator& rho) {
    if (m.dim() != rho.dim()) throw DimensionError("outcome_probabilities: dimension mismatch");
    std::vector<double> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i] = clamp_probability((m.elements()[i] * rho.matrix()).trace().real());
    return out;
}

DensityOperator posterior_state(const Measurement& m, const DensityOperator& rho,
                                std::size_t outcome) {
    if (outcome >= m.size()) throw DimensionError("posterior_state: no such outcome");
    const Matrix& op = m.operators()[outcome];
    if (op.cols() != rho.dim()) throw DimensionError("posterior_state: dimension mismatch");
    const double p = (op.adjoint() * op * rho.matrix()).trace().real();
    if (p <= tol::zero_prob)
        throw ZeroProbabilityError("posterior_state: outcome probability " + std::to_string(p));
    Matrix post = op * rho.matrix() * op.adjoint() / p;
    post = (post + post.adjoint()) / 2.0;  // scrub rounding noise
    return validate_density(post);
}

DensityOperator forgetful_apply(const Measurement& m, const DensityOperator& rho) {
    if (m.dim() != rho.dim()) throw DimensionError("forgetful_apply: dimension mismatch");
    const Eigen::Index d = m.operators().front().rows();
    Matrix out = Matrix::Zero(d, d);
    for (const Matrix& op : m.operators()) out += op * rho.matrix() * op.adjoint();
    out = (out + out.adjoint()) / 2.0;
    return validate_density(out);
}

namespace {

template <typename M>
Ensemble bayes_impl(const Ensemble& prior, const M& m, std::size_t outcome) {
    prior.validate();
    if (outcome >= m.size()) throw DimensionError("bayes_posterior: no such outcome");
    std::vector<double> joint(prior.size());
    double p_m = 0.0;
    for (std::size_t i = 0; i < prior.size(); ++i) {
        const auto& [p_i, s] = prior.items[i];
        const double cond = outcome_probabilities(m, to_density(s))[outcome];
        joint[i] = cond * p_i;
        if (joint[i] < tol::hermitian) joint[i] = 0.0;  // clamp rounding noise
        p_m += joint[i];
    }
    if (p_m <= tol::zero_prob)
        throw ZeroProbabilityError("bayes_posterior: outcome probability " + std::to_string(p_m));
    Ensemble post;
    for (std::size_t i = 0; i < prior.size(); ++i)
        post.items.emplace_back(joint[i] / p_m, prior.items[i].second);
    post.validate();
    return post;
}

}  // namespace

Ensemble bayes_posterior(const Ensemble& prior, const Measurement& m, std::size_t outcome) {
    return bayes_impl(prior, m, outcome);
}

Ensemble bayes_posterior(const Ensemble& prior, const Povm& m, std::size_t outcome) {
    return bayes_impl(prior, m, outcome);
}

}  // namespace qsd
