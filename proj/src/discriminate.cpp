#include "qsd/discriminate.hpp"

#include <algorithm>
#include <cmath>

namespace qsd {

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Perfect: return "Perfect";
        case Strategy::MinError: return "MinError";
        case Strategy::Unambiguous: return "Unambiguous";
        case Strategy::Qss: return "QSS";
    }
    return "?";
}

OverlapMatrix overlap_matrix(const std::vector<PureState>& states) {
    const int n = static_cast<int>(states.size());
    if (n == 0) throw Error("overlap_matrix: no states");
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = overlap(states[i], states[j]);
    return OverlapMatrix{std::move(a)};
}

DiscriminationResult perfect_discrimination(const std::vector<PureState>& states) {
    const int n = static_cast<int>(states.size());
    if (n == 0) throw Error("perfect_discrimination: no states");
    const int d = states.front().dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(overlap(states[i], states[j])) > tol::hermitian)
                throw NotOrthogonalError(
                    "perfect_discrimination: only possible for orthogonal states");

    std::vector<Matrix> elems;
    std::vector<std::string> labels;
    Matrix sum = Matrix::Zero(d, d);
    for (int i = 0; i < n; ++i) {
        elems.push_back(states[i].projector());
        labels.push_back(std::to_string(i));
        sum += elems.back();
    }
    if (n < d) {
        elems.push_back(Matrix::Identity(d, d) - sum);
        labels.push_back("rest");
    }
    DiscriminationResult res(Strategy::Perfect, Povm(std::move(elems), std::move(labels)));
    res.error_probability = 0.0;
    res.failure_probability = 0.0;
    res.per_state_stats.assign(n, PerStateStats{1.0, 0.0, 0.0});
    return res;
}

DiscriminationResult helstrom_two_state(double p1, const DensityOperator& rho1, double p2,
                                        const DensityOperator& rho2) {
    if (std::abs(p1 + p2 - 1.0) > tol::trace)
        throw Error("helstrom_two_state: priors must sum to 1");
    if (rho1.dim() != rho2.dim()) throw DimensionError("helstrom_two_state: dimension mismatch");
    const int d = rho1.dim();
    const Matrix lambda = p2 * rho2.matrix() - p1 * rho1.matrix();
    HermitianEig eig = hermitian_eig(lambda);

    Matrix e1 = Matrix::Zero(d, d);
    Matrix e2 = Matrix::Zero(d, d);
    double abs_sum = 0.0;
    for (int k = 0; k < d; ++k) {
        const Vector v = eig.eigenvectors.col(k);
        if (eig.eigenvalues(k) < 0.0)
            e1 += v * v.adjoint();
        else
            e2 += v * v.adjoint();  // zero eigenvalues assigned to E2
        abs_sum += std::abs(eig.eigenvalues(k));
    }
    const double error = 0.5 * (1.0 - abs_sum);

    DiscriminationResult res(Strategy::MinError, Povm({e1, e2}, {"1", "2"}));
    res.error_probability = error;
    res.failure_probability = 0.0;
    const double s1 = (e1 * rho1.matrix()).trace().real();
    const double s2 = (e2 * rho2.matrix()).trace().real();
    res.per_state_stats = {PerStateStats{s1, 1.0 - s1, 0.0}, PerStateStats{s2, 1.0 - s2, 0.0}};
    return res;
}

double helstrom_pure_bound(double p1, double p2, Complex ov) {
    if (std::abs(p1 + p2 - 1.0) > tol::trace)
        throw Error("helstrom_pure_bound: priors must sum to 1");
    const double s2 = std::norm(ov);
    if (s2 > 1.0 + tol::norm) throw Error("helstrom_pure_bound: |overlap| exceeds 1");
    const double arg = std::max(0.0, 1.0 - 4.0 * p1 * p2 * std::min(1.0, s2));
    return 0.5 * (1.0 - std::sqrt(arg));
}

OptimalityDiagnostics verify_min_error_optimality(const Ensemble& e, const Povm& povm) {
    e.validate();
    if (e.size() != povm.size())
        throw DimensionError("verify_min_error_optimality: state/operator count mismatch");
    const int d = povm.dim();
    std::vector<Matrix> rho;
    std::vector<double> p;
    for (const auto& [pi, s] : e.items) {
        rho.push_back(to_density(s).matrix());
        p.push_back(pi);
    }

    Matrix gamma = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < rho.size(); ++i) gamma += p[i] * rho[i] * povm.elements()[i];

    OptimalityDiagnostics diag;
    diag.hermiticity_residual = max_abs(gamma - gamma.adjoint());
    const Matrix gamma_h = (gamma + gamma.adjoint()) / 2.0;
    for (std::size_t j = 0; j < rho.size(); ++j) {
        HermitianEig ev = hermitian_eig(p[j] * rho[j] - gamma_h);
        diag.max_operator_violation = std::max(diag.max_operator_violation, ev.eigenvalues(0));
    }
    for (std::size_t i = 0; i < rho.size(); ++i)
        for (std::size_t j = 0; j < rho.size(); ++j) {
            const Matrix r =
                povm.elements()[i] * (p[i] * rho[i] - p[j] * rho[j]) * povm.elements()[j];
            diag.max_cross_residual = std::max(diag.max_cross_residual, max_abs(r));
        }
    diag.optimal = diag.max_operator_violation <= 1e-8 && diag.max_cross_residual <= 1e-8 &&
                   diag.hermiticity_residual <= 1e-8;
    return diag;
}

namespace {

Vector bloch_ket(double theta, double phi) {
    Vector v(2);
    v << Complex(std::cos(theta / 2.0), 0.0),
        std::polar(std::sin(theta / 2.0), phi);
    return v;
}

double projective_error(double theta, double phi, double p1, const Matrix& r1, double p2,
                        const Matrix& r2) {
    const Vector n = bloch_ket(theta, phi);
    const double q1 = (n.adjoint() * r1 * n)(0).real();  // <n|rho1|n>
    const double q2 = (n.adjoint() * r2 * n)(0).real();
    // assign outcome n to state 1 or state 2, whichever errs less
    const double err_assign1 = p1 * (1.0 - q1) + p2 * q2;
    const double err_assign2 = p2 * (1.0 - q2) + p1 * q1;
    return std::min(err_assign1, err_assign2);
}

// Golden-section minimization of a smooth 1-d slice.
template <typename F>
double golden_refine(F f, double lo, double hi, int iters) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace

double brute_force_min_error(const Ensemble& e, int grid) {
    e.validate();
    if (e.size() != 2) throw Error("brute_force_min_error: needs exactly two states");
    if (grid < 4) throw Error("brute_force_min_error: grid too small");
    std::vector<Matrix> rho;
    std::vector<double> p;
    for (const auto& [pi, s] : e.items) {
        if (!std::holds_alternative<PureState>(s) || std::get<PureState>(s).dim() != 2)
            throw Error("brute_force_min_error: needs pure qubit states");
        rho.push_back(to_density(s).matrix());
        p.push_back(pi);
    }

    const double pi_ = std::acos(-1.0);
    double best = 1.0, best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i <= grid; ++i) {
        const double theta = pi_ * i / grid;
        for (int j = 0; j < 2 * grid; ++j) {
            const double phi = pi_ * j / grid;
            const double err = projective_error(theta, phi, p[0], rho[0], p[1], rho[1]);
            if (err < best) {
                best = err;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }
    // coordinate-wise golden-section refinement around the best grid point
    double theta = best_theta, phi = best_phi;
    const double dt = pi_ / grid;
    for (int round = 0; round < 4; ++round) {
        theta = golden_refine(
            [&](double t) { return projective_error(t, phi, p[0], rho[0], p[1], rho[1]); },
            theta - dt, theta + dt, 60);
        phi = golden_refine(
            [&](double f) { return projective_error(theta, f, p[0], rho[0], p[1], rho[1]); },
            phi - dt, phi + dt, 60);
    }
    return std::min(best, projective_error(theta, phi, p[0], rho[0], p[1], rho[1]));
}

std::vector<Vector> reciprocal_states(const std::vector<PureState>& states) {
    const int n = static_cast<int>(states.size());
    if (n == 0) throw Error("reciprocal_states: no states");
    const Matrix a = overlap_matrix(states).entries;
    const double det = std::abs(a.determinant());
    if (det < tol::gram_det)
        throw LinearlyDependentError("reciprocal_states: Gram determinant " + std::to_string(det));
    const Matrix ainv = a.inverse();
    std::vector<Vector> out;
    for (int i = 0; i < n; ++i) {
        Vector v = Vector::Zero(states.front().dim());
        for (int j = 0; j < n; ++j) v += ainv(j, i) * states[j].amplitudes();
        out.push_back(std::move(v));
    }
    return out;
}

DiscriminationResult uqsd_two_state(double p1, const PureState& psi1, double p2,
                                    const PureState& psi2) {
    if (std::abs(p1 + p2 - 1.0) > tol::trace) throw Error("uqsd_two_state: priors must sum to 1");
    if (psi1.dim() != psi2.dim()) throw DimensionError("uqsd_two_state: dimension mismatch");
    const int d = psi1.dim();
    const Complex ov = overlap(psi1, psi2);
    const double s = std::abs(ov);
    const double s2 = s * s;
    if (1.0 - s2 < tol::gram_det)
        throw LinearlyDependentError("uqsd_two_state: states are linearly dependent");

    const double lo = s2 / (1.0 + s2), hi = 1.0 / (1.0 + s2);

    if (p1 >= lo - 1e-15 && p1 <= hi + 1e-15) {
        // optimal POVM regime (IDP)
        const double p1f = std::sqrt(p2 / p1) * s;
        const double p2f = std::sqrt(p1 / p2) * s;
        std::vector<Vector> recip = reciprocal_states({psi1, psi2});
        Matrix e1 = (1.0 - p1f) * recip[0] * recip[0].adjoint();
        Matrix e2 = (1.0 - p2f) * recip[1] * recip[1].adjoint();
        Matrix ef = Matrix::Identity(d, d) - e1 - e2;
        DiscriminationResult res(Strategy::Unambiguous, Povm({e1, e2, ef}, {"1", "2", "fail"}));
        res.failure_probability = p1 * p1f + p2 * p2f;  // = 2 sqrt(p1 p2) s
        res.per_state_stats = {PerStateStats{1.0 - p1f, 0.0, p1f},
                               PerStateStats{1.0 - p2f, 0.0, p2f}};
        return res;
    }
    // projective fallbacks: measure {P_i, I - P_i}; the complement outcome
    // identifies the other state without error.
    const double fail1 = p1 + p2 * s2;
    const double fail2 = p2 + p1 * s2;
    if (fail1 <= fail2) {
        Matrix proj = psi1.projector();
        DiscriminationResult res(
            Strategy::Unambiguous,
            Povm({Matrix::Identity(d, d) - proj, proj}, {"2", "fail"}));
        res.failure_probability = fail1;
        res.per_state_stats = {PerStateStats{0.0, 0.0, 1.0},
                               PerStateStats{1.0 - s2, 0.0, s2}};
        return res;
    }
    Matrix proj = psi2.projector();
    DiscriminationResult res(
        Strategy::Unambiguous,
        Povm({Matrix::Identity(d, d) - proj, proj}, {"1", "fail"}));
    res.failure_probability = fail2;
    res.per_state_stats = {PerStateStats{1.0 - s2, 0.0, s2},
                           PerStateStats{0.0, 0.0, 1.0}};
    return res;
}

QssFeasibility qss_feasibility(const OverlapMatrix& a, const OverlapMatrix& a_target,
                               const Matrix& k) {
    const Eigen::Index n = a.entries.rows();
    if (a_target.entries.rows() != n || k.rows() != n || k.cols() != n)
        throw DimensionError("qss_feasibility: dimension mismatch");
    if (!is_hermitian(k)) throw NotHermitianError("qss_feasibility: K not Hermitian");

    QssFeasibility out;
    out.failure_operator = a.entries - k.cwiseProduct(a_target.entries);
    HermitianEig ek = hermitian_eig(k);
    out.min_eigenvalue_k = ek.eigenvalues(n - 1);
    const Matrix f_h = (out.failure_operator + out.failure_operator.adjoint()) / 2.0;
    HermitianEig ef = hermitian_eig(f_h);
    out.min_eigenvalue_f = ef.eigenvalues(n - 1);
    out.feasible = out.min_eigenvalue_k >= -tol::completeness &&
                   out.min_eigenvalue_f >= -tol::completeness;
    return out;
}

QssOperators qss_success_operators(const std::vector<std::pair<double, PureState>>& ensemble,
                                   const std::vector<PureState>& targets, const Matrix& k) {
    const int n = static_cast<int>(ensemble.size());
    if (static_cast<int>(targets.size()) != n)
        throw DimensionError("qss_success_operators: target count mismatch");
    std::vector<PureState> sources;
    double ptot = 0.0;
    for (const auto& [p, s] : ensemble) {
        sources.push_back(s);
        ptot += p;
    }
    if (std::abs(ptot - 1.0) > tol::trace)
        throw Error("qss_success_operators: priors must sum to 1");

    QssFeasibility feas =
        qss_feasibility(overlap_matrix(sources), overlap_matrix(targets), k);
    if (!feas.feasible)
        throw InfeasibleError("qss_success_operators: K/F feasibility violated");

    std::vector<Vector> recip = reciprocal_states(sources);
    HermitianEig ek = hermitian_eig(k);

    QssOperators out;
    const int target_dim = targets.front().dim();
    const int source_dim = sources.front().dim();
    for (int l = 0; l < n; ++l) {
        if (ek.eigenvalues(l) <= tol::rank_cut) continue;  // rank cut of K
        const Vector a_l = std::sqrt(ek.eigenvalues(l)) * ek.eigenvectors.col(l);
        Matrix m = Matrix::Zero(target_dim, source_dim);
        for (int i = 0; i < n; ++i)
            m += std::conj(a_l(i)) * targets[i].amplitudes() * recip[i].adjoint();
        out.success_operators.push_back(std::move(m));
    }
    out.per_state_success = RealVector(n);
    out.total_success_probability = 0.0;
    for (int i = 0; i < n; ++i) {
        out.per_state_success(i) = k(i, i).real();
        out.total_success_probability += ensemble[i].first * k(i, i).real();
    }
    return out;
}

}  // namespace qsd
