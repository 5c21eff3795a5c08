#include "qsd/locc.hpp"

#include <algorithm>
#include <cmath>

namespace qsd {

namespace {

double common_diagonal_residual(const Matrix& m) {
    const Complex mean = m.trace() / static_cast<double>(m.rows());
    double r = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) r = std::max(r, std::abs(m(i, i) - mean));
    return r;
}

}  // namespace

EquidiagResult equidiag_2x2(const Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DimensionError("equidiag_2x2: matrix not 2x2");
    require_finite(m, "equidiag_2x2");
    const Complex x = m(0, 0), y = m(0, 1), z = m(1, 0), t = m(1, 1);
    const Complex q = x - t;

    Matrix u = Matrix::Identity(2, 2);
    if (std::abs(q) > 1e-15) {
        // Choose phi so that y e^{-i phi} + z e^{i phi} is a real multiple of
        // (x - t), then theta kills the diagonal difference.
        const Complex yq = y * std::conj(q), zq = z * std::conj(q);
        const double num = yq.imag() + zq.imag();
        const double den = yq.real() - zq.real();
        const double phi = (std::abs(num) < 1e-15 && std::abs(den) < 1e-15)
                               ? 0.0
                               : std::atan2(num, den);
        const Complex w = y * std::polar(1.0, -phi) + z * std::polar(1.0, phi);
        const double mu = (w * std::conj(q)).real() / std::norm(q);
        const double theta = 0.5 * std::atan2(-1.0, mu);
        u(0, 0) = std::cos(theta);
        u(0, 1) = std::polar(std::sin(theta), phi);
        u(1, 0) = std::polar(std::sin(theta), -phi);
        u(1, 1) = -std::cos(theta);
    }
    EquidiagResult res;
    res.unitary = u;
    res.transformed = u * m * u.adjoint();
    res.max_abs_diagonal = common_diagonal_residual(res.transformed);
    return res;
}

EquidiagResult equidiag_power2(const Matrix& m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw DimensionError("equidiag_power2: matrix not square");
    if (n < 1 || (n & (n - 1)) != 0)
        throw DimensionError("equidiag_power2: dimension not a power of two (ancilla_pad first)");
    require_finite(m, "equidiag_power2");

    if (n == 1) return {Matrix::Identity(1, 1), m, 0.0};
    if (n == 2) return equidiag_2x2(m);

    Matrix w = Matrix::Identity(n, n);
    Matrix a = m;
    const int k = static_cast<int>(std::round(std::log2(static_cast<double>(n))));
    for (int level = 1; level <= k; ++level) {
        const Eigen::Index block = Eigen::Index(1) << level;
        const Eigen::Index half = block / 2;
        for (Eigen::Index start = 0; start < n; start += block) {
            for (Eigen::Index j = start; j < start + half; ++j) {
                const Eigen::Index i1 = j, i2 = j + half;
                Matrix sub(2, 2);
                sub << a(i1, i1), a(i1, i2), a(i2, i1), a(i2, i2);
                const Matrix u = equidiag_2x2(sub).unitary;
                // embed the rotation at rows/columns (i1, i2)
                Matrix rot = Matrix::Identity(n, n);
                rot(i1, i1) = u(0, 0);
                rot(i1, i2) = u(0, 1);
                rot(i2, i1) = u(1, 0);
                rot(i2, i2) = u(1, 1);
                a = rot * a * rot.adjoint();
                w = rot * w;
            }
        }
    }
    EquidiagResult res;
    res.unitary = std::move(w);
    res.transformed = std::move(a);
    res.max_abs_diagonal = common_diagonal_residual(res.transformed);
    return res;
}

namespace {

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

PureState pad_alice(const PureState& psi) {
    const int da = psi.dim_a(), db = psi.dim_b();
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(2) * da * db);
    amps.head(psi.amplitudes().size()) = psi.amplitudes();
    return PureState(std::move(amps), 2 * da, db);
}

}  // namespace

PaddedPair ancilla_pad(const PureState& psi1, const PureState& psi2) {
    if (psi1.dim_a() != psi2.dim_a() || psi1.dim_b() != psi2.dim_b())
        throw DimensionError("ancilla_pad: states must share dims");
    const int n = psi1.dim_a();
    PaddedPair out{psi1, psi2, n, n, 0};
    if (!is_power_of_two(n)) {
        out.psi1 = pad_alice(psi1);
        out.psi2 = pad_alice(psi2);
        out.padded_dim_a = 2 * n;
    }
    int k = 1;
    while (k < n) k *= 2;  // n <= 2^k <= padded
    out.block_dim = k;
    return out;
}

WalgateProtocol walgate_protocol(const PureState& psi1, const PureState& psi2) {
    if (psi1.dim_a() != psi2.dim_a() || psi1.dim_b() != psi2.dim_b())
        throw DimensionError("walgate_protocol: states must share dims");
    if (std::abs(overlap(psi1, psi2)) > tol::hermitian)
        throw NotOrthogonalError("walgate_protocol: states are not orthogonal");

    PaddedPair padded = ancilla_pad(psi1, psi2);
    const int da = padded.padded_dim_a;
    const int db = psi1.dim_b();
    const int block = padded.block_dim;

    const Matrix c1 = padded.psi1.coefficient_matrix();
    const Matrix c2 = padded.psi2.coefficient_matrix();
    const Matrix m = (c1 * c2.adjoint()).topLeftCorner(block, block);

    EquidiagResult eq = equidiag_power2(m);
    Matrix w = Matrix::Identity(da, da);
    w.topLeftCorner(block, block) = eq.unitary;

    const Matrix c1r = w * c1;
    const Matrix c2r = w * c2;

    WalgateProtocol proto;
    proto.alice_basis = w.adjoint();  // columns are |i'>
    proto.padded_dim_a = da;
    proto.dim_b = db;
    proto.zero_diagonal_residual = (c1r * c2r.adjoint()).diagonal().cwiseAbs().maxCoeff();
    for (int i = 0; i < da; ++i) {
        WalgateBranch br;
        Vector mu = c1r.row(i).transpose();  // row i as a column vector
        Vector nu = c2r.row(i).transpose();
        const double nm = mu.norm(), nn = nu.norm();
        if (nm > tol::rank_cut)
            br.bob_state_1 = mu / nm;
        else
            br.bob_state_1 = Vector::Zero(db);
        if (nn > tol::rank_cut)
            br.bob_state_2 = nu / nn;
        else
            br.bob_state_2 = Vector::Zero(db);
        proto.branches.push_back(std::move(br));
    }
    return proto;
}

std::pair<double, double> walgate_identification_probabilities(const WalgateProtocol& proto,
                                                               const PureState& psi1,
                                                               const PureState& psi2) {
    PaddedPair padded = ancilla_pad(psi1, psi2);
    const int da = proto.padded_dim_a;
    const int db = proto.dim_b;
    if (padded.padded_dim_a != da) throw DimensionError("walgate simulation: dim mismatch");

    // Alice's projective measurement as Kraus operators |i'><i'| (x) I_B.
    std::vector<Matrix> alice_ops;
    for (int i = 0; i < da; ++i) {
        const Vector col = proto.alice_basis.col(i);
        alice_ops.push_back(kron(Matrix(col * col.adjoint()), Matrix::Identity(db, db)));
    }
    Measurement alice(alice_ops);

    double probs[2] = {0.0, 0.0};
    const PureState* inputs[2] = {&padded.psi1, &padded.psi2};
    for (int which = 0; which < 2; ++which) {
        DensityOperator rho = to_density(*inputs[which]);
        const std::vector<double> p_alice = outcome_probabilities(alice, rho);
        for (int i = 0; i < da; ++i) {
            if (p_alice[i] <= tol::zero_prob) continue;
            DensityOperator cond = posterior_state(alice, rho, i);
            // Bob measures his branch pair, completed on the rest of his space.
            const Vector& b1 = proto.branches[i].bob_state_1;
            const Vector& b2 = proto.branches[i].bob_state_2;
            Matrix pb1 = b1.size() && b1.norm() > 0.5 ? Matrix(b1 * b1.adjoint())
                                                      : Matrix::Zero(db, db);
            Matrix pb2 = b2.size() && b2.norm() > 0.5 ? Matrix(b2 * b2.adjoint())
                                                      : Matrix::Zero(db, db);
            Matrix rest = Matrix::Identity(db, db) - pb1 - pb2;
            Measurement bob({kron(Matrix::Identity(da, da), pb1),
                             kron(Matrix::Identity(da, da), pb2),
                             kron(Matrix::Identity(da, da), rest)},
                            {"psi1", "psi2", "rest"});
            const std::vector<double> p_bob = outcome_probabilities(bob, cond);
            probs[which] += p_alice[i] * p_bob[which];
        }
    }
    return {probs[0], probs[1]};
}

VirmaniResult virmani_nonorthogonal(const PureState& psi1, const PureState& psi2, double p1,
                                    double p2) {
    if (std::abs(p1 + p2 - 1.0) > tol::trace)
        throw Error("virmani_nonorthogonal: priors must sum to 1");
    PaddedPair padded = ancilla_pad(psi1, psi2);
    const int da = padded.padded_dim_a;
    const int block = padded.block_dim;

    const Matrix c1 = padded.psi1.coefficient_matrix();
    const Matrix c2 = padded.psi2.coefficient_matrix();
    EquidiagResult eq = equidiag_power2((c1 * c2.adjoint()).topLeftCorner(block, block));
    Matrix w = Matrix::Identity(da, da);
    w.topLeftCorner(block, block) = eq.unitary;
    const Matrix c1r = w * c1;
    const Matrix c2r = w * c2;
    const Matrix inner = c1r * c2r.adjoint();

    VirmaniResult out;
    for (int i = 0; i < block; ++i) {
        const Vector mu = c1r.row(i).transpose();
        const Vector nu = c2r.row(i).transpose();
        const double nm = mu.norm(), nn = nu.norm();
        if (nm <= tol::rank_cut && nn <= tol::rank_cut) continue;  // never occurs
        const double branch_overlap = static_cast<double>(block) * std::abs(inner(i, i));
        out.branch_overlaps.push_back(branch_overlap);
        out.branch_errors.push_back(helstrom_pure_bound(p1, p2, branch_overlap));

        // Bob's posterior pair, weighted by Bayes through Alice's outcome.
        const double w1 = p1 * nm * nm, w2 = p2 * nn * nn;
        if (nm > tol::rank_cut && nn > tol::rank_cut) {
            Ensemble branch;
            branch.items.emplace_back(w1 / (w1 + w2),
                                      PureState(mu / nm, psi1.dim_b()));
            branch.items.emplace_back(w2 / (w1 + w2),
                                      PureState(nu / nn, psi2.dim_b()));
            out.branch_ensembles.push_back(std::move(branch));
        }
    }
    double total = 0.0;
    for (double e : out.branch_errors) total += e;
    out.achievable_error = out.branch_errors.empty() ? 0.0 : total / out.branch_errors.size();
    return out;
}

NielsenProtocol nielsen_protocol_2qubit(double p1, double q1) {
    if (p1 < 0.5 - tol::trace || p1 > 1.0 + tol::trace)
        throw Error("nielsen_protocol_2qubit: p1 must lie in [1/2, 1]");
    if (q1 < p1 - tol::trace)
        throw InfeasibleError("nielsen_protocol_2qubit: infeasible target (q1 < p1)");
    if (q1 > 1.0 + tol::trace) throw Error("nielsen_protocol_2qubit: q1 must lie in [1/2, 1]");
    p1 = std::clamp(p1, 0.5, 1.0);
    q1 = std::clamp(q1, p1, 1.0);

    const double alpha = std::acos(2.0 * p1 - 1.0);  // p1 = (1 + cos alpha)/2
    const double sin_alpha = std::sin(alpha);
    double beta;
    if (sin_alpha < 1e-12) {
        beta = std::atan(1.0);  // pi/4: product-to-product, symmetric branches
    } else {
        const double s2b = std::min(1.0, 2.0 * std::sqrt(q1 * (1.0 - q1)) / sin_alpha);
        beta = 0.5 * std::asin(s2b);
    }

    Matrix m1 = Matrix::Zero(2, 2), m2 = Matrix::Zero(2, 2);
    m1(0, 0) = std::cos(beta);
    m1(1, 1) = std::sin(beta);
    m2(0, 0) = std::sin(beta);
    m2(1, 1) = std::cos(beta);

    Vector amps(4);
    amps << 1.0, 0.0, std::cos(alpha), std::sin(alpha);
    amps /= std::sqrt(2.0);

    NielsenProtocol proto{Measurement({m1, m2}, {"1", "2"}), alpha, beta,
                          PureState(std::move(amps), 2, 2)};
    return proto;
}

DistillStats distill_outcome_stats(int n, double cos2theta) {
    if (n < 1) throw Error("distill_outcome_stats: need n >= 1");
    if (n > 62) throw Error("distill_outcome_stats: n too large for exact subspace dims");
    if (cos2theta < 0.0 || cos2theta > 1.0)
        throw Error("distill_outcome_stats: cos^2 theta must lie in [0,1]");
    const double sin2theta = 1.0 - cos2theta;

    DistillStats out;
    out.probabilities.resize(n + 1);
    out.subspace_dims.resize(n + 1);
    std::uint64_t binom = 1;
    for (int k = 0; k <= n; ++k) {
        out.subspace_dims[k] = binom;
        out.probabilities[k] = static_cast<double>(binom) *
                               std::pow(cos2theta, n - k) * std::pow(sin2theta, k);
        if (k < n) binom = binom * static_cast<std::uint64_t>(n - k) / (k + 1);
    }
    return out;
}

}  // namespace qsd
