#include "qsd/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsd {

ProbVector::ProbVector(RealVector c) : components(std::move(c)) {
    if (components.size() == 0) throw Error("ProbVector: empty");
    double total = 0.0;
    for (Eigen::Index i = 0; i < components.size(); ++i) {
        if (!std::isfinite(components(i))) throw NotFiniteError("ProbVector: non-finite entry");
        if (components(i) < -tol::trace) throw Error("ProbVector: negative component");
        total += components(i);
    }
    if (std::abs(total - 1.0) > tol::trace)
        throw Error("ProbVector: components sum to " + std::to_string(total));
}

ProbVector::ProbVector(std::initializer_list<double> c)
    : ProbVector(Eigen::Map<const RealVector>(c.begin(), static_cast<Eigen::Index>(c.size()))) {}

const char* to_string(MajorizationVerdict v) {
    switch (v) {
        case MajorizationVerdict::LeftMajorized: return "LeftMajorized";
        case MajorizationVerdict::RightMajorized: return "RightMajorized";
        case MajorizationVerdict::Equal: return "Equal";
        case MajorizationVerdict::Incomparable: return "Incomparable";
    }
    return "?";
}

namespace {

RealVector sorted_descending_padded(const RealVector& v, Eigen::Index n) {
    RealVector out = RealVector::Zero(n);
    out.head(v.size()) = v;
    std::sort(out.data(), out.data() + n, std::greater<double>());
    return out;
}

}  // namespace

MajorizationReport majorizes(const ProbVector& x, const ProbVector& y) {
    const Eigen::Index n = std::max(x.size(), y.size());
    RealVector xs = sorted_descending_padded(x.components, n);
    RealVector ys = sorted_descending_padded(y.components, n);

    MajorizationReport rep;
    rep.prefix_sums_left = RealVector(n);
    rep.prefix_sums_right = RealVector(n);
    double sx = 0.0, sy = 0.0;
    bool left_ok = true, right_ok = true, equal = true;
    for (Eigen::Index k = 0; k < n; ++k) {
        sx += xs(k);
        sy += ys(k);
        rep.prefix_sums_left(k) = sx;
        rep.prefix_sums_right(k) = sy;
        if (std::abs(sx - sy) > tol::majorization) equal = false;
        if (sx > sy + tol::majorization) {
            if (left_ok && !rep.first_violation_index) rep.first_violation_index = static_cast<int>(k);
            left_ok = false;
        }
        if (sy > sx + tol::majorization) right_ok = false;
    }
    if (equal)
        rep.verdict = MajorizationVerdict::Equal;
    else if (left_ok)
        rep.verdict = MajorizationVerdict::LeftMajorized;
    else if (right_ok)
        rep.verdict = MajorizationVerdict::RightMajorized;
    else
        rep.verdict = MajorizationVerdict::Incomparable;
    if (rep.verdict != MajorizationVerdict::Incomparable) rep.first_violation_index.reset();
    return rep;
}

namespace {

ProbVector squared_schmidt(const PureState& psi) {
    SchmidtDecomposition s = schmidt_decompose(psi);
    RealVector lam = s.coefficients.array().square();
    lam /= lam.sum();  // scrub rounding so the ProbVector invariant holds
    return ProbVector(lam);
}

bool is_majorized_by(const ProbVector& x, const ProbVector& y) {
    const MajorizationVerdict v = majorizes(x, y).verdict;
    return v == MajorizationVerdict::LeftMajorized || v == MajorizationVerdict::Equal;
}

}  // namespace

bool nielsen_feasible(const PureState& source, const PureState& target) {
    return is_majorized_by(squared_schmidt(source), squared_schmidt(target));
}

bool probabilistic_feasible(const PureState& source,
                            const std::vector<std::pair<double, PureState>>& targets) {
    if (targets.empty()) throw Error("probabilistic_feasible: no targets");
    Eigen::Index n = 0;
    double total = 0.0;
    for (const auto& [p, t] : targets) {
        n = std::max(n, static_cast<Eigen::Index>(std::min(t.dim_a(), t.dim_b())));
        total += p;
    }
    if (std::abs(total - 1.0) > tol::trace)
        throw Error("probabilistic_feasible: target probabilities sum to " + std::to_string(total));
    RealVector mix = RealVector::Zero(n);
    for (const auto& [p, t] : targets) {
        RealVector lam = squared_schmidt(t).components;  // descending by SVD
        mix.head(lam.size()) += p * lam;
    }
    mix /= mix.sum();
    return is_majorized_by(squared_schmidt(source), ProbVector(mix));
}

std::vector<RealMatrix> t_transform_chain(const ProbVector& x, const ProbVector& y) {
    if (x.size() != y.size())
        throw DimensionError("t_transform_chain: vectors must have equal length");
    const Eigen::Index d = x.size();
    for (Eigen::Index i = 0; i + 1 < d; ++i) {
        if (x.components(i) < x.components(i + 1) - tol::majorization ||
            y.components(i) < y.components(i + 1) - tol::majorization)
            throw Error("t_transform_chain: inputs must be sorted descending");
    }
    if (!is_majorized_by(x, y)) throw NotMajorizedError("t_transform_chain: x not majorized by y");

    std::vector<RealMatrix> chain;
    RealVector cur = y.components;
    const RealVector& target = x.components;
    const double eps = 5e-14;
    for (Eigen::Index step = 0; step + 1 < d + 1; ++step) {
        Eigen::Index j = -1, k = -1;
        for (Eigen::Index i = 0; i < d; ++i)
            if (cur(i) - target(i) > eps) { j = i; break; }
        if (j < 0) break;
        for (Eigen::Index i = j + 1; i < d; ++i)
            if (cur(i) - target(i) < -eps) { k = i; break; }
        if (k < 0) break;
        const double denom = cur(j) - cur(k);
        if (denom <= 0.0)
            throw Error("t_transform_chain: internal pairing failure");  // cannot happen for sorted x
        const double delta = std::min(cur(j) - target(j), target(k) - cur(k));
        const double t = 1.0 - delta / denom;
        RealMatrix T = RealMatrix::Identity(d, d);
        T(j, j) = T(k, k) = t;
        T(j, k) = T(k, j) = 1.0 - t;
        cur = T * cur;
        chain.push_back(std::move(T));
    }
    if ((cur - target).cwiseAbs().maxCoeff() > 1e-10)
        throw Error("t_transform_chain: residual above tolerance");
    return chain;
}

RealMatrix permutation_matrix(const std::vector<int>& permutation) {
    const int d = static_cast<int>(permutation.size());
    RealMatrix p = RealMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) p(i, permutation[i]) = 1.0;
    return p;
}

namespace {

// Perfect matching on the support graph, visiting candidate columns in
// descending entry order so the largest entries are consumed first.
bool augment(const RealMatrix& m, int row, double threshold, std::vector<int>& row_to_col,
             std::vector<int>& col_to_row, std::vector<bool>& visited) {
    const int d = static_cast<int>(m.rows());
    std::vector<int> cols;
    for (int c = 0; c < d; ++c)
        if (m(row, c) > threshold && !visited[c]) cols.push_back(c);
    std::sort(cols.begin(), cols.end(), [&](int a, int b) { return m(row, a) > m(row, b); });
    for (int c : cols) {
        visited[c] = true;
        if (col_to_row[c] < 0 || augment(m, col_to_row[c], threshold, row_to_col, col_to_row, visited)) {
            row_to_col[row] = c;
            col_to_row[c] = row;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<BirkhoffTerm> birkhoff_decompose(const RealMatrix& d_in) {
    const int d = static_cast<int>(d_in.rows());
    if (d_in.cols() != d) throw DimensionError("birkhoff_decompose: matrix not square");
    for (int i = 0; i < d; ++i) {
        if (std::abs(d_in.row(i).sum() - 1.0) > tol::completeness ||
            std::abs(d_in.col(i).sum() - 1.0) > tol::completeness)
            throw NotDoublyStochasticError("birkhoff_decompose: row/column sums deviate from 1");
        for (int j = 0; j < d; ++j)
            if (d_in(i, j) < -tol::psd)
                throw NotDoublyStochasticError("birkhoff_decompose: negative entry");
    }

    std::vector<BirkhoffTerm> terms;
    RealMatrix rest = d_in.cwiseMax(0.0);
    const double threshold = tol::rank_cut;
    for (int iter = 0; iter < d * d; ++iter) {
        if (rest.maxCoeff() <= threshold) break;
        std::vector<int> row_to_col(d, -1), col_to_row(d, -1);
        bool complete = true;
        for (int r = 0; r < d && complete; ++r) {
            std::vector<bool> visited(d, false);
            complete = augment(rest, r, threshold, row_to_col, col_to_row, visited);
        }
        if (!complete)
            throw NotDoublyStochasticError("birkhoff_decompose: support admits no perfect matching");
        double q = rest(0, row_to_col[0]);
        for (int r = 1; r < d; ++r) q = std::min(q, rest(r, row_to_col[r]));
        for (int r = 0; r < d; ++r) rest(r, row_to_col[r]) -= q;
        terms.push_back({q, std::move(row_to_col)});
    }
    double total = 0.0;
    for (const auto& t : terms) total += t.weight;
    if (std::abs(total - 1.0) > tol::completeness)
        throw NotDoublyStochasticError("birkhoff_decompose: weights sum to " + std::to_string(total));
    for (auto& t : terms) t.weight /= total;
    return terms;
}

namespace {

RealVector diagonal_descending(const Matrix& m, const char* what) {
    const Eigen::Index d = m.rows();
    Matrix off = m;
    off.diagonal().setZero();
    if (max_abs(off) > tol::completeness)
        throw Error(std::string(what) + ": operator is not diagonal in the common basis");
    RealVector diag(d);
    for (Eigen::Index i = 0; i < d; ++i) diag(i) = m(i, i).real();
    for (Eigen::Index i = 0; i + 1 < d; ++i)
        if (diag(i) < diag(i + 1) - tol::majorization)
            throw Error(std::string(what) + ": diagonal not in descending order");
    return diag;
}

}  // namespace

Measurement construct_transform_measurement(
    const DensityOperator& rho, const std::vector<std::pair<double, DensityOperator>>& targets) {
    if (targets.empty()) throw Error("construct_transform_measurement: no targets");
    const Eigen::Index d = rho.dim();
    RealVector x = diagonal_descending(rho.matrix(), "construct_transform_measurement(rho)");

    double ptot = 0.0;
    RealVector y = RealVector::Zero(d);
    for (const auto& [p, t] : targets) {
        if (t.dim() != d) throw DimensionError("construct_transform_measurement: target size mismatch");
        y += p * diagonal_descending(t.matrix(), "construct_transform_measurement(target)");
        ptot += p;
    }
    if (std::abs(ptot - 1.0) > tol::trace)
        throw Error("construct_transform_measurement: target probabilities sum to " +
                    std::to_string(ptot));

    ProbVector xv(x.cwiseMax(0.0) / x.cwiseMax(0.0).sum());
    ProbVector yv(y.cwiseMax(0.0) / y.cwiseMax(0.0).sum());
    if (!(majorizes(xv, yv).verdict == MajorizationVerdict::LeftMajorized ||
          majorizes(xv, yv).verdict == MajorizationVerdict::Equal))
        throw NotMajorizedError("construct_transform_measurement: lambda(rho) not majorized by mix");

    std::vector<RealMatrix> chain = t_transform_chain(xv, yv);
    RealMatrix dmat = RealMatrix::Identity(d, d);
    for (const RealMatrix& t : chain) dmat = t * dmat;
    std::vector<BirkhoffTerm> perms = birkhoff_decompose(dmat);

    // sqrt(rho) is diagonal; invert on the support only.
    RealVector inv_sqrt = RealVector::Zero(d);
    int rank = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
        if (x(i) > tol::rank_cut) {
            inv_sqrt(i) = 1.0 / std::sqrt(x(i));
            ++rank;
        }
    }

    std::vector<Matrix> ops;
    std::vector<std::string> labels;
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        const auto& [p_i, target] = targets[ti];
        RealVector sqrt_target(d);
        for (Eigen::Index r = 0; r < d; ++r)
            sqrt_target(r) = std::sqrt(std::max(0.0, target.matrix()(r, r).real()));
        for (std::size_t pj = 0; pj < perms.size(); ++pj) {
            const auto& [q_j, perm] = perms[pj];
            // M = sqrt(p q) sqrt(rho_i) P^T inv_sqrt(rho); all factors diagonal or
            // permutations, so M has one entry per column c, at row perm[c].
            Matrix m = Matrix::Zero(d, d);
            for (int c = 0; c < d; ++c)
                m(perm[c], c) = std::sqrt(p_i * q_j) * sqrt_target(perm[c]) * inv_sqrt(c);
            ops.push_back(std::move(m));
            labels.push_back(std::to_string(ti) + "," + std::to_string(pj));
        }
    }
    if (rank < d) {
        Matrix kernel = Matrix::Zero(d, d);
        for (Eigen::Index i = 0; i < d; ++i)
            if (x(i) <= tol::rank_cut) kernel(i, i) = 1.0;
        ops.push_back(std::move(kernel));
        labels.push_back("kernel");

        // The support extension is harmless only if no target carries weight
        // that a permutation sources from the kernel of rho.
        for (std::size_t ti = 0; ti < targets.size(); ++ti) {
            const auto& [p_i, target] = targets[ti];
            if (p_i <= tol::zero_prob) continue;
            for (const auto& [q_j, perm] : perms) {
                for (int c = 0; c < d; ++c) {
                    const double moved = target.matrix()(perm[c], perm[c]).real();
                    if (moved > tol::completeness && x(c) <= tol::rank_cut)
                        throw SingularDensityError(
                            "construct_transform_measurement: rho is singular and a target needs "
                            "weight outside its support");
                }
            }
        }
    }
    return Measurement(std::move(ops), std::move(labels));
}

}  // namespace qsd
