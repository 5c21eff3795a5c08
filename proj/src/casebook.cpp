#include "qsd/casebook.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qsd {

namespace {

constexpr double kVerify = 1e-8;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

Vector two_qubit(Complex a00, Complex a01, Complex a10, Complex a11) {
    Vector v(4);
    v << a00, a01, a10, a11;
    return v;
}

// index map ABCD -> (AC)(BD) on four qubits
int reorder_index(int abcd) {
    const int a = (abcd >> 3) & 1, b = (abcd >> 2) & 1, c = (abcd >> 1) & 1, d = abcd & 1;
    return (a * 2 + c) * 4 + (b * 2 + d);
}

Vector reorder_ac_bd(const Vector& v) {
    Vector out(16);
    for (int i = 0; i < 16; ++i) out(reorder_index(i)) = v(i);
    return out;
}

Matrix reorder_ac_bd(const Matrix& rho) {
    Matrix out(16, 16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) out(reorder_index(i), reorder_index(j)) = rho(i, j);
    return out;
}

double entropy_bits(const RealVector& lam) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (lam(i) > 1e-15) h -= lam(i) * std::log2(lam(i));
    return h;
}

double binary_entropy(double p) {
    double h = 0.0;
    if (p > 1e-15) h -= p * std::log2(p);
    if (1.0 - p > 1e-15) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

// Correlated state rho = 1/N sum_{i in sel} |psi_i phi_i><psi_i phi_i| and its
// log-negativity across the AC:BD cut.
double correlated_negativity(const BellFamilyParams& p, const std::vector<int>& sel) {
    const std::vector<Vector> psis = bell_family_states(p);
    const std::vector<Vector> phis = bell_basis_states();
    Matrix rho = Matrix::Zero(16, 16);
    for (int i : sel) {
        const Vector v = kron(psis[i], phis[i]);
        rho += v * v.adjoint();
    }
    rho /= static_cast<double>(sel.size());
    return std::log2(trace_norm(partial_transpose(reorder_ac_bd(rho), 4, 4)));
}

// lambda(Tr_BD |Psi><Psi|) for Psi = (1/sqrt(N)) sum_{i in sel} psi_i x phi_i.
RealVector correlated_reduction_spectrum(const BellFamilyParams& p, const std::vector<int>& sel) {
    const std::vector<Vector> psis = bell_family_states(p);
    const std::vector<Vector> phis = bell_basis_states();
    Vector big = Vector::Zero(16);
    for (int i : sel) big += kron(psis[i], phis[i]);
    big /= std::sqrt(static_cast<double>(sel.size()));
    const Vector re = reorder_ac_bd(big);
    const Matrix red = partial_trace(re * re.adjoint(), 4, 4, Subsystem::B);
    return hermitian_eig(red).eigenvalues;
}

}  // namespace

BellFamilyParams BellFamilyParams::make(double a, double b, double c, double d) {
    for (double v : {a, b, c, d})
        if (!(v >= -1e-12 && v <= 1.0 + 1e-12)) throw Error("BellFamilyParams: value outside [0,1]");
    if (std::abs(a * a + b * b - 1.0) > tol::norm || std::abs(c * c + d * d - 1.0) > tol::norm)
        throw Error("BellFamilyParams: pairs must be normalized");
    if (a < b - tol::norm || c < d - tol::norm)
        throw Error("BellFamilyParams: ordering a >= b, c >= d violated");
    return {a, b, c, d};
}

BellFamilyParams BellFamilyParams::from_ac(double a, double c) {
    const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
    const double d = std::sqrt(std::max(0.0, 1.0 - c * c));
    return make(a, b, c, d);
}

std::vector<Vector> bell_family_states(const BellFamilyParams& p) {
    return {two_qubit(p.a, 0, 0, p.b), two_qubit(p.b, 0, 0, -p.a),
            two_qubit(0, p.c, p.d, 0), two_qubit(0, p.d, -p.c, 0)};
}

std::vector<Vector> bell_basis_states() {
    const double s = 1.0 / std::sqrt(2.0);
    return {two_qubit(s, 0, 0, s), two_qubit(s, 0, 0, -s),
            two_qubit(0, s, s, 0), two_qubit(0, s, -s, 0)};
}

Ghosh4Report ghosh4_negativity(const BellFamilyParams& p) {
    Ghosh4Report out;
    out.numeric_log_negativity = correlated_negativity(p, {0, 1, 2, 3});
    out.closed_form = std::log2(p.a * p.a + p.c * p.c);
    out.report.bound_value = out.numeric_log_negativity;
    out.report.lhs = 1.0;
    out.report.rhs = out.numeric_log_negativity;
    out.report.satisfied = out.report.rhs >= out.report.lhs - tol::majorization;
    out.report.witness = "E_N = " + fmt(out.numeric_log_negativity) +
                         (out.report.satisfied ? " >= 1 (discrimination not excluded)"
                                               : " < 1 (discrimination excluded)");
    return out;
}

Ghosh3Report ghosh3_negativity(const BellFamilyParams& p, bool anti_parallel) {
    Ghosh3Report out;
    out.anti_parallel = anti_parallel;
    const std::vector<int> sel = anti_parallel ? std::vector<int>{0, 2, 3}
                                               : std::vector<int>{0, 1, 2};
    out.numeric_log_negativity = correlated_negativity(p, sel);

    // closed form with (a,b) <-> (c,d) swapped for the anti-parallel choice
    const double aa = anti_parallel ? p.c : p.a, bb = anti_parallel ? p.d : p.b;
    const double cc = anti_parallel ? p.a : p.c, dd = anti_parallel ? p.b : p.d;
    const double u = 4.0 * aa * aa * bb * bb, w = cc * cc * dd * dd;
    const double big_s = std::sqrt(std::max(0.0, 1.0 + 4.0 * u - 4.0 * w));
    const double big_q = std::sqrt(std::max(0.0, 1.0 - u + w));
    out.closed_form =
        std::log2(4.0 / 3.0 + (2.0 / 3.0) * big_q + std::max(0.0, big_s - 1.0) / 3.0);
    out.condition_value = u - w;
    out.negativity_bound_met = out.numeric_log_negativity >= 1.0 - tol::majorization;

    out.report.bound_value = out.numeric_log_negativity;
    out.report.lhs = 0.75;
    out.report.rhs = out.condition_value;
    out.report.satisfied = out.condition_value > 0.75 + tol::majorization;
    out.report.witness = "4a^2b^2 - c^2d^2 = " + fmt(out.condition_value) +
                         (out.report.satisfied ? " > 3/4" : " <= 3/4") +
                         "; E_N = " + fmt(out.numeric_log_negativity) +
                         (out.negativity_bound_met ? " >= 1" : " < 1");
    return out;
}

Maj4Report maj4_indistinguishability(const BellFamilyParams& p) {
    Maj4Report out;
    out.numeric_eigenvalues = correlated_reduction_spectrum(p, {0, 1, 2, 3});

    RealVector analytic(4);
    analytic << std::pow(p.a + p.b + p.c + p.d, 2), std::pow(p.a - p.b + p.c - p.d, 2),
        std::pow(p.a - p.b - p.c + p.d, 2), std::pow(p.a + p.b - p.c - p.d, 2);
    analytic /= 8.0;
    std::sort(analytic.data(), analytic.data() + 4, std::greater<double>());
    out.analytic_eigenvalues = analytic;

    RealVector half(4);
    half << 0.5, 0.5, 0.0, 0.0;
    RealVector lam = out.numeric_eigenvalues.cwiseMax(0.0);
    lam /= lam.sum();
    MajorizationReport maj = majorizes(ProbVector(lam), ProbVector(half));
    out.verdict = maj.verdict;

    out.report.lhs = out.numeric_eigenvalues(0);
    out.report.rhs = 0.5;
    out.report.bound_value = analytic(0);
    out.report.satisfied = out.verdict == MajorizationVerdict::LeftMajorized ||
                           out.verdict == MajorizationVerdict::Equal;
    out.report.witness = "(a+b+c+d)^2/8 = " + fmt(analytic(0)) +
                         (out.report.satisfied ? " <= 1/2: majorization holds"
                                               : " > 1/2: majorization fails");
    return out;
}

Maj3Report maj3_feasibility(const BellFamilyParams& p) {
    Maj3Report out;
    out.numeric_eigenvalues = correlated_reduction_spectrum(p, {0, 1, 2});

    RealVector half(4);
    half << 0.5, 0.5, 0.0, 0.0;
    RealVector lam = out.numeric_eigenvalues.cwiseMax(0.0);
    lam /= lam.sum();
    MajorizationReport maj = majorizes(ProbVector(lam), ProbVector(half));
    out.verdict = maj.verdict;

    out.report.lhs = out.numeric_eigenvalues(0);
    out.report.rhs = 0.5;
    out.report.bound_value = out.numeric_eigenvalues(0);
    out.report.satisfied = out.verdict == MajorizationVerdict::LeftMajorized ||
                           out.verdict == MajorizationVerdict::Equal;
    out.report.witness = "lambda_1 = " + fmt(out.report.lhs) +
                         (out.report.satisfied ? " <= 1/2: discrimination feasible"
                                               : " > 1/2: discrimination infeasible");
    return out;
}

AssistedReport assisted_bound(const BellFamilyParams& p) {
    AssistedReport out;
    const double total = p.a + p.b + p.c + p.d;
    out.lambda1_analytic = total * total / 8.0;
    out.lambda1_numeric = correlated_reduction_spectrum(p, {0, 1, 2, 3})(0);
    out.report.bound_value = 4.0 / (total * total);
    out.report.lhs = out.report.bound_value * out.lambda1_numeric;  // top tensor component
    out.report.rhs = 0.5;
    out.report.satisfied = std::abs(out.report.lhs - 0.5) <= kVerify &&
                           std::abs(out.lambda1_numeric - out.lambda1_analytic) <= kVerify;
    out.report.witness = "alpha^2 <= " + fmt(out.report.bound_value) +
                         "; saturating top component " + fmt(out.report.lhs);
    return out;
}

Preserve2Report preserve2_bound(const BellFamilyParams& p) {
    Preserve2Report out;
    const double ab = p.a * p.b, cd = p.c * p.d;
    if (ab + cd <= tol::rank_cut) {
        out.degenerate = true;
        out.report.bound_value = 1.0;
        out.report.satisfied = true;
        out.report.lhs = 0.0;
        out.report.rhs = 1.0;
        out.report.witness = "both states product (ab + cd = 0); bound vacuous";
        return out;
    }
    out.p1 = cd / (ab + cd);
    out.p2 = ab / (ab + cd);
    out.report.bound_value = (p.a * p.a * cd + p.c * p.c * ab) / (ab + cd);

    // Psi = sqrt(p1) psi1 + sqrt(p2) psi2 must be product.
    const std::vector<Vector> psis = bell_family_states(p);
    Vector big = std::sqrt(out.p1) * psis[0] + std::sqrt(out.p2) * psis[2];
    const PureState psi(big / big.norm(), 2, 2);
    const Matrix red = partial_trace(psi.projector(), 2, 2, Subsystem::B);
    out.det_residual = std::abs(red.determinant());
    SchmidtDecomposition sd = schmidt_decompose(psi);
    out.second_schmidt = sd.coefficients(1);

    // saturating resource state and concurrence forms
    const double v1 = out.report.bound_value;
    const double v2 = 1.0 - v1;
    out.concurrence_saturating = 2.0 * std::sqrt(std::max(0.0, v1 * v2));
    const double c1 = concurrence(to_density(PureState(psis[0], 2, 2)));
    const double c2 = concurrence(to_density(PureState(psis[2], 2, 2)));
    out.concurrence_phi = std::sqrt(c1 * c2);
    out.concurrence_closed_form = 2.0 * std::sqrt(ab * cd);

    const double mix_check =
        std::abs(out.report.bound_value - (out.p1 * p.a * p.a + out.p2 * p.c * p.c));
    out.report.lhs = out.report.bound_value;
    out.report.rhs = out.report.bound_value;
    out.report.satisfied = out.det_residual <= 1e-12 && out.second_schmidt <= 1e-10 &&
                           mix_check <= tol::majorization &&
                           std::abs(out.concurrence_phi - out.concurrence_closed_form) <= 1e-10;
    out.report.witness = "alpha^2 <= " + fmt(out.report.bound_value) +
                         "; C(phi) >= " + fmt(out.concurrence_phi);
    return out;
}

Preserve4ProductReport preserve4_product_bound(const BellFamilyParams& p, int grid) {
    if (grid < 2) throw Error("preserve4_product_bound: grid >= 2 required");
    Preserve4ProductReport out;
    out.report.bound_value = std::min(p.a * p.a, p.c * p.c);

    const std::vector<Vector> psis = bell_family_states(p);
    const auto rhs_first = [&](double xa2, double xb2) {
        return p.a * p.a * (xa2 * xb2 + (1.0 - xa2) * (1.0 - xb2)) +
               p.c * p.c * (xa2 * (1.0 - xb2) + (1.0 - xa2) * xb2);
    };

    double best = 2.0, best_xa2 = 0.0, best_xb2 = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double xa2 = static_cast<double>(i) / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double xb2 = static_cast<double>(j) / (grid - 1);
            const double v = rhs_first(xa2, xb2);
            if (v < best) {
                best = v;
                best_xa2 = xa2;
                best_xb2 = xb2;
            }
        }
    }
    out.grid_min = best;

    // product construction at the minimizing endpoint
    const double xa = std::sqrt(best_xa2), ya = std::sqrt(1.0 - best_xa2);
    const double xb = std::sqrt(best_xb2), yb = std::sqrt(1.0 - best_xb2);
    Vector a_ket(2), b_ket(2);
    a_ket << xa, ya;
    b_ket << xb, yb;
    const Vector product = kron(a_ket, b_ket);
    Vector big = Vector::Zero(4);
    for (const Vector& psi : psis) big += psi.dot(product) * psi;  // sqrt(p_i) amplitudes
    SchmidtDecomposition sd = schmidt_decompose(PureState(big / big.norm(), 2, 2));
    out.second_schmidt_at_min = sd.coefficients(1);

    out.report.lhs = out.grid_min;
    out.report.rhs = out.report.bound_value;
    out.report.satisfied = std::abs(out.grid_min - out.report.bound_value) <= 1e-10 &&
                           out.second_schmidt_at_min <= 1e-10;
    out.report.witness = "alpha^2 <= min(a^2, c^2) = " + fmt(out.report.bound_value);
    return out;
}

Preserve4BellReport preserve4_bell_bound(const BellFamilyParams& p) {
    Preserve4BellReport out;
    RealVector rhs(4);
    rhs << std::pow(p.a, 4) + std::pow(p.c, 4),
        p.a * p.a * p.b * p.b + p.c * p.c * p.d * p.d,
        p.a * p.a * p.b * p.b + p.c * p.c * p.d * p.d,
        std::pow(p.b, 4) + std::pow(p.d, 4);
    rhs /= 2.0;
    std::sort(rhs.data(), rhs.data() + 4, std::greater<double>());
    out.rhs = rhs;
    out.cost_ebits = entropy_bits(rhs);

    // Psi = 1/2 sum_mu psi_mu (x) psi_mu^*, product across the AAbar:BBbar cut.
    const std::vector<Vector> psis = bell_family_states(p);
    Vector big = Vector::Zero(16);
    for (const Vector& psi : psis) big += kron(psi, psi.conjugate());
    big /= 2.0;
    // qubits (A, B, Abar, Bbar); regroup to (A, Abar):(B, Bbar)
    Vector regrouped(16);
    for (int i = 0; i < 16; ++i) {
        const int a = (i >> 3) & 1, b = (i >> 2) & 1, abar = (i >> 1) & 1, bbar = i & 1;
        regrouped((a * 2 + abar) * 4 + (b * 2 + bbar)) = big(i);
    }
    SchmidtDecomposition sd = schmidt_decompose(PureState(regrouped, 4, 4));
    out.second_singular = sd.coefficients(1);

    out.report.bound_value = rhs(0);
    out.report.lhs = rhs(0);
    out.report.rhs = rhs(0);
    out.report.satisfied = out.second_singular <= 1e-10 &&
                           std::abs(rhs.sum() - 1.0) <= tol::majorization;
    out.report.witness = "lambda(phi) must be majorized by (" + fmt(rhs(0)) + ", " + fmt(rhs(1)) +
                         ", " + fmt(rhs(2)) + ", " + fmt(rhs(3)) + ")";
    return out;
}

std::vector<Figure1Row> figure1_scan(int grid) {
    if (grid < 2) throw Error("figure1_scan: grid >= 2 required");
    std::vector<Figure1Row> rows;
    rows.reserve(static_cast<std::size_t>(grid) * grid);
    for (int i = 0; i < grid; ++i) {
        const double a2 = 0.5 + 0.5 * i / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double c2 = 0.5 + 0.5 * j / (grid - 1);
            const BellFamilyParams p = BellFamilyParams::from_ac(std::sqrt(a2), std::sqrt(c2));
            Figure1Row row;
            row.a2 = a2;
            row.c2 = c2;
            row.avg_entanglement = 0.5 * (binary_entropy(a2) + binary_entropy(c2));
            row.cost = preserve4_bell_bound(p).cost_ebits;
            row.on_diagonal = (i == j);
            row.on_cusp = (i == 0) != (j == 0);  // exactly one pair maximally entangled
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace qsd
