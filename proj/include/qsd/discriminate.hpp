#pragma once

// Single-system discrimination strategies: perfect, minimum-error (Helstrom),
// unambiguous (IDP) and quantum state separation.

#include "qsd/measure.hpp"

namespace qsd {

enum class Strategy { Perfect, MinError, Unambiguous, Qss };

const char* to_string(Strategy s);

struct PerStateStats {
    double success = 0.0;
    double error = 0.0;
    double inconclusive = 0.0;
};

struct DiscriminationResult {
    DiscriminationResult(Strategy s, std::variant<Measurement, Povm> m)
        : strategy(s), measurement(std::move(m)) {}

    Strategy strategy;
    std::variant<Measurement, Povm> measurement;
    double error_probability = 0.0;
    double failure_probability = 0.0;
    std::vector<PerStateStats> per_state_stats;

    const Povm& povm() const { return std::get<Povm>(measurement); }
};

// Gram matrix A_ij = <psi_i|psi_j>; Hermitian, unit diagonal, PSD.
struct OverlapMatrix {
    Matrix entries;
};

OverlapMatrix overlap_matrix(const std::vector<PureState>& states);

// Projective discrimination of mutually orthogonal states, completed with
// P0 = I - sum P_i. Error NotOrthogonal otherwise.
DiscriminationResult perfect_discrimination(const std::vector<PureState>& states);

// Two-state minimum error. E1 spans the negative eigenvectors of
// Lambda = p2 rho2 - p1 rho1; zero-eigenvalue vectors go to E2.
DiscriminationResult helstrom_two_state(double p1, const DensityOperator& rho1, double p2,
                                        const DensityOperator& rho2);

// (1 - sqrt(1 - 4 p1 p2 |overlap|^2)) / 2.
double helstrom_pure_bound(double p1, double p2, Complex overlap);

struct OptimalityDiagnostics {
    bool optimal = false;
    double max_operator_violation = 0.0;   // largest eigenvalue of p_j rho_j - Gamma
    double max_cross_residual = 0.0;       // largest entry of E_i (p_i rho_i - p_j rho_j) E_j
    double hermiticity_residual = 0.0;     // Gamma must be Hermitian at an optimum
};

// Necessary and sufficient minimum-error conditions for a POVM.
OptimalityDiagnostics verify_min_error_optimality(const Ensemble& e, const Povm& povm);

// Independent oracle: minimum error over projective qubit measurements,
// Bloch-angle grid plus golden-section refinement. Deterministic.
double brute_force_min_error(const Ensemble& e, int grid);

// Unambiguous two-state discrimination: the IDP POVM inside its existence
// range, otherwise the better projective fallback.
DiscriminationResult uqsd_two_state(double p1, const PureState& psi1, double p2,
                                    const PureState& psi2);

// Biorthogonal set with <psi_k|recip_i> = delta_ki (unnormalized).
std::vector<Vector> reciprocal_states(const std::vector<PureState>& states);

struct QssFeasibility {
    bool feasible = false;
    Matrix failure_operator;  // F = A - K o A'
    double min_eigenvalue_k = 0.0;
    double min_eigenvalue_f = 0.0;
};

// Feasible iff K and F = A - K o A' are both PSD (Hadamard product o).
QssFeasibility qss_feasibility(const OverlapMatrix& a, const OverlapMatrix& a_target,
                               const Matrix& k);

struct QssOperators {
    std::vector<Matrix> success_operators;  // M_S-lambda, target_dim x source_dim
    RealVector per_state_success;           // K_ii
    double total_success_probability = 0.0; // sum_i p_i K_ii
};

QssOperators qss_success_operators(const std::vector<std::pair<double, PureState>>& ensemble,
                                   const std::vector<PureState>& targets, const Matrix& k);

}  // namespace qsd
