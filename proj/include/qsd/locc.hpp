#pragma once

// LOCC protocol constructions: equi-diagonalization, the Walgate two-state
// protocol, its nonorthogonal extension, the Nielsen two-qubit entanglement
// transformation and distillation outcome statistics.

#include "qsd/discriminate.hpp"

namespace qsd {

struct EquidiagResult {
    Matrix unitary;            // U with transformed = U * input * U^dagger
    Matrix transformed;
    double max_abs_diagonal;   // after subtracting the common diagonal value
};

// Single rotation of the Walgate form; diagonal entries of U M U^dagger equal.
EquidiagResult equidiag_2x2(const Matrix& m);

// Recursive pairing for 2^k x 2^k matrices, at most k 2^(k-1) rotations.
EquidiagResult equidiag_power2(const Matrix& m);

struct PaddedPair {
    PureState psi1;
    PureState psi2;
    int original_dim_a;
    int padded_dim_a;   // 2 * original (unchanged when already a power of two)
    int block_dim;      // 2^k with original <= 2^k <= padded
};

// Doubles Alice's dimension with a |0> ancilla; appended amplitudes are
// exactly zero and all inner products are preserved.
PaddedPair ancilla_pad(const PureState& psi1, const PureState& psi2);

struct WalgateBranch {
    Vector bob_state_1;  // Bob's conditional state for psi1 (normalized, or zero)
    Vector bob_state_2;  // for psi2; orthogonal to bob_state_1
};

struct WalgateProtocol {
    Matrix alice_basis;                 // orthonormal columns |i'>
    std::vector<WalgateBranch> branches;
    double zero_diagonal_residual;      // max |<nu_i|mu_i>| after rotation
    int padded_dim_a;
    int dim_b;
};

// Perfect LOCC discrimination of two orthogonal bipartite pure states.
WalgateProtocol walgate_protocol(const PureState& psi1, const PureState& psi2);

// Simulates the two-round protocol through the measurement formalism and
// returns each state's identification probability.
std::pair<double, double> walgate_identification_probabilities(const WalgateProtocol& proto,
                                                               const PureState& psi1,
                                                               const PureState& psi2);

struct VirmaniResult {
    std::vector<Ensemble> branch_ensembles;  // Bob's posterior pair per Alice outcome
    std::vector<double> branch_overlaps;     // dA * |diag entry|, equal across branches
    std::vector<double> branch_errors;       // helstrom_pure_bound per branch
    double achievable_error;                 // average of the branch errors
};

// Nonorthogonal extension: after equi-diagonalizing psi1 psi2^dagger every
// Alice outcome leaves Bob a pair with the same inner product.
VirmaniResult virmani_nonorthogonal(const PureState& psi1, const PureState& psi2, double p1,
                                    double p2);

struct NielsenProtocol {
    Measurement measurement;  // Alice's {M1, M2}
    double alpha;
    double beta;
    PureState intermediate;   // the rotated source both operators act on
};

// Deterministic LOCC conversion between two-qubit pure states with source
// Schmidt^2 = (p1, 1-p1) and target (q1, 1-q1); requires 1/2 <= p1 <= q1 <= 1.
NielsenProtocol nielsen_protocol_2qubit(double p1, double q1);

struct DistillStats {
    std::vector<double> probabilities;        // binomial outcome law
    std::vector<std::uint64_t> subspace_dims; // C(n, k)
};

// Outcome statistics of the incomplete projective measurement over n copies.
DistillStats distill_outcome_stats(int n, double cos2theta);

}  // namespace qsd
