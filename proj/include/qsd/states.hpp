#pragma once

// Pure and mixed state types, validation, purification, Schmidt analysis and
// the entanglement monotones used throughout the discrimination toolkit.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "qsd/linalg.hpp"

namespace qsd {

// Normalized amplitude vector with a bipartite split dA*dB. Monopartite
// states use dim_b = 1.
class PureState {
  public:
    PureState(Vector amplitudes, int dim_a, int dim_b = 1);

    const Vector& amplitudes() const { return amps_; }
    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim() const { return static_cast<int>(amps_.size()); }

    // Amplitudes reshaped to a dA x dB coefficient matrix (row-major split).
    Matrix coefficient_matrix() const;
    Matrix projector() const;

  private:
    Vector amps_;
    int dim_a_;
    int dim_b_;
};

Complex overlap(const PureState& a, const PureState& b);

// Trace-one positive semidefinite operator, validated on construction via
// validate_density.
class DensityOperator {
  public:
    const Matrix& matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }
    const std::optional<std::pair<int, int>>& dims() const { return dims_; }
    DensityOperator with_dims(int dim_a, int dim_b) const;

  private:
    friend DensityOperator validate_density(const Matrix&,
                                            std::optional<std::pair<int, int>>);
    DensityOperator(Matrix m, std::optional<std::pair<int, int>> dims)
        : mat_(std::move(m)), dims_(dims) {}
    Matrix mat_;
    std::optional<std::pair<int, int>> dims_;
};

using State = std::variant<PureState, DensityOperator>;

DensityOperator to_density(const State& s);
int state_dim(const State& s);

// Finite list of (probability, state) pairs; probabilities nonnegative and
// summing to one.
struct Ensemble {
    std::vector<std::pair<double, State>> items;

    Ensemble() = default;
    Ensemble(std::initializer_list<std::pair<double, State>> init);
    void validate() const;
    std::size_t size() const { return items.size(); }
};

struct SchmidtDecomposition {
    RealVector coefficients;  // nonnegative, descending, sum of squares 1
    Matrix left_basis;        // orthonormal columns |i_A>
    Matrix right_basis;       // orthonormal columns |i_B>
    int rank;                 // coefficients above 1e-12
};

// rho = sum p_i rho_i with pure states projected first.
DensityOperator density_from_ensemble(const Ensemble& e);

// Rejects with NotHermitian / NotPSD (most negative eigenvalue reported) /
// TraceNotOne.
DensityOperator validate_density(const Matrix& m,
                                 std::optional<std::pair<int, int>> dims = std::nullopt);

// Bipartite pure state on d x d whose reduction reproduces rho. Canonical
// ancilla basis, eigenvalues in descending order.
PureState purify(const DensityOperator& rho);

SchmidtDecomposition schmidt_decompose(const PureState& psi);

// Von Neumann entropy of the reduced state, in ebits.
double entanglement_entropy(const PureState& psi);

// Wootters concurrence of a two-qubit state.
double concurrence(const DensityOperator& rho);

// log2 of the trace norm of the partial transpose.
double log_negativity(const DensityOperator& rho);
double log_negativity(const DensityOperator& rho, int dim_a, int dim_b);

}  // namespace qsd
