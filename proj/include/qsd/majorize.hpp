#pragma once

// Majorization order, Nielsen / Jonathan-Plenio feasibility, T-transform
// chains, Birkhoff decomposition and the constructive measurement realizing a
// majorization-feasible transformation.

#include <optional>
#include <vector>

#include "qsd/measure.hpp"

namespace qsd {

// Nonnegative components summing to one.
struct ProbVector {
    RealVector components;

    explicit ProbVector(RealVector c);
    ProbVector(std::initializer_list<double> c);
    Eigen::Index size() const { return components.size(); }
};

enum class MajorizationVerdict { LeftMajorized, RightMajorized, Equal, Incomparable };

const char* to_string(MajorizationVerdict v);

struct MajorizationReport {
    MajorizationVerdict verdict;
    RealVector prefix_sums_left;   // prefix sums of the left vector, sorted descending
    RealVector prefix_sums_right;  // likewise for the right vector
    std::optional<int> first_violation_index;  // first prefix violating left < right
};

// Prefix-sum comparison with tolerance 1e-10; unequal lengths zero-padded.
// LeftMajorized means x is majorized by y (x can be reached from y).
MajorizationReport majorizes(const ProbVector& x, const ProbVector& y);

// lambda(source) majorized by lambda(target) on squared Schmidt coefficients.
bool nielsen_feasible(const PureState& source, const PureState& target);

// lambda(source) majorized by sum_i p_i lambda(target_i), each target vector
// sorted descending before mixing.
bool probabilistic_feasible(const PureState& source,
                            const std::vector<std::pair<double, PureState>>& targets);

// Doubly stochastic matrices mixing exactly two coordinates. Requires both
// vectors descending and x majorized by y; the product of the returned
// transforms maps y to x. Chain length at most d-1.
std::vector<RealMatrix> t_transform_chain(const ProbVector& x, const ProbVector& y);

struct BirkhoffTerm {
    double weight;
    std::vector<int> permutation;  // row i of the permutation matrix has its 1 at column permutation[i]
};

RealMatrix permutation_matrix(const std::vector<int>& permutation);

// d = sum_j weight_j P_j with positive weights summing to one.
std::vector<BirkhoffTerm> birkhoff_decompose(const RealMatrix& d);

// Measurement {M_ij} with M_ij rho M_ij^dagger = p_i q_j rho_i (targets and
// rho diagonal in the computational basis with descending eigenvalues).
Measurement construct_transform_measurement(
    const DensityOperator& rho, const std::vector<std::pair<double, DensityOperator>>& targets);

}  // namespace qsd
