#pragma once

// Quantitative case studies: Ghosh negativity tests, majorization
// indistinguishability, entanglement-assisted discrimination and the
// entanglement-preserving bounds with the cost-vs-entanglement scan.

#include "qsd/majorize.hpp"

namespace qsd {

// Coefficients of the conjugate two-qubit family
//   psi1 = a|00> + b|11>,  psi2 = b|00> - a|11>,
//   psi3 = c|01> + d|10>,  psi4 = d|01> - c|10>,
// real, normalized pairwise, with a >= b and c >= d.
struct BellFamilyParams {
    double a, b, c, d;

    static BellFamilyParams from_ac(double a, double c);
    static BellFamilyParams make(double a, double b, double c, double d);
};

// The four family states as two-qubit amplitude vectors, |AB> index order.
std::vector<Vector> bell_family_states(const BellFamilyParams& p);
// Bell basis (|00>+|11>, |00>-|11>, |01>+|10>, |01>-|10>)/sqrt(2).
std::vector<Vector> bell_basis_states();

struct BoundReport {
    double bound_value = 0.0;
    bool satisfied = false;
    std::string witness;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct Ghosh4Report {
    BoundReport report;               // satisfied iff E_N >= 1
    double numeric_log_negativity = 0.0;
    double closed_form = 0.0;         // log2(a^2 + c^2)
};

// Four-state test: log-negativity of the correlated four-party state across
// the AC:BD cut, against the closed form log2(a^2+c^2).
Ghosh4Report ghosh4_negativity(const BellFamilyParams& p);

struct Ghosh3Report {
    BoundReport report;               // satisfied tracks the printed condition > 3/4
    double numeric_log_negativity = 0.0;
    double closed_form = 0.0;
    double condition_value = 0.0;     // 4a^2b^2 - c^2d^2 (swapped when anti-parallel)
    bool negativity_bound_met = false;  // numeric E_N >= 1; equals condition <= 3/4
    bool anti_parallel = false;
};

// Three-state test; anti_parallel selects {psi1, psi3, psi4} instead of
// {psi1, psi2, psi3} and swaps (a,b) with (c,d) in the closed forms.
Ghosh3Report ghosh3_negativity(const BellFamilyParams& p, bool anti_parallel = false);

struct Maj4Report {
    BoundReport report;  // satisfied iff lambda(Tr_BD) majorized by (1/2,1/2,0,0)
    RealVector numeric_eigenvalues;
    RealVector analytic_eigenvalues;  // (a+-b+-c+-d)^2 / 8 patterns
    MajorizationVerdict verdict = MajorizationVerdict::Incomparable;
};

Maj4Report maj4_indistinguishability(const BellFamilyParams& p);

struct Maj3Report {
    BoundReport report;
    RealVector numeric_eigenvalues;
    MajorizationVerdict verdict = MajorizationVerdict::Incomparable;
};

Maj3Report maj3_feasibility(const BellFamilyParams& p);

struct AssistedReport {
    BoundReport report;            // alpha^2 <= 4/(a+b+c+d)^2
    double lambda1_numeric = 0.0;
    double lambda1_analytic = 0.0; // (a+b+c+d)^2 / 8
};

AssistedReport assisted_bound(const BellFamilyParams& p);

struct Preserve2Report {
    BoundReport report;              // alpha^2 <= (a^2 cd + c^2 ab)/(ab + cd)
    double p1 = 0.0, p2 = 0.0;       // det rho_A = 0 mixing weights
    double det_residual = 0.0;
    double second_schmidt = 0.0;     // product check for Psi
    double concurrence_phi = 0.0;    // geometric mean sqrt(C1 C2)
    double concurrence_closed_form = 0.0;  // 2 sqrt(abcd)
    double concurrence_saturating = 0.0;   // concurrence of the bound-saturating state
    bool degenerate = false;         // ab + cd ~ 0: bound vacuous
};

// Two-state entanglement-preserving bound (psi1 = a|00>+b|11>,
// psi2 = c|01>+d|10>).
Preserve2Report preserve2_bound(const BellFamilyParams& p);

struct Preserve4ProductReport {
    BoundReport report;       // alpha^2 <= min(a^2, c^2)
    double grid_min = 0.0;    // endpoint grid search over (x_A^2, x_B^2)
    double second_schmidt_at_min = 0.0;
};

Preserve4ProductReport preserve4_product_bound(const BellFamilyParams& p, int grid = 100);

struct Preserve4BellReport {
    BoundReport report;
    RealVector rhs;            // (a^4+c^4, a^2b^2+c^2d^2, ..., b^4+d^4)/2 descending
    double second_singular = 0.0;  // product check across the AAbar:BBbar cut
    double cost_ebits = 0.0;       // entropy of rhs, the minimal-resource entanglement
};

Preserve4BellReport preserve4_bell_bound(const BellFamilyParams& p);

struct Figure1Row {
    double a2 = 0.0, c2 = 0.0;
    double avg_entanglement = 0.0;
    double cost = 0.0;
    bool on_diagonal = false;
    bool on_cusp = false;
};

// Entanglement cost versus average entanglement over an (a^2, c^2) grid in
// [1/2, 1]^2, row order fixed by grid index.
std::vector<Figure1Row> figure1_scan(int grid);

}  // namespace qsd
