#pragma once

// Measurement formalism: Kraus sets, POVMs, outcome statistics, posterior
// states, forgetful application and Bayesian updates over ensembles.

#include <string>
#include <vector>

#include "qsd/states.hpp"

namespace qsd {

// Kraus operator set {M_m} with sum M^dagger M = identity.
class Measurement {
  public:
    Measurement(std::vector<Matrix> operators, std::vector<std::string> labels = {});

    const std::vector<Matrix>& operators() const { return ops_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return ops_.size(); }
    int dim() const { return static_cast<int>(ops_.front().cols()); }
    double completeness_residual() const;

  private:
    std::vector<Matrix> ops_;
    std::vector<std::string> labels_;
};

// POVM elements {E_m}: Hermitian PSD, summing to the identity. Carries
// statistics only; posterior states need a Kraus factorization.
class Povm {
  public:
    Povm(std::vector<Matrix> elements, std::vector<std::string> labels = {});

    const std::vector<Matrix>& elements() const { return elems_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return elems_.size(); }
    int dim() const { return static_cast<int>(elems_.front().cols()); }

  private:
    std::vector<Matrix> elems_;
    std::vector<std::string> labels_;
};

// p_m = Tr(M_m^dagger M_m rho), clamped to [0,1].
std::vector<double> outcome_probabilities(const Measurement& m, const DensityOperator& rho);
std::vector<double> outcome_probabilities(const Povm& m, const DensityOperator& rho);

// M rho M^dagger / p_m; rejects outcomes with probability <= 1e-12.
DensityOperator posterior_state(const Measurement& m, const DensityOperator& rho,
                                std::size_t outcome);

// rho' = sum_m M rho M^dagger.
DensityOperator forgetful_apply(const Measurement& m, const DensityOperator& rho);

// p(i|m) = p(m|i) p_i / p_m over the ensemble members; states unchanged.
Ensemble bayes_posterior(const Ensemble& prior, const Measurement& m, std::size_t outcome);
Ensemble bayes_posterior(const Ensemble& prior, const Povm& m, std::size_t outcome);

}  // namespace qsd
