#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsuper/algebra.hpp"

namespace qsuper {

// Coefficients of e^lambda, weights in simple-root coordinates.
using Character = std::map<RatVec, long long>;

enum class ModuleStatus {
  Complete,      // every weight space of the module is present
  Truncated,     // a Verma module cut at its depth
  Inconclusive,  // simple quotient did not terminate within the depth
};
const char* status_name(ModuleStatus s);

// Finite-dimensional (or truncated) weight module with a homogeneous basis.
// Matrices act on columns: zeta(E_i) m_b = sum_a E[i](a, b) m_a.
struct WeightModule {
  const Algebra* alg = nullptr;
  std::vector<RatVec> weights;
  std::vector<int> parities;
  std::vector<SMat> E, F;
  bool has_highest = false;
  RatVec highest;
  int depth = 0;
  ModuleStatus status = ModuleStatus::Complete;

  int dim() const { return static_cast<int>(weights.size()); }
  // Diagonal matrix of K_mu: q^{(wt, mu)}.
  SMat K(const Grade& mu) const;
  // zeta(u) for an arbitrary element.
  SMat action(const Element& u) const;
  // zeta of an F-basis (or E-basis) element of a weight block.
  SMat F_basis(const Grade& mu, int a) const;
  SMat E_basis(const Grade& mu, int a) const;

 private:
  mutable std::map<std::pair<Grade, int>, SMat> fcache_, ecache_;
};

// Rejects weights outside (1/2) Z Phi.
void require_half_lattice(const RootDatum& rd, const RatVec& lambda);

// Verma module spanned by U^-_{-beta} v_lambda for ht(beta) <= depth.
WeightModule verma_module(const Algebra& A, const RatVec& lambda, int depth);

// Simple quotient of the Verma module, built weight by weight: a vector in
// weight lambda - beta (beta > 0) vanishes exactly when every E_i kills it.
// highest_parity gives the parity of v_lambda.
WeightModule simple_module(const Algebra& A, const RatVec& lambda, int depth = 8, int highest_parity = 0);

WeightModule trivial_module(const Algebra& A);
// Natural representation; throws std::invalid_argument when undefined.
WeightModule natural_module(const Algebra& A);

WeightModule dual_module(const WeightModule& M);
WeightModule tensor_module(const WeightModule& M, const WeightModule& N);
WeightModule parity_shift(const WeightModule& M);
WeightModule direct_sum(const WeightModule& M, const WeightModule& N);

Character character(const WeightModule& M);
Character supercharacter(const WeightModule& M);
Character char_product(const Character& a, const Character& b);

// Truncated Kac character of the Verma module: coefficients of e^{lambda - g}
// for ht(g) <= height.
Character kac_verma_character(const RootDatum& rd, const RatVec& lambda, int height);
// Typical formula; throws std::invalid_argument for atypical or non-dominant
// lambda. Exact for ht(g) <= height.
Character kac_typical_character(const RootDatum& rd, const RatVec& lambda, int height);
// lambda integral and dominant for the even part.
bool is_even_dominant(const RootDatum& rd, const RatVec& lambda);

// Checks [E_i, F_j] = delta_ij (K_i - K_i^{-1}) / (q_i - q_i^{-1}), the grading
// of E_i, F_i, and that reduced words of height <= h act like the products of
// their letters. Returns an empty string on success.
std::string check_module_relations(const WeightModule& M, int h = 3);

}  // namespace qsuper
