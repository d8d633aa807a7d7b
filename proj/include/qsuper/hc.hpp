#pragma once

#include <map>
#include <string>

#include "qsuper/modules.hpp"

namespace qsuper {

// sum_mu a_mu K_mu in U^0, keyed by the K exponent in simple-root coordinates.
using LaurentInvariant = std::map<Grade, Scalar>;

// The U^0 block of z; throws std::invalid_argument when some term has nonzero
// Q-degree.
LaurentInvariant cartan_part(const Element& z);
// gamma_lambda: K_mu -> q^{(lambda, mu)} K_mu.
LaurentInvariant gamma_shift(const RootDatum& rd, const LaurentInvariant& h, const RatVec& lambda);
// gamma_{-rho} after the projection.
LaurentInvariant hc_project(const Element& z);

Element to_element(const Algebra& A, const LaurentInvariant& h);
LaurentInvariant laurent_mul(const LaurentInvariant& a, const LaurentInvariant& b);
// sum over W of w(h).
LaurentInvariant weyl_symmetrize(const RootDatum& rd, const LaurentInvariant& h);

enum class WsupMode {
  LineSums,    // coefficient sums along isotropic lines
  Derivative,  // D_alpha(h) divisible by K_alpha^2 - 1
};

struct WsupResult {
  bool pass = true;
  std::string reason;  // first violated condition when !pass
};
WsupResult wsup_membership(const RootDatum& rd, const LaurentInvariant& h, WsupMode mode);

// iota: K_mu -> e^{-mu/2}. Fails when a coefficient is not an integer.
bool iota(const RootDatum& rd, const LaurentInvariant& h, Character* out, std::string* why = nullptr);
// iota(HC(z)) == Sch(M).
bool sch_compare(const WeightModule& M, const Element& z);

// lambda(pi(z)) with lambda(K_mu) = q^{(lambda, mu)}.
Scalar central_eigenvalue(const RootDatum& rd, const RatVec& lambda, const Element& z);

// sum_{w in W} w(K_lambda prod_{alpha isotropic, positive} (1 - K_{-2 alpha})).
LaurentInvariant k_lambda(const RootDatum& rd, const Grade& lambda);

}  // namespace qsuper
