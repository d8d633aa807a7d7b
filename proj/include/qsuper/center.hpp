#pragma once

#include <string>
#include <vector>

#include "qsuper/modules.hpp"
#include "qsuper/pairing.hpp"

namespace qsuper {

// Element of End(M) (x) U stored as a dim x dim matrix of algebra elements:
// the pair (r, c) carries e_rc (x) at(r, c). Products use the super sign of
// the matrix units, |e_rc| = |m_r| + |m_c|.
struct EndoElement {
  const WeightModule* M = nullptr;
  std::vector<Element> a;

  EndoElement() = default;
  explicit EndoElement(const WeightModule& mod);
  static EndoElement identity(const WeightModule& mod);

  int dim() const { return M->dim(); }
  Element& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim() + c]; }
  const Element& at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim() + c]; }

  friend EndoElement operator*(const EndoElement& x, const EndoElement& y);
  friend EndoElement operator+(const EndoElement& x, const EndoElement& y);
  friend bool operator==(const EndoElement& x, const EndoElement& y) { return x.a == y.a; }
};

// (zeta (x) 1)(t).
EndoElement zeta_tensor(const WeightModule& M, const TensorElement& t);

// Largest height of wt_a - wt_b over pairs of weights of M; zeta vanishes on
// U^-_{-nu} and U^+_nu beyond it.
int weight_spread(const WeightModule& M);

// Inverse of the truncated quasi-R-matrix in U (x) U, exact on terms of
// height <= cutoff.
TensorElement inverse_theta(const Algebra& A, int cutoff);

// Super flip followed by phi: y (x) x |-> (-1)^{|x||y|} x K_mu (x) K_{-mu} y
// for y in U^-_{-mu}, x in U^+_mu.
TensorElement phi_op(const Algebra& A, const TensorElement& r);

struct GammaData {
  EndoElement theta;    // (zeta (x) 1)(Theta)
  EndoElement r;        // R_M
  EndoElement phi_rop;  // phi(R_M^op)
  EndoElement k;        // sum_eta P_eta (x) K_{2 eta}
  EndoElement gamma;    // k * phi_rop * r
};

// Builds Gamma_M and, when verify is set, checks that it commutes with
// (zeta (x) 1) Delta of every generator; throws std::logic_error otherwise.
GammaData gamma_operator(const WeightModule& M, bool verify = true);

// C_M^(k) = Str_1((zeta(K_{2 rho}) (x) 1) Gamma_M^k). k above max_k is rejected.
Element casimir(const WeightModule& M, int k, int max_k = 4);

// The element z_M with <u, z_M> equal to the supertrace of u K_{2 rho}^{-1}
// on M for every u.
Element z_element(const WeightModule& M);

// Supertrace of g K_{2 rho}^{-1} on M.
Scalar str_q(const SMat& g, const WeightModule& M);

// z commutes with every E_i, F_i, K_i. On failure describes the first witness.
bool is_central(const Element& z, std::string* why = nullptr);
// Every term of z has zero Q-degree.
bool in_u0(const Element& z);

}  // namespace qsuper
