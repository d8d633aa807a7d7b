#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsuper/algebra.hpp"

namespace qsuper {

// Skew pairing (y, x) for y in U^- and x in U^+, via the weight-block Gram
// matrices. Terms of different weight pair to zero.
Scalar skew_pair(const Algebra& A, const Element& y, const Element& x);

// The same pairing evaluated directly on free words by the recursion
// (y, E_j x') = (F_j, E_j) (r_j(y), x'), without any quotient. Memoized.
class FreeWordPairing {
 public:
  using Word = std::vector<int>;
  explicit FreeWordPairing(const RootDatum& rd);
  Scalar operator()(const Word& fw, const Word& ew);
  // r_j on a free F-word, as a combination of free words.
  std::map<Word, Scalar> r(int j, const Word& fw) const;

 private:
  const RootDatum& rd_;
  std::map<std::pair<Word, Word>, Scalar> memo_;
};

// All free words of weight mu and their Gram matrix.
struct GramBlock {
  Grade mu{};
  std::vector<std::vector<int>> words;
  SMat matrix;  // matrix(a, b) = (F-word a, E-word b)
  int rank = 0;
};
GramBlock free_gram_block(const Algebra& A, const Grade& mu);

// v[i] in U^-_{-mu}, u[j] in U^+_mu with (v_i, u_j) = delta_ij.
struct DualBases {
  std::vector<Element> v, u;
};
DualBases dual_bases(const Algebra& A, const Grade& mu);

// Ad-invariant form on U. A term y K_eta x with y of weight -nu is read as
// (y K_nu) K_{eta - nu} x.
Scalar rosso_form(const Algebra& A, const Element& a, const Element& b);

// Theta_mu = sum_i v_i (x) u_i, and the truncation sum over ht(mu) <= cutoff.
TensorElement theta_block(const Algebra& A, const Grade& mu);
TensorElement quasi_r_matrix(const Algebra& A, int cutoff);

// Verifies the three intertwining relations of Theta_mu for all mu of height
// <= cutoff. On failure returns false and describes the first violation.
bool check_theta_relations(const Algebra& A, int cutoff, std::string* why = nullptr);

}  // namespace qsuper
