#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsuper/scalar.hpp"

namespace qsuper {

constexpr int kMaxRank = 8;

// Integer vector in simple-root coordinates; unused tail entries stay zero.
using Grade = std::array<int, kMaxRank>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

enum class Family { A, B, C, D, D21, F4, G3 };

RatVec to_ratvec(const Grade& g, int rank);
// Throws std::domain_error when a coordinate is not an integer.
Grade to_grade(const RatVec& v);
Grade grade_unit(int i);
Grade operator+(const Grade& a, const Grade& b);
Grade operator-(const Grade& a, const Grade& b);
Grade operator-(const Grade& a);
Grade scaled(const Grade& a, int k);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec scaled(const RatVec& a, const Rat& k);
bool is_zero(const Grade& g);
int height(const Grade& g);
// True when every coordinate is non-negative.
bool nonneg(const Grade& g);
// Nonzero elements of Z_+Pi of height <= h, in lexicographic order.
std::vector<Grade> positive_weights_up_to(int rank, int h);

// A basic root datum for a simple Lie superalgebra with its distinguished
// Borel: simple-root Gram matrix, parities, positive even/odd roots, rho, the
// even Weyl group and the v-power D with v^D = q.
class RootDatum {
 public:
  // Accepts "A(m,n)", "B(m,n)", "C(n)", "D(m,n)", "D(2,1;a)", "F(4)", "G(3)".
  // Throws std::invalid_argument for anything else, A(1,1) and A(0,0) included.
  static RootDatum make(const std::string& descriptor);

  const std::string& name() const { return name_; }
  Family family() const { return family_; }
  int rank() const { return rank_; }
  // 0-based index of the unique odd simple root.
  int odd_index() const { return odd_; }
  bool odd_isotropic() const { return gram_[odd_][odd_] == 0; }
  bool type_one() const { return family_ == Family::A || family_ == Family::C; }
  // A(n,n): simple roots are linearly dependent and K_relation = 1.
  bool degenerate() const { return degenerate_; }
  const Grade& relation() const { return relation_; }
  int D() const { return D_; }

  const RatMat& gram() const { return gram_; }
  Rat form(const RatVec& a, const RatVec& b) const;
  Rat form(const Grade& a, const Grade& b) const;
  Rat form(const RatVec& a, const Grade& b) const;
  Rat form_simple(const Grade& a, int i) const;
  Rat d(int i) const { return d_[i]; }
  // q_i = q^{d_i}.
  Scalar q_i(int i) const { return qpow(d_[i]); }
  Rat cartan(int i, int j) const { return gram_[i][j] / d_[i]; }
  int parity(int i) const { return i == odd_ ? 1 : 0; }
  int parity_of(const Grade& g) const { return ((g[odd_] % 2) + 2) % 2; }
  Scalar qpow(const Rat& e) const { return q_power(e, D_); }

  const std::vector<Grade>& pos_even() const { return pos_even_; }
  const std::vector<Grade>& pos_odd() const { return pos_odd_; }
  // Positive odd roots with (a,a) = 0.
  const std::vector<Grade>& pos_iso() const { return pos_iso_; }
  const RatVec& rho() const { return rho_; }
  RatVec two_rho() const { return scaled(rho_, Rat(2)); }

  // Reflections in the simple roots of the even positive system.
  const std::vector<RatMat>& weyl_generators() const { return weyl_gens_; }
  const std::vector<RatMat>& weyl() const { return weyl_; }
  const std::vector<int>& weyl_lengths() const { return weyl_len_; }
  RatVec apply(const RatMat& w, const RatVec& x) const;

  // <lambda, alpha> = 2 (lambda, alpha) / (alpha, alpha).
  Rat coroot_pairing(const RatVec& lambda, const Grade& alpha) const;
  bool in_lambda(const RatVec& lambda) const;
  bool in_lambda_plus(const RatVec& lambda) const;
  bool in_2lambda_zphi(const RatVec& lambda) const;
  bool is_typical(const RatVec& lambda) const;
  // lambda <= mu iff mu - lambda lies in Z_+ Pi.
  bool leq(const RatVec& lambda, const RatVec& mu) const;

  // Canonical representative of a K exponent (only changes anything for A(n,n)).
  Grade canonical_k(Grade k) const;

  // Labels of the ambient orthogonal-style basis (e1, d1, ...).
  const std::vector<std::string>& ambient_labels() const { return amb_labels_; }
  // Converts ambient coordinates into simple-root coordinates; throws when the
  // vector is not in the span of the roots.
  RatVec from_ambient(const RatVec& amb) const;
  // Highest weight of the natural representation, when the family has one.
  RatVec natural_highest_weight() const;
  bool has_natural_module() const;

  std::string weight_string(const RatVec& w) const;

 private:
  RootDatum() = default;
  void finish(const std::vector<RatVec>& simple_amb, const std::vector<RatVec>& even_amb,
              const std::vector<RatVec>& odd_amb, const RatVec& extra_kernel);

  std::string name_;
  Family family_ = Family::A;
  int m_ = 0, n_ = 0;
  int rank_ = 0;
  int odd_ = 0;
  bool degenerate_ = false;
  Grade relation_{};
  int D_ = 2;
  RatMat gram_;
  std::vector<Rat> d_;
  std::vector<Grade> pos_even_, pos_odd_, pos_iso_;
  RatVec rho_;
  std::vector<RatMat> weyl_gens_, weyl_;
  std::vector<int> weyl_len_;
  std::vector<std::string> amb_labels_;
  RatMat amb_gram_;
  std::vector<RatVec> simple_amb_;
  RatVec amb_kernel_;  // ambient vector identified with zero (A types), may be empty
  RatVec natural_amb_;
};

}  // namespace qsuper
