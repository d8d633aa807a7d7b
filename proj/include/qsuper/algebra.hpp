#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qsuper/matrix.hpp"
#include "qsuper/rootdata.hpp"

namespace qsuper {

class Algebra;

// One graded piece U^+_mu together with U^-_{-mu}. Both sides are quotients of
// the free algebra by the radical of the skew pairing. Basis elements are
// words; every basis word is a letter followed by a basis word one step lower,
// so left multiplication by a generator is a matrix into this block.
struct WeightBlock {
  Grade mu{};
  int dim = 0;
  int parity = 0;
  std::vector<std::vector<int>> fwords, ewords;
  std::vector<std::pair<int, int>> fsplit, esplit;  // (first letter, suffix index below)
  SMat gram;      // gram(a, b) = (F-basis a, E-basis b)
  SMat gram_inv;  // row a: coordinates of the dual vector v_a in the F-basis
  // Indexed by generator i; empty when mu - alpha_i is not >= 0.
  std::vector<SMat> lmulF, lmulE;  // dim x dim(mu - alpha_i)
  std::vector<SMat> rF, rpF;       // r_i, r'_i on U^-: dim(mu - alpha_i) x dim
  std::vector<SMat> rE, rpE;       // r_i, r'_i on U^+: dim(mu - alpha_i) x dim
};

// Normal-ordered monomial y * K_k * x: y is F-basis element fi of weight fw,
// x is E-basis element ei of weight ew.
struct Monomial {
  Grade fw{};
  int fi = 0;
  Grade k{};
  Grade ew{};
  int ei = 0;
  auto operator<=>(const Monomial&) const = default;
};

class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;
  Element() = default;
  explicit Element(const Algebra* a) : alg_(a) {}
  Element(const Algebra* a, const Monomial& m, Scalar c = Scalar(1));

  const Algebra* algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Monomial& m, const Scalar& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  // Parity of a homogeneous element; throws when mixed.
  int parity() const;
  // Q-grading ew - fw of a homogeneous element; throws when mixed.
  Grade degree() const;

 private:
  const Algebra* alg_ = nullptr;
  Terms terms_;
};

// Element of U (x) U with super tensor product multiplication.
class TensorElement {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Terms = std::map<Key, Scalar>;
  TensorElement() = default;
  explicit TensorElement(const Algebra* a) : alg_(a) {}
  static TensorElement pure(const Element& a, const Element& b);

  const Algebra* algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Monomial& a, const Monomial& b, const Scalar& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& s);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

 private:
  const Algebra* alg_ = nullptr;
  Terms terms_;
};

// U_q(g) for a root datum. Weight blocks and straightening results are built
// lazily and cached; all caches are guarded by one mutex, so an Algebra may be
// shared between threads.
class Algebra {
 public:
  explicit Algebra(RootDatum rd);
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;
  ~Algebra();

  const RootDatum& datum() const { return rd_; }
  int rank() const { return rd_.rank(); }

  // Optional on-disk cache of weight blocks (see cache.hpp).
  void set_cache_dir(const std::string& dir);
  const std::string& cache_dir() const { return cache_dir_; }

  const WeightBlock& block(const Grade& mu) const;

  Element zero() const { return Element(this); }
  Element one() const;
  Element scalar(const Scalar& s) const;
  Element E(int i) const;
  Element F(int i) const;
  Element K(const Grade& mu) const;
  Element K_simple(int i, int power = 1) const;
  // Free words reduced into the basis.
  Element F_word(const std::vector<int>& w) const;
  Element E_word(const std::vector<int>& w) const;
  SVec reduce_F_word(const std::vector<int>& w) const;
  SVec reduce_E_word(const std::vector<int>& w) const;
  Element from_F_coords(const Grade& mu, const SVec& c) const;
  Element from_E_coords(const Grade& mu, const SVec& c) const;

  // (-1)^{|m|}
  int parity(const Monomial& m) const { return (rd_.parity_of(m.fw) + rd_.parity_of(m.ew)) & 1; }
  Monomial canonical(Monomial m) const {
    m.k = rd_.canonical_k(m.k);
    return m;
  }

  Element mul(const Element& a, const Element& b) const;
  // Product of U^- basis elements: coordinates at weight mu + nu.
  SVec mul_F(const Grade& mu, int a, const Grade& nu, int b) const;
  SVec mul_E(const Grade& mu, int a, const Grade& nu, int b) const;
  // x_a * y_b for an E-basis element and an F-basis element.
  const std::vector<std::pair<Monomial, Scalar>>& straighten(const Grade& mu, int a, const Grade& nu, int b) const;

  // Hopf structure.
  TensorElement coproduct(const Element& u) const;
  Scalar counit(const Element& u) const;
  Element antipode(const Element& u) const;
  Element omega(const Element& u) const;
  Element tau(const Element& u) const;
  // sigma is given by its values (+1/-1) on the simple roots.
  Element sigma_tilde(const Element& u, const std::vector<int>& sigma) const;
  Element ad(const Element& a, const Element& b) const;
  // Super commutator ab - (-1)^{|a||b|} ba for homogeneous a, b.
  Element supercommutator(const Element& a, const Element& b) const;

  // Derivations on U^- (elements with no K and no E part).
  Element r(int i, const Element& y) const;
  Element r_prime(int i, const Element& y) const;
  // Derivations on U^+.
  Element r_plus(int i, const Element& x) const;
  Element r_prime_plus(int i, const Element& x) const;

  // Scalar helpers.
  Scalar qform(const Grade& a, const Grade& b) const { return rd_.qpow(rd_.form(a, b)); }
  Scalar qq_minus(int i) const;  // q_i - q_i^{-1}
  Scalar pair_FE(int i) const;   // (F_i, E_i) = -1 / (q_i - q_i^{-1})

 private:
  std::unique_ptr<WeightBlock> build_block(const Grade& mu) const;
  const std::vector<SVec>& product_table(bool fside, const Grade& mu, const Grade& nu) const;
  void mul_monomials(const Monomial& m1, const Monomial& m2, const Scalar& c, Element& out) const;
  const TensorElement& coproduct_F(const Grade& mu, int a) const;
  const TensorElement& coproduct_E(const Grade& mu, int a) const;
  const Element& antipode_F(const Grade& mu, int a) const;
  const Element& antipode_E(const Grade& mu, int a) const;

  RootDatum rd_;
  std::string cache_dir_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Grade, std::unique_ptr<WeightBlock>> blocks_;
  mutable std::map<std::tuple<bool, Grade, Grade>, std::vector<SVec>> ptab_;
  using StraightKey = std::tuple<Grade, int, Grade, int>;
  mutable std::map<StraightKey, std::vector<std::pair<Monomial, Scalar>>> straight_;
  mutable std::map<std::pair<Grade, int>, TensorElement> cop_f_, cop_e_;
  mutable std::map<std::pair<Grade, int>, Element> ant_f_, ant_e_;
};

}  // namespace qsuper
