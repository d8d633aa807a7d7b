#include <gtest/gtest.h>

#include <random>

#include "qsuper/pairing.hpp"

using namespace qsuper;

namespace {

Grade G(std::initializer_list<int> v) {
  Grade g{};
  int i = 0;
  for (int x : v) g[i++] = x;
  return g;
}

Scalar q(const Algebra& A, int k) { return A.datum().qpow(Rat(k)); }

std::vector<std::vector<int>> words_of(const Grade& mu, int rank) {
  std::vector<int> w;
  for (int i = 0; i < rank; ++i) w.insert(w.end(), mu[i], i);
  std::vector<std::vector<int>> out;
  std::sort(w.begin(), w.end());
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Random sum of basis monomials y K x with ht(y) + ht(x) <= 3.
Element random_sum(const Algebra& A, std::mt19937& rng, int nterms) {
  std::vector<Grade> ws{Grade{}};
  for (auto& g : positive_weights_up_to(A.rank(), 2)) ws.push_back(g);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(ws.size()) - 1), kexp(-1, 1), coef(-3, 3);
  Element e(&A);
  for (int t = 0; t < nterms; ++t) {
    Grade f = ws[pick(rng)], x = ws[pick(rng)];
    if (height(f) + height(x) > 3) continue;
    int df = A.block(f).dim, dx = A.block(x).dim;
    if (!df || !dx) continue;
    Monomial m;
    m.fw = f;
    m.fi = std::uniform_int_distribution<int>(0, df - 1)(rng);
    m.ew = x;
    m.ei = std::uniform_int_distribution<int>(0, dx - 1)(rng);
    for (int i = 0; i < A.rank(); ++i) m.k[i] = kexp(rng);
    m = A.canonical(m);
    int c = coef(rng);
    e.add(m, Scalar(c ? c : 1));
  }
  return e;
}

std::vector<Element> homogeneous_parts(const Element& e) {
  std::map<int, Element> parts;
  for (auto& [m, c] : e.terms()) {
    int p = e.algebra()->parity(m);
    parts.try_emplace(p, Element(e.algebra()));
    parts.at(p).add(m, c);
  }
  std::vector<Element> out;
  for (auto& [p, x] : parts) out.push_back(x);
  return out;
}

}  // namespace

TEST(SkewPair, GeneratorValues) {
  Algebra A(RootDatum::make("B(1,1)"));
  for (int i = 0; i < A.rank(); ++i)
    for (int j = 0; j < A.rank(); ++j) {
      Scalar expect = i == j ? -A.qq_minus(i).inverse() : Scalar(0);
      EXPECT_EQ(skew_pair(A, A.F(i), A.E(j)), expect);
    }
  EXPECT_EQ(skew_pair(A, A.one(), A.one()), Scalar(1));
}

TEST(SkewPair, ReferenceDualBasisOfA10) {
  Algebra A(RootDatum::make("A(1,0)"));
  Scalar qq = q(A, 1) - q(A, -1);
  std::vector<Element> v = {A.F(0) * A.F(1) * qq, A.F(1) * A.F(0) * (-qq)};
  std::vector<Element> u = {A.E(0) * A.E(1) * q(A, 1) - A.E(1) * A.E(0), A.E(0) * A.E(1) - A.E(1) * A.E(0) * q(A, 1)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(skew_pair(A, v[i], u[j]), Scalar(i == j ? 1 : 0));
  // degree one: -(q_i - q_i^{-1}) F_i is dual to E_i
  for (int i = 0; i < 2; ++i) EXPECT_EQ(skew_pair(A, A.F(i) * (-A.qq_minus(i)), A.E(i)), Scalar(1));
}

TEST(SkewPair, FreeWordGramRankIsBlockDimension) {
  for (const char* t : {"A(1,0)", "B(0,1)", "C(2)", "A(2,1)", "B(1,1)", "D(2,1;2)"}) {
    Algebra A(RootDatum::make(t));
    for (const Grade& mu : positive_weights_up_to(A.rank(), 4)) {
      GramBlock g = free_gram_block(A, mu);
      EXPECT_EQ(g.rank, A.block(mu).dim) << t;
    }
  }
}

TEST(SkewPair, ReducedPairingAgreesWithFreeWords) {
  for (const char* t : {"A(1,0)", "B(0,1)", "G(3)"}) {
    Algebra A(RootDatum::make(t));
    FreeWordPairing P(A.datum());
    for (const Grade& mu : positive_weights_up_to(A.rank(), 3)) {
      auto ws = words_of(mu, A.rank());
      for (auto& a : ws)
        for (auto& b : ws) EXPECT_EQ(skew_pair(A, A.F_word(a), A.E_word(b)), P(a, b)) << t;
    }
  }
}

TEST(SkewPair, Axioms) {
  // (b, a a') = sum (b_(1), a') (b_(2), a) and
  // (b b', a) = sum (-1)^{|b'||a_(1)|} (b, a_(1)) (b', a_(2)), using
  // (y K, x) = (y, x) and (y, K_mu x) = q^{(wt y, mu)} (y, x).
  for (const char* t : {"A(1,0)", "B(0,1)", "C(2)"}) {
    Algebra A(RootDatum::make(t));
    const RootDatum& rd = A.datum();
    auto drop_k_left = [&](const Monomial& m) {
      Monomial n = m;
      n.k = Grade{};
      return Element(&A, n);
    };
    for (const Grade& mu : positive_weights_up_to(A.rank(), 3)) {
      auto ws = words_of(mu, A.rank());
      for (auto& bw : ws)
        for (std::size_t cut = 0; cut <= bw.size(); ++cut) {
          std::vector<int> w1(bw.begin(), bw.begin() + cut), w2(bw.begin() + cut, bw.end());
          Element b = A.F_word(bw);
          // second axiom: b against the split E-word a a'
          Element a = A.E_word(w1), a2 = A.E_word(w2);
          Scalar lhs = skew_pair(A, b, a * a2);
          Scalar rhs;
          TensorElement db = A.coproduct(b);
          for (auto& [k, c] : db.terms()) {
            Scalar p1 = skew_pair(A, Element(&A, k.first), a2);
            if (p1.is_zero()) continue;
            rhs += c * p1 * skew_pair(A, drop_k_left(k.second), a);
          }
          EXPECT_EQ(lhs, rhs) << t;
          // first axiom: the split F-word b b' against every E-word
          Element bb = A.F_word(w1), bb2 = A.F_word(w2);
          Grade wb{};
          for (int l : w1) wb[l] += 1;
          for (auto& aw : ws) {
            Element x = A.E_word(aw);
            Scalar l2 = skew_pair(A, bb * bb2, x);
            Scalar r2;
            TensorElement dx = A.coproduct(x);
            for (auto& [k, c] : dx.terms()) {
              Monomial x1 = k.first;
              Grade kk = x1.k;
              x1.k = Grade{};
              Scalar p = skew_pair(A, bb, Element(&A, x1));
              if (p.is_zero()) continue;
              Scalar term = c * p * rd.qpow(rd.form(wb, kk)) * skew_pair(A, bb2, Element(&A, k.second));
              if (rd.parity_of(x1.ew) && rd.parity_of(mu - wb)) term = -term;
              r2 += term;
            }
            EXPECT_EQ(l2, r2) << t;
          }
        }
    }
  }
}

TEST(DualBases, IdentityGramUpToHeightFour) {
  for (const char* t : {"A(1,0)", "B(0,1)", "C(2)", "B(1,1)"}) {
    Algebra A(RootDatum::make(t));
    for (const Grade& mu : positive_weights_up_to(A.rank(), 4)) {
      DualBases d = dual_bases(A, mu);
      ASSERT_EQ(d.v.size(), static_cast<std::size_t>(A.block(mu).dim));
      for (std::size_t i = 0; i < d.v.size(); ++i)
        for (std::size_t j = 0; j < d.u.size(); ++j) EXPECT_EQ(skew_pair(A, d.v[i], d.u[j]), Scalar(i == j ? 1 : 0));
    }
  }
  Algebra A(RootDatum::make("A(1,0)"));
  EXPECT_TRUE(dual_bases(A, G({0, 2})).v.empty());
}

TEST(Rosso, CartanValues) {
  Algebra A(RootDatum::make("A(1,0)"));
  const RootDatum& rd = A.datum();
  for (const Grade& l : {G({1, 0}), G({0, 1}), G({2, -1})})
    for (const Grade& l2 : {G({1, 0}), G({-1, 3})})
      EXPECT_EQ(rosso_form(A, A.K(l2), A.K(l)), rd.qpow(-rd.form(l, l2) / Rat(2)));
  EXPECT_EQ(rosso_form(A, A.one(), A.one()), Scalar(1));
}

TEST(Rosso, DualBasisBlocks) {
  Algebra A(RootDatum::make("A(1,0)"));
  const RootDatum& rd = A.datum();
  Grade mu = G({1, 1}), nu = G({1, 0});
  DualBases dm = dual_bases(A, mu), dn = dual_bases(A, nu);
  Grade lam = G({1, -1}), lam2 = G({0, 2});
  for (std::size_t h = 0; h < dm.v.size(); ++h)
    for (std::size_t l = 0; l < dn.u.size(); ++l)
      for (std::size_t i = 0; i < dn.v.size(); ++i)
        for (std::size_t j = 0; j < dm.u.size(); ++j) {
          Element a = dm.v[h] * A.K(mu + lam2) * dn.u[l];
          Element b = dn.v[i] * A.K(nu + lam) * dm.u[j];
          Scalar expect;
          if (h == j && l == i) {
            expect = rd.qpow(rd.form(rd.two_rho(), mu) - rd.form(lam, lam2) / Rat(2));
            if (rd.parity_of(mu)) expect = -expect;
          }
          EXPECT_EQ(rosso_form(A, a, b), expect);
        }
}

class RossoInvariance : public ::testing::TestWithParam<const char*> {};

TEST_P(RossoInvariance, AdInvariant) {
  Algebra A(RootDatum::make(GetParam()));
  std::mt19937 rng(21);
  std::vector<Element> gens;
  for (int i = 0; i < A.rank(); ++i) {
    gens.push_back(A.E(i));
    gens.push_back(A.F(i));
    gens.push_back(A.K_simple(i));
  }
  int nonzero = 0;
  for (int t = 0; t < 100; ++t) {
    Element v0 = random_sum(A, rng, 4), w = random_sum(A, rng, 6);
    for (const Element& v : homogeneous_parts(v0))
      for (const Element& u : gens) {
        Scalar lhs = rosso_form(A, A.ad(u, v), w);
        Scalar rhs = rosso_form(A, v, A.ad(A.antipode(u), w));
        if (u.parity() && v.parity()) rhs = -rhs;
        EXPECT_EQ(lhs, rhs);
        if (!lhs.is_zero()) ++nonzero;
      }
  }
  EXPECT_GT(nonzero, 20);
}

INSTANTIATE_TEST_SUITE_P(Types, RossoInvariance, ::testing::Values("A(1,0)", "B(0,1)"), [](const auto& info) {
  std::string o;
  for (char c : std::string(info.param)) o += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return o;
});

TEST(Theta, LowCutoffs) {
  Algebra A(RootDatum::make("A(1,0)"));
  EXPECT_EQ(quasi_r_matrix(A, 0), TensorElement::pure(A.one(), A.one()));
  TensorElement expect = TensorElement::pure(A.one(), A.one());
  for (int i = 0; i < 2; ++i) {
    TensorElement t = TensorElement::pure(A.F(i), A.E(i));
    t *= -A.qq_minus(i);
    expect += t;
  }
  EXPECT_EQ(quasi_r_matrix(A, 1), expect);
}

TEST(Theta, RelationsUpToHeightFour) {
  for (const char* t : {"A(1,0)", "B(0,1)", "C(2)"}) {
    Algebra A(RootDatum::make(t));
    std::string why;
    EXPECT_TRUE(check_theta_relations(A, 4, &why)) << t << ": " << why;
  }
}
