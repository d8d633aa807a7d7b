#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "qsuper/algebra.hpp"

using namespace qsuper;

namespace {

Grade G(std::initializer_list<int> v) {
  Grade g{};
  int i = 0;
  for (int x : v) g[i++] = x;
  return g;
}

// Independent oracle: graded dimension of U(n^-) from the PBW product over
// positive roots (even roots with repetition, odd roots at most once).
int pbw_dim(const RootDatum& rd, const Grade& mu) {
  std::vector<std::pair<Grade, bool>> roots;
  for (auto& b : rd.pos_even()) roots.emplace_back(b, false);
  for (auto& b : rd.pos_odd()) roots.emplace_back(b, true);
  std::map<std::pair<std::size_t, Grade>, int> memo;
  std::function<int(std::size_t, const Grade&)> go = [&](std::size_t k, const Grade& rest) -> int {
    if (is_zero(rest)) return 1;
    if (k == roots.size()) return 0;
    auto key = std::make_pair(k, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int total = 0;
    Grade r = rest;
    for (int m = 0;; ++m) {
      if (!nonneg(r)) break;
      total += go(k + 1, r);
      if (roots[k].second && m == 1) break;
      r = r - roots[k].first;
    }
    memo[key] = total;
    return total;
  };
  return go(0, mu);
}

std::vector<Grade> weights_up_to(int rank, int height) {
  std::vector<Grade> out;
  Grade g{};
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank) {
      if (!is_zero(g)) out.push_back(g);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      g[i] = c;
      rec(i + 1, left - c);
    }
    g[i] = 0;
  };
  rec(0, height);
  return out;
}

// Random product of generators of bounded length with small coefficients.
Element random_element(const Algebra& A, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> kind(0, 2), gen(0, A.rank() - 1), coef(-2, 2), kexp(-1, 1);
  Element u = A.one();
  for (int t = 0; t < len; ++t) {
    int i = gen(rng);
    switch (kind(rng)) {
      case 0: u = u * A.E(i); break;
      case 1: u = u * A.F(i); break;
      default: u = u * A.K_simple(i, kexp(rng) ? 1 : -1); break;
    }
  }
  int c = coef(rng);
  return u * Scalar(c == 0 ? 1 : c);
}

using Triple = std::map<std::tuple<Monomial, Monomial, Monomial>, Scalar>;

void add3(Triple& t, const Monomial& a, const Monomial& b, const Monomial& c, const Scalar& s) {
  if (s.is_zero()) return;
  auto& e = t[{a, b, c}];
  e += s;
  if (e.is_zero()) t.erase({a, b, c});
}

}  // namespace

TEST(Blocks, KnownDimensions) {
  Algebra A(RootDatum::make("A(1,0)"));
  EXPECT_EQ(A.block(G({1, 1})).dim, 2);
  EXPECT_EQ(A.block(G({0, 2})).dim, 0);
  EXPECT_EQ(A.block(G({1, 0})).dim, 1);
  EXPECT_EQ(A.block(G({0, 1})).dim, 1);
}

TEST(Blocks, DimensionsMatchPbwCount) {
  for (const char* t : {"A(1,0)", "A(2,1)", "B(1,1)", "B(0,1)", "B(0,2)", "C(2)", "C(3)", "D(2,1)", "A(2,2)",
                        "D(2,1;2)", "G(3)", "F(4)"}) {
    RootDatum rd = RootDatum::make(t);
    Algebra A(rd);
    int h = rd.rank() <= 3 ? 5 : 4;
    for (const Grade& mu : weights_up_to(rd.rank(), h)) EXPECT_EQ(A.block(mu).dim, pbw_dim(rd, mu)) << t;
  }
}

TEST(Relations, EFCommutator) {
  Algebra A(RootDatum::make("A(1,0)"));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Element lhs = A.supercommutator(A.E(i), A.F(j));
      Element rhs = A.zero();
      if (i == j) rhs = (A.K_simple(i) - A.K_simple(i, -1)) * A.qq_minus(i).inverse();
      EXPECT_EQ(lhs, rhs) << i << j;
    }
  // E1 F1 normal form.
  Element e = A.E(0) * A.F(0);
  Element expect = A.F(0) * A.E(0) + (A.K_simple(0) - A.K_simple(0, -1)) * A.qq_minus(0).inverse();
  EXPECT_EQ(e, expect);
}

TEST(Relations, KConjugation) {
  for (const char* t : {"A(1,0)", "B(1,1)", "G(3)"}) {
    Algebra A(RootDatum::make(t));
    for (int i = 0; i < A.rank(); ++i)
      for (int j = 0; j < A.rank(); ++j) {
        Element kk = A.K_simple(i) * A.E(j) * A.K_simple(i, -1);
        EXPECT_EQ(kk, A.E(j) * A.qform(grade_unit(i), grade_unit(j)));
        Element kf = A.K_simple(i) * A.F(j) * A.K_simple(i, -1);
        EXPECT_EQ(kf, A.F(j) * A.qform(grade_unit(i), grade_unit(j)).inverse());
      }
  }
}

TEST(Relations, OddSquares) {
  Algebra A(RootDatum::make("A(1,0)"));
  EXPECT_TRUE((A.E(1) * A.E(1)).is_zero());
  EXPECT_TRUE((A.F(1) * A.F(1)).is_zero());
}

TEST(Relations, SerreOrdinary) {
  for (const char* t : {"A(2,1)", "B(1,2)", "C(3)", "D(2,2)", "F(4)", "G(3)", "D(2,1;3)"}) {
    RootDatum rd = RootDatum::make(t);
    Algebra A(rd);
    for (int i = 0; i < rd.rank(); ++i) {
      if (rd.parity(i)) continue;
      for (int j = 0; j < rd.rank(); ++j) {
        if (i == j) continue;
        int n = 1 - static_cast<int>(rd.cartan(i, j).numerator() / rd.cartan(i, j).denominator());
        Element se = A.zero(), sf = A.zero();
        for (int k = 0; k <= n; ++k) {
          std::vector<int> w(n - k, i);
          w.push_back(j);
          w.insert(w.end(), k, i);
          Scalar c = gauss_binomial(n, k, rd.q_i(i));
          if (k & 1) c = -c;
          se += A.E_word(w) * c;
          sf += A.F_word(w) * c;
        }
        EXPECT_TRUE(se.is_zero()) << t << " " << i << "," << j;
        EXPECT_TRUE(sf.is_zero()) << t << " " << i << "," << j;
      }
    }
  }
}

namespace {

// E_{s-1;s;j} built as a product of generators.
Element higher_serre_piece(const Algebra& A, int s, int j, bool eside) {
  const RootDatum& rd = A.datum();
  auto g = [&](int i) { return eside ? A.E(i) : A.F(i); };
  Scalar qj = rd.qpow(rd.d(j) * rd.cartan(j, s));
  Element inner = g(s) * g(j) - g(j) * g(s) * qj;
  Scalar qs = rd.qpow(rd.d(s - 1) * rd.cartan(s - 1, s));
  return g(s - 1) * inner - inner * g(s - 1) * qs;
}

void expect_higher_serre(const char* type, std::vector<int> offsets) {
  RootDatum rd = RootDatum::make(type);
  Algebra A(rd);
  int s = rd.odd_index();
  for (int off : offsets)
    for (bool eside : {true, false}) {
      const int j = s + off;
      Element p = higher_serre_piece(A, s, j, eside);
      Element gs = eside ? A.E(s) : A.F(s);
      EXPECT_FALSE(p.is_zero()) << type << " j=" << j;
      EXPECT_TRUE((gs * p + p * gs).is_zero()) << type << " j=" << j << " E=" << eside;
    }
}

}  // namespace

TEST(Relations, SerreHigherOrder) {
  // offsets of the neighbour(s) j past the odd node s
  expect_higher_serre("A(2,1)", {1});
  expect_higher_serre("B(1,2)", {1});
  expect_higher_serre("D(2,2)", {1, 2});
}

TEST(Hopf, GeneratorValues) {
  Algebra A(RootDatum::make("A(1,0)"));
  Grade mu = G({1, -2});
  EXPECT_EQ(A.coproduct(A.K(mu)), TensorElement::pure(A.K(mu), A.K(mu)));
  EXPECT_EQ(A.counit(A.E(0)), Scalar(0));
  EXPECT_EQ(A.counit(A.K(mu)), Scalar(1));
  EXPECT_EQ(A.antipode(A.K(mu)), A.K(G({-1, 2})));
  EXPECT_EQ(A.antipode(A.E(1)), -(A.K_simple(1, -1) * A.E(1)));
  EXPECT_EQ(A.antipode(A.F(1)), -(A.F(1) * A.K_simple(1)));
  EXPECT_EQ(A.coproduct(A.E(0)), TensorElement::pure(A.K_simple(0), A.E(0)) + TensorElement::pure(A.E(0), A.one()));
}

class HopfSuite : public ::testing::TestWithParam<const char*> {};

TEST_P(HopfSuite, Associativity) {
  Algebra A(RootDatum::make(GetParam()));
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    Element a = random_element(A, rng, 2), b = random_element(A, rng, 2), c = random_element(A, rng, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST_P(HopfSuite, CoproductIsMultiplicative) {
  Algebra A(RootDatum::make(GetParam()));
  std::mt19937 rng(12);
  for (int t = 0; t < 25; ++t) {
    Element a = random_element(A, rng, 2), b = random_element(A, rng, 2);
    EXPECT_EQ(A.coproduct(a * b), A.coproduct(a) * A.coproduct(b));
  }
}

TEST_P(HopfSuite, CoassociativityAndCounit) {
  Algebra A(RootDatum::make(GetParam()));
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    Element u = random_element(A, rng, 3);
    TensorElement d = A.coproduct(u);
    Triple left, right;
    Element lc = A.zero(), rc = A.zero();
    for (auto& [k, c] : d.terms()) {
      TensorElement d1 = A.coproduct(Element(&A, k.first)), d2 = A.coproduct(Element(&A, k.second));
      for (auto& [k2, c2] : d1.terms()) add3(left, k2.first, k2.second, k.second, c * c2);
      for (auto& [k2, c2] : d2.terms()) add3(right, k.first, k2.first, k2.second, c * c2);
      lc += Element(&A, k.second) * (c * A.counit(Element(&A, k.first)));
      rc += Element(&A, k.first) * (c * A.counit(Element(&A, k.second)));
    }
    EXPECT_EQ(left, right);
    EXPECT_EQ(lc, u);
    EXPECT_EQ(rc, u);
  }
}

TEST_P(HopfSuite, AntipodeLaws) {
  Algebra A(RootDatum::make(GetParam()));
  const RootDatum& rd = A.datum();
  Element k2r = A.K(to_grade(rd.two_rho()));
  Element k2ri = A.K(scaled(to_grade(rd.two_rho()), -1));
  std::mt19937 rng(14);
  for (int t = 0; t < 20; ++t) {
    Element u = random_element(A, rng, 3);
    Element conv = A.zero(), conv2 = A.zero();
    TensorElement du = A.coproduct(u);
    for (auto& [k, c] : du.terms()) {
      conv += A.antipode(Element(&A, k.first)) * Element(&A, k.second) * c;
      conv2 += Element(&A, k.first) * A.antipode(Element(&A, k.second)) * c;
    }
    EXPECT_EQ(conv, A.scalar(A.counit(u)));
    EXPECT_EQ(conv2, A.scalar(A.counit(u)));
    EXPECT_EQ(A.antipode(A.antipode(u)), k2ri * u * k2r);
    Element v = random_element(A, rng, 2);
    Element svu = A.antipode(v) * A.antipode(u);
    if (u.parity() && v.parity()) svu = -svu;
    EXPECT_EQ(A.antipode(u * v), svu);
  }
}

TEST_P(HopfSuite, AutomorphismsOnProducts) {
  Algebra A(RootDatum::make(GetParam()));
  std::vector<int> sigma(A.rank(), 1);
  sigma[A.datum().odd_index()] = -1;
  std::mt19937 rng(15);
  for (int t = 0; t < 20; ++t) {
    Element a = random_element(A, rng, 2), b = random_element(A, rng, 2);
    EXPECT_EQ(A.omega(a * b), A.omega(a) * A.omega(b));
    EXPECT_EQ(A.tau(a * b), A.tau(b) * A.tau(a));
    EXPECT_EQ(A.sigma_tilde(a * b, sigma), A.sigma_tilde(a, sigma) * A.sigma_tilde(b, sigma));
    EXPECT_EQ(A.sigma_tilde(A.sigma_tilde(a, sigma), sigma), a);
    EXPECT_EQ(A.tau(A.tau(a)), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Types, HopfSuite, ::testing::Values("A(1,0)", "B(1,1)", "C(2)", "D(2,1;2)"),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::string o;
                           for (char c : s) o += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return o;
                         });

TEST(Automorphisms, GeneratorValues) {
  Algebra A(RootDatum::make("A(1,0)"));
  EXPECT_EQ(A.omega(A.K_simple(0)), A.K_simple(0, -1));
  EXPECT_EQ(A.omega(A.E(1)), -A.F(1));
  EXPECT_EQ(A.omega(A.F(1)), A.E(1));
  EXPECT_EQ(A.tau(A.E(0) * A.F(0)), A.E(0) * A.F(0));
  EXPECT_EQ(A.sigma_tilde(A.F(1), {1, -1}), -A.F(1));
  EXPECT_EQ(A.sigma_tilde(A.E(1), {1, -1}), A.E(1));
}

TEST(Adjoint, Examples) {
  Algebra A(RootDatum::make("A(1,0)"));
  Element u = A.E(1) * A.F(0);
  EXPECT_EQ(A.ad(A.K_simple(0), u), A.K_simple(0) * u * A.K_simple(0, -1));
  EXPECT_TRUE(A.ad(A.E(0), A.one()).is_zero());
  EXPECT_EQ(A.ad(A.F(0), A.E(0)), (A.F(0) * A.E(0) - A.E(0) * A.F(0)) * A.K_simple(0));
  // ad(E_i)u = E_i u - (-1)^{|u||E_i|} K_i u K_i^{-1} E_i
  for (int i = 0; i < 2; ++i) {
    Element v = A.F(1) * A.E(0);
    Element expect = A.E(i) * v;
    Element t = A.K_simple(i) * v * A.K_simple(i, -1) * A.E(i);
    expect -= (v.parity() && A.datum().parity(i)) ? -t : t;
    EXPECT_EQ(A.ad(A.E(i), v), expect);
  }
}

TEST(Derivations, Examples) {
  Algebra A(RootDatum::make("A(1,0)"));
  EXPECT_EQ(A.r(0, A.F(0)), A.one());
  EXPECT_EQ(A.r(0, A.F(0) * A.F(1)), A.F(1));
  EXPECT_EQ(A.r_plus(1, A.E(1)), A.one());
  EXPECT_THROW(A.r(0, A.E(0)), std::invalid_argument);
}

TEST(Derivations, CommutatorIdentity) {
  // [E_i, y] = ((-1)^{...} q^{-(a_i, nu - a_i)} r_i(y) K_i - r'_i(y) K_i^{-1}) / (q_i - q_i^{-1})
  for (const char* t : {"A(1,0)", "B(1,1)", "G(3)"}) {
    RootDatum rd = RootDatum::make(t);
    Algebra A(rd);
    std::vector<std::vector<int>> words = {{0, 1}, {1, 0, 1}, {0, 0, 1}, {1, 1, 0}};
    for (auto w : words) {
      Element y = A.F_word(w);
      if (y.is_zero()) continue;
      Grade nu = y.degree();
      nu = scaled(nu, -1);
      for (int i = 0; i < rd.rank(); ++i) {
        Element lhs = A.supercommutator(A.E(i), y);
        Grade low = nu - grade_unit(i);
        Element rhs = A.zero();
        if (nonneg(low)) {
          Scalar c = A.qform(grade_unit(i), low).inverse();
          if (rd.parity(i) && rd.parity_of(low)) c = -c;
          rhs = (A.r(i, y) * A.K_simple(i) * c - A.r_prime(i, y) * A.K_simple(i, -1)) * A.qq_minus(i).inverse();
        }
        EXPECT_EQ(lhs, rhs) << t << " i=" << i;
      }
    }
  }
}

TEST(Generic, KnownDatumsBuild) {
  // degenerate A(n,n): the relation K-vector acts trivially
  RootDatum rd = RootDatum::make("A(2,2)");
  Algebra A(rd);
  Element k = A.K(rd.relation());
  EXPECT_EQ(k, A.one());
}
