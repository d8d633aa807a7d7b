#include "qsuper/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qsuper/center.hpp"
#include "qsuper/hc.hpp"
#include "qsuper/pairing.hpp"

namespace qsuper {

namespace {

Grade G(std::initializer_list<int> v) {
  Grade g{};
  int i = 0;
  for (int x : v) g[i++] = x;
  return g;
}

// Collects failures of one criterion; the first few are kept for the detail.
struct Check {
  int run = 0, failed = 0;
  std::vector<std::string> notes;
  bool expect(bool ok, const std::string& what) {
    ++run;
    if (!ok) {
      ++failed;
      if (notes.size() < 3) notes.push_back(what);
    }
    return ok;
  }
};

class Suite {
 public:
  explicit Suite(const AcceptanceOptions& o) : opt_(o) {}

  const Algebra& alg(const std::string& t) {
    auto& p = algs_[t];
    if (!p) {
      p = std::make_unique<Algebra>(RootDatum::make(t));
      if (!opt_.cache_dir.empty()) p->set_cache_dir(opt_.cache_dir);
    }
    return *p;
  }
  bool wants(const std::string& t) const { return opt_.only_type.empty() || opt_.only_type == t; }
  // The default list, or just the requested type when a filter is set.
  std::vector<std::string> types(std::vector<std::string> defaults) const {
    if (opt_.only_type.empty()) return defaults;
    return {opt_.only_type};
  }
  std::vector<std::string> filtered(std::vector<std::string> defaults) const {
    std::vector<std::string> out;
    for (auto& t : defaults)
      if (wants(t)) out.push_back(t);
    return out;
  }

  // Central elements produced by criteria 1-4, reused by criterion 9.
  std::vector<std::pair<std::string, Element>> central;

  // Modules of criterion 3 (A(1,0)): trivial, vector, dual, typical simple.
  std::vector<std::pair<std::string, WeightModule>>& a10_modules() {
    if (a10_mods_.empty()) {
      const Algebra& A = alg("A(1,0)");
      WeightModule V = natural_module(A);
      a10_mods_.emplace_back("trivial", trivial_module(A));
      a10_mods_.emplace_back("vector", V);
      a10_mods_.emplace_back("dual", dual_module(V));
      a10_mods_.emplace_back("L(1,1)", simple_module(A, RatVec{Rat(1), Rat(1)}, 8));
    }
    return a10_mods_;
  }

 private:
  const AcceptanceOptions& opt_;
  std::map<std::string, std::unique_ptr<Algebra>> algs_;
  std::vector<std::pair<std::string, WeightModule>> a10_mods_;
};

Scalar qp(const Algebra& A, int k) { return A.datum().qpow(Rat(k)); }

// --------------------------------------------------------------- oracles

// The A(1,0) Casimir of the vector representation in closed form,
// rebuilt from generators.
Element reference_a10_casimir(const Algebra& A) {
  Element F1 = A.F(0), F2 = A.F(1), E1 = A.E(0), E2 = A.E(1);
  Scalar qq = qp(A, 1) - qp(A, -1), qq2 = qq * qq;
  Element c = A.K(G({0, -2})) + A.K(G({-2, -2})) * qp(A, -2) - A.K(G({-2, -4})) * qp(A, -2);
  c += (A.K(G({-1, -2})) * F1 * E1 * qp(A, -1) + A.K(G({-2, -3})) * F2 * E2 * qp(A, -1)) * qq2;
  c += A.K(G({-1, -3})) * (F2 * F1 - F1 * F2 * qp(A, -1)) * (E1 * E2 - E2 * E1 * qp(A, -1)) * (qq2 * qp(A, 1));
  return c;
}

// Graded dimension of U(n^-) from the PBW product over positive roots.
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

// Random product of generators with a small coefficient.
Element random_product(const Algebra& A, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> kind(0, 2), gen(0, A.rank() - 1), coef(-2, 2), kexp(0, 1);
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
    int c = coef(rng);
    e.add(A.canonical(m), Scalar(c ? c : 1));
  }
  return e;
}

std::vector<Element> homogeneous_parts(const Element& e) {
  Element part[2] = {Element(e.algebra()), Element(e.algebra())};
  for (auto& [m, c] : e.terms()) part[e.algebra()->parity(m)].add(m, c);
  std::vector<Element> out;
  for (auto& p : part)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

// ------------------------------------------------------------- criteria

void crit1(Suite& S, Check& c, std::string& detail) {
  if (!S.wants("A(1,0)")) return;
  const Algebra& A = S.alg("A(1,0)");
  Element cas = casimir(natural_module(A), 1);
  c.expect(cas == reference_a10_casimir(A), "casimir differs from the reference element");
  c.expect(cas.size() == 9, "expected 9 terms, got " + std::to_string(cas.size()));
  std::set<std::pair<Grade, Grade>> blocks;
  for (auto& [m, v] : cas.terms()) blocks.insert({m.fw, m.ew});
  detail = std::to_string(cas.size()) + " terms in " + std::to_string(blocks.size()) + " weight blocks";
  S.central.emplace_back("A(1,0) C1(vector)", cas);
}

void crit2(Suite& S, Check& c, std::string& detail) {
  int n = 0;
  for (const std::string& t : S.types({"A(1,0)", "B(0,1)", "C(2)"})) {
    const Algebra& A = S.alg(t);
    if (!A.datum().has_natural_module()) continue;
    WeightModule V = natural_module(A);
    for (int k = 1; k <= 2; ++k) {
      Element z = casimir(V, k);
      std::string why;
      c.expect(is_central(z, &why), t + " C" + std::to_string(k) + ": " + why);
      c.expect(in_u0(z), t + " C" + std::to_string(k) + " has nonzero degree");
      S.central.emplace_back(t + " C" + std::to_string(k) + "(vector)", z);
      ++n;
    }
  }
  detail = std::to_string(n) + " Casimirs";
}

void crit3(Suite& S, Check& c, std::string& detail) {
  if (!S.wants("A(1,0)")) return;
  for (auto& [name, M] : S.a10_modules()) {
    if (!c.expect(M.status == ModuleStatus::Complete,
                  name + " is " + status_name(M.status) + " at depth 8"))
      continue;
    Element z = z_element(M);
    c.expect(sch_compare(M, z), "iota HC(z) != Sch for " + name);
    S.central.emplace_back("A(1,0) z(" + name + ")", z);
  }
  detail = std::to_string(S.a10_modules().size()) + " modules";
}

void crit4(Suite& S, Check& c, std::string& detail) {
  if (!S.wants("A(1,0)")) return;
  for (auto& [name, M] : S.a10_modules()) {
    if (M.status != ModuleStatus::Complete) {
      c.expect(false, name + " incomplete");
      continue;
    }
    Element cd = casimir(dual_module(M), 1);
    c.expect(z_element(M) == cd, "z(" + name + ") != C1(dual)");
    S.central.emplace_back("A(1,0) C1(dual " + name + ")", cd);
  }
  detail = std::to_string(S.a10_modules().size()) + " modules";
}

void crit5(Suite& S, Check& c, std::string& detail) {
  int nonzero = 0, pairs = 0;
  for (const std::string& t : S.filtered({"A(1,0)", "B(0,1)"})) {
    const Algebra& A = S.alg(t);
    std::mt19937 rng(21);
    std::vector<Element> gens;
    for (int i = 0; i < A.rank(); ++i) {
      gens.push_back(A.E(i));
      gens.push_back(A.F(i));
      gens.push_back(A.K_simple(i));
    }
    for (int trial = 0; trial < 100; ++trial) {
      Element v0 = random_sum(A, rng, 4), w = random_sum(A, rng, 6);
      ++pairs;
      for (const Element& v : homogeneous_parts(v0))
        for (const Element& u : gens) {
          Scalar lhs = rosso_form(A, A.ad(u, v), w);
          Scalar rhs = rosso_form(A, v, A.ad(A.antipode(u), w));
          if (u.parity() && v.parity()) rhs = -rhs;
          c.expect(lhs == rhs, t + ": ad-invariance violated");
          if (!lhs.is_zero()) ++nonzero;
        }
    }
  }
  if (c.run) c.expect(nonzero > 20, "too few nonzero pairings to be meaningful");
  detail = std::to_string(pairs) + " random pairs, " + std::to_string(nonzero) + " nonzero";
}

Element higher_serre_piece(const Algebra& A, int s, int j, bool eside) {
  const RootDatum& rd = A.datum();
  auto g = [&](int i) { return eside ? A.E(i) : A.F(i); };
  Scalar qj = rd.qpow(rd.d(j) * rd.cartan(j, s));
  Element inner = g(s) * g(j) - g(j) * g(s) * qj;
  Scalar qs = rd.qpow(rd.d(s - 1) * rd.cartan(s - 1, s));
  return g(s - 1) * inner - inner * g(s - 1) * qs;
}

void crit6(Suite& S, Check& c, std::string& detail) {
  int blocks = 0, serre = 0;
  for (const std::string& t : S.types({"A(1,0)", "B(0,1)", "C(2)", "B(1,1)", "A(2,1)", "D(2,1;2)"})) {
    const Algebra& A = S.alg(t);
    for (const Grade& mu : positive_weights_up_to(A.rank(), 4)) {
      GramBlock g = free_gram_block(A, mu);
      int want = pbw_dim(A.datum(), mu);
      c.expect(g.rank == want && A.block(mu).dim == want, t + " Gram rank at " + A.datum().weight_string(to_ratvec(mu, A.rank())));
      ++blocks;
    }
  }
  for (const std::string& t : S.types({"A(2,1)", "B(1,2)", "C(3)", "D(2,2)", "F(4)", "G(3)", "D(2,1;3)"})) {
    const Algebra& A = S.alg(t);
    const RootDatum& rd = A.datum();
    for (int i = 0; i < rd.rank(); ++i) {
      if (rd.parity(i)) continue;
      for (int j = 0; j < rd.rank(); ++j) {
        if (i == j) continue;
        Rat a = rd.cartan(i, j);
        int n = 1 - static_cast<int>(a.numerator() / a.denominator());
        Element se = A.zero(), sf = A.zero();
        for (int k = 0; k <= n; ++k) {
          std::vector<int> w(n - k, i);
          w.push_back(j);
          w.insert(w.end(), k, i);
          Scalar co = gauss_binomial(n, k, rd.q_i(i));
          if (k & 1) co = -co;
          se += A.E_word(w) * co;
          sf += A.F_word(w) * co;
        }
        c.expect(se.is_zero() && sf.is_zero(), t + " Serre (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        ++serre;
      }
    }
  }
  const std::map<std::string, std::vector<int>> higher{{"A(2,1)", {1}}, {"B(1,2)", {1}}, {"D(2,2)", {1, 2}}};
  for (auto& [t, offs] : higher) {
    if (!S.wants(t)) continue;
    const Algebra& A = S.alg(t);
    int s = A.datum().odd_index();
    for (int off : offs)
      for (bool eside : {true, false}) {
        Element p = higher_serre_piece(A, s, s + off, eside);
        Element gs = eside ? A.E(s) : A.F(s);
        c.expect(!p.is_zero() && (gs * p + p * gs).is_zero(), t + " higher-order Serre");
        ++serre;
      }
  }
  if (S.wants("A(1,0)")) {
    const Algebra& A = S.alg("A(1,0)");
    Scalar qq = qp(A, 1) - qp(A, -1);
    std::vector<Element> v = {A.F(0) * A.F(1) * qq, A.F(1) * A.F(0) * (-qq)};
    std::vector<Element> u = {A.E(0) * A.E(1) * qp(A, 1) - A.E(1) * A.E(0), A.E(0) * A.E(1) - A.E(1) * A.E(0) * qp(A, 1)};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) c.expect(skew_pair(A, v[i], u[j]) == Scalar(i == j ? 1 : 0), "reference dual pair");
    for (int i = 0; i < 2; ++i) c.expect(skew_pair(A, A.F(i) * (-A.qq_minus(i)), A.E(i)) == Scalar(1), "degree-one dual pair");
  }
  detail = std::to_string(blocks) + " Gram blocks, " + std::to_string(serre) + " Serre elements";
}

void crit7(Suite& S, Check& c, std::string& detail) {
  for (const std::string& t : S.filtered({"A(1,0)", "B(0,1)"})) {
    std::string why;
    c.expect(check_theta_relations(S.alg(t), 4, &why), t + ": " + why);
  }
  detail = "height <= 4";
}

void crit8(Suite& S, Check& c, std::string& detail) {
  int n = 0;
  for (const std::string& t : S.types({"A(1,0)", "B(0,1)", "C(2)", "B(1,1)"})) {
    const Algebra& A = S.alg(t);
    RatVec lam(A.rank(), Rat(1, 2));
    const int h = A.rank() > 3 ? 4 : 6;
    WeightModule M = verma_module(A, lam, h);
    c.expect(character(M) == kac_verma_character(A.datum(), lam, h), t + " Verma character");
    ++n;
  }
  if (S.wants("A(1,0)")) {
    const Algebra& A = S.alg("A(1,0)");
    RatVec lam{Rat(1), Rat(1)};
    WeightModule L = simple_module(A, lam, 8);
    c.expect(L.status == ModuleStatus::Complete && A.datum().is_typical(lam), "L(1,1) not complete");
    Character kac;
    for (auto& [w, m] : kac_typical_character(A.datum(), lam, 10))
      if (m != 0) kac[w] = m;
    c.expect(character(L) == kac, "L(1,1) typical character");
    c.expect(L.dim() == 8, "dim L(1,1) = " + std::to_string(L.dim()));
    ++n;
  }
  detail = std::to_string(n) + " characters";
}

void crit9(Suite& S, Check& c, std::string& detail) {
  for (auto& [name, z] : S.central) {
    const RootDatum& rd = z.algebra()->datum();
    LaurentInvariant h = hc_project(z);
    for (auto mode : {WsupMode::LineSums, WsupMode::Derivative}) {
      WsupResult r = wsup_membership(rd, h, mode);
      c.expect(r.pass, "HC(" + name + "): " + r.reason);
    }
  }
  auto both = [](const RootDatum& rd, const LaurentInvariant& h) {
    return wsup_membership(rd, h, WsupMode::LineSums).pass && wsup_membership(rd, h, WsupMode::Derivative).pass;
  };
  int examples = 0;
  if (S.wants("A(1,0)")) {
    const RootDatum& rd = S.alg("A(1,0)").datum();
    c.expect(both(rd, k_lambda(rd, G({2, 2}))), "A(1,0) k_lambda");
    LaurentInvariant k1{{G({1, 0}), Scalar(1)}};
    c.expect(!wsup_membership(rd, k1, WsupMode::LineSums).pass, "K_alpha1 accepted by line sums");
    c.expect(!wsup_membership(rd, k1, WsupMode::Derivative).pass, "K_alpha1 accepted by derivative");
    examples += 2;
  }
  if (S.wants("C(2)")) {
    const RootDatum& rd = S.alg("C(2)").datum();
    c.expect(both(rd, k_lambda(rd, G({2, 2}))), "C(2) k_lambda");
    ++examples;
  }
  if (S.wants("B(1,1)")) {
    const RootDatum& rd = S.alg("B(1,1)").datum();
    LaurentInvariant h = k_lambda(rd, to_grade(rd.from_ambient(RatVec{4, 2})));
    c.expect(!h.empty() && both(rd, h), "B(1,1) k_lambda");
    ++examples;
  }
  detail = std::to_string(S.central.size()) + " central elements, " + std::to_string(examples) + " reference examples";
}

using Triple = std::map<std::tuple<Monomial, Monomial, Monomial>, Scalar>;

void add3(Triple& t, const Monomial& a, const Monomial& b, const Monomial& c, const Scalar& s) {
  if (s.is_zero()) return;
  auto& e = t[{a, b, c}];
  e += s;
  if (e.is_zero()) t.erase({a, b, c});
}

void hopf_checks(const Algebra& A, const Element& u, const Element& v, const std::vector<int>& sigma, Check& c,
                 const std::string& t) {
  const RootDatum& rd = A.datum();
  TensorElement d = A.coproduct(u);
  Triple left, right;
  Element lc = A.zero(), rc = A.zero(), conv = A.zero(), conv2 = A.zero();
  for (auto& [k, co] : d.terms()) {
    Element a(&A, k.first), b(&A, k.second);
    TensorElement da = A.coproduct(a), db = A.coproduct(b);
    for (auto& [k2, c2] : da.terms()) add3(left, k2.first, k2.second, k.second, co * c2);
    for (auto& [k2, c2] : db.terms()) add3(right, k.first, k2.first, k2.second, co * c2);
    lc += b * (co * A.counit(a));
    rc += a * (co * A.counit(b));
    conv += A.antipode(a) * b * co;
    conv2 += a * A.antipode(b) * co;
  }
  c.expect(left == right, t + " coassociativity");
  c.expect(lc == u && rc == u, t + " counit");
  Element eps = A.scalar(A.counit(u));
  c.expect(conv == eps && conv2 == eps, t + " antipode convolution");
  Grade tr = to_grade(rd.two_rho());
  c.expect(A.antipode(A.antipode(u)) == A.K(-tr) * u * A.K(tr), t + " S^2 conjugation");
  c.expect(A.coproduct(u * v) == A.coproduct(u) * A.coproduct(v), t + " coproduct multiplicative");
  c.expect(A.omega(u * v) == A.omega(u) * A.omega(v), t + " omega multiplicative");
  c.expect(A.tau(u * v) == A.tau(v) * A.tau(u), t + " tau anti-multiplicative");
  c.expect(A.tau(A.tau(u)) == u, t + " tau involution");
  c.expect(A.sigma_tilde(u * v, sigma) == A.sigma_tilde(u, sigma) * A.sigma_tilde(v, sigma), t + " sigma multiplicative");
  c.expect(A.sigma_tilde(A.sigma_tilde(u, sigma), sigma) == u, t + " sigma involution");
}

void crit10(Suite& S, Check& c, std::string& detail) {
  int samples = 0;
  for (const std::string& t : S.types({"A(1,0)", "B(0,1)", "B(1,1)", "C(2)", "D(2,1;2)"})) {
    const Algebra& A = S.alg(t);
    const RootDatum& rd = A.datum();
    std::vector<int> sigma(A.rank(), 1);
    sigma[rd.odd_index()] = -1;
    // defining values on generators
    for (int i = 0; i < A.rank(); ++i) {
      Element Ei = A.E(i), Fi = A.F(i), Ki = A.K_simple(i), Kinv = A.K_simple(i, -1);
      c.expect(A.coproduct(Ei) == TensorElement::pure(Ki, Ei) + TensorElement::pure(Ei, A.one()), t + " Delta(E)");
      c.expect(A.coproduct(Fi) == TensorElement::pure(Fi, Kinv) + TensorElement::pure(A.one(), Fi), t + " Delta(F)");
      c.expect(A.coproduct(Ki) == TensorElement::pure(Ki, Ki), t + " Delta(K)");
      c.expect(A.antipode(Ei) == -(Kinv * Ei) && A.antipode(Fi) == -(Fi * Ki) && A.antipode(Ki) == Kinv, t + " S");
      c.expect(A.counit(Ei).is_zero() && A.counit(Fi).is_zero() && A.counit(Ki) == Scalar(1), t + " counit");
      Element oe = rd.parity(i) ? -Fi : Fi;
      c.expect(A.omega(Ei) == oe && A.omega(Fi) == Ei && A.omega(Ki) == Kinv, t + " omega on generators");
      c.expect(A.tau(Ei) == Fi && A.tau(Fi) == Ei && A.tau(Ki) == Ki, t + " tau on generators");
      Element sf = sigma[i] < 0 ? -Fi : Fi;
      c.expect(A.sigma_tilde(Ei, sigma) == Ei && A.sigma_tilde(Fi, sigma) == sf, t + " sigma on generators");
      c.expect(A.sigma_tilde(Ki, sigma) == (sigma[i] < 0 ? -Ki : Ki), t + " sigma on K");
    }
    std::mt19937 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
      Element u = random_product(A, rng, 3), v = random_product(A, rng, 2);
      hopf_checks(A, u, v, sigma, c, t);
      ++samples;
    }
  }
  detail = std::to_string(samples) + " random products";
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  void (*fn)(Suite&, Check&, std::string&);
};

const Criterion kCriteria[] = {
    {1, "A(1,0) Casimir of the vector module equals the reference element", 60, crit1},
    {2, "Casimirs C1, C2 of natural modules are central", 300, crit2},
    {3, "iota HC(z_M) equals the supercharacter", 300, crit3},
    {4, "z_M equals the Casimir of the dual module", 300, crit4},
    {5, "Rosso form is ad-invariant", 600, crit5},
    {6, "Gram ranks, Serre radical elements, reference dual bases", 600, crit6},
    {7, "quasi-R-matrix intertwining relations", 600, crit7},
    {8, "Verma and typical characters match the Kac formulas", 600, crit8},
    {9, "Harish-Chandra images lie in the supersymmetric invariants", 300, crit9},
    {10, "Hopf structure and automorphisms", 900, crit10},
};

}  // namespace

std::vector<AcceptanceRow> run_acceptance(const AcceptanceOptions& opt) {
  Suite S(opt);
  std::vector<AcceptanceRow> rows;
  for (const Criterion& cr : kCriteria) {
    AcceptanceRow row;
    row.id = cr.id;
    row.title = cr.title;
    row.limit_seconds = cr.limit;
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.fn(S, c, row.detail);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.run == 0) {
      row.status = "SKIP";
      row.detail = "no checks for type " + opt.only_type;
    } else if (c.failed) {
      row.status = "FAIL";
      std::string d = std::to_string(c.failed) + "/" + std::to_string(c.run) + " failed";
      for (auto& n : c.notes) d += "; " + n;
      row.detail = d;
    } else if (row.seconds > row.limit_seconds) {
      row.status = "FAIL";
      row.detail += "; over the time limit";
    } else {
      row.status = "PASS";
      row.detail += ", " + std::to_string(c.run) + " checks";
    }
    if (opt.on_row) opt.on_row(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_row(const AcceptanceRow& row, bool with_time) {
  std::ostringstream os;
  os << row.status << "  " << (row.id < 10 ? " " : "") << row.id << "  " << row.title << "  (" << row.detail << ")";
  if (with_time) os << "  [" << std::fixed << std::setprecision(1) << row.seconds << "s / " << row.limit_seconds << "s]";
  return os.str();
}

}  // namespace qsuper
