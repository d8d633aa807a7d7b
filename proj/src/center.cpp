#include "qsuper/center.hpp"

#include <array>
#include <stdexcept>

namespace qsuper {

EndoElement::EndoElement(const WeightModule& mod) : M(&mod) {
  a.assign(static_cast<std::size_t>(mod.dim()) * mod.dim(), Element(mod.alg));
}

EndoElement EndoElement::identity(const WeightModule& mod) {
  EndoElement e(mod);
  for (int r = 0; r < mod.dim(); ++r) e.at(r, r) = mod.alg->one();
  return e;
}

EndoElement operator+(const EndoElement& x, const EndoElement& y) {
  EndoElement z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

EndoElement operator*(const EndoElement& x, const EndoElement& y) {
  const WeightModule& M = *x.M;
  const Algebra& A = *M.alg;
  const int n = M.dim();
  // Parity components of the left entries.
  std::vector<std::array<Element, 2>> parts(x.a.size(), {Element(&A), Element(&A)});
  for (std::size_t i = 0; i < x.a.size(); ++i)
    for (const auto& [m, c] : x.a[i].terms()) parts[i][A.parity(m)].add(m, c);
  EndoElement z(M);
  for (int r = 0; r < n; ++r)
    for (int b = 0; b < n; ++b) {
      const auto& xp = parts[static_cast<std::size_t>(r) * n + b];
      if (xp[0].is_zero() && xp[1].is_zero()) continue;
      for (int d = 0; d < n; ++d) {
        const Element& yv = y.at(b, d);
        if (yv.is_zero()) continue;
        if (!xp[0].is_zero()) z.at(r, d) += A.mul(xp[0], yv);
        if (!xp[1].is_zero()) {
          Element t = A.mul(xp[1], yv);
          if ((M.parities[b] + M.parities[d]) & 1) t = -t;
          z.at(r, d) += t;
        }
      }
    }
  return z;
}

EndoElement zeta_tensor(const WeightModule& M, const TensorElement& t) {
  const Algebra& A = *M.alg;
  EndoElement out(M);
  std::map<Monomial, SMat> seen;
  for (const auto& [key, c] : t.terms()) {
    auto it = seen.find(key.first);
    if (it == seen.end()) it = seen.emplace(key.first, M.action(Element(&A, key.first))).first;
    const SMat& Z = it->second;
    for (int r = 0; r < M.dim(); ++r)
      for (int col = 0; col < M.dim(); ++col)
        if (!Z(r, col).is_zero()) out.at(r, col).add(key.second, c * Z(r, col));
  }
  return out;
}

int weight_spread(const WeightModule& M) {
  int h = 0;
  for (auto& w1 : M.weights)
    for (auto& w2 : M.weights) {
      Grade g = to_grade(w1 - w2);
      if (nonneg(g)) h = std::max(h, height(g));
    }
  return h;
}

namespace {

TensorElement truncate(const Algebra& A, const TensorElement& t, int cutoff) {
  TensorElement out(&A);
  for (const auto& [k, c] : t.terms())
    if (height(k.first.fw) <= cutoff) out.add(k.first, k.second, c);
  return out;
}

}  // namespace

TensorElement inverse_theta(const Algebra& A, int cutoff) {
  TensorElement one = TensorElement::pure(A.one(), A.one());
  TensorElement minus_n = one - quasi_r_matrix(A, cutoff);
  TensorElement r = one, p = one;
  // Theta - 1 raises the height by at least one, so the series stops.
  for (int n = 1; n <= cutoff; ++n) {
    p = truncate(A, p * minus_n, cutoff);
    if (p.is_zero()) break;
    r += p;
  }
  return r;
}

TensorElement phi_op(const Algebra& A, const TensorElement& r) {
  const RootDatum& rd = A.datum();
  TensorElement out(&A);
  for (const auto& [k, c] : r.terms()) {
    const Monomial &y = k.first, &x = k.second;
    if (!is_zero(y.k) || !is_zero(y.ew) || !is_zero(x.k) || !is_zero(x.fw) || y.fw != x.ew)
      throw std::invalid_argument("phi_op expects terms in U^-_{-mu} (x) U^+_mu");
    const Grade& mu = y.fw;
    Scalar s = rd.parity_of(mu) ? -c : c;
    Element first = A.mul(Element(&A, x), A.K(mu));
    Element second = A.mul(A.K(-mu), Element(&A, y));
    TensorElement t = TensorElement::pure(first, second);
    t *= s;
    out += t;
  }
  return out;
}

GammaData gamma_operator(const WeightModule& M, bool verify) {
  const Algebra& A = *M.alg;
  const int h = weight_spread(M), n = M.dim();
  GammaData g;
  TensorElement rr = inverse_theta(A, h);
  g.theta = zeta_tensor(M, quasi_r_matrix(A, h));
  g.r = zeta_tensor(M, rr);
  g.phi_rop = zeta_tensor(M, phi_op(A, rr));
  g.k = EndoElement(M);
  for (int a = 0; a < n; ++a) g.k.at(a, a) = A.K(to_grade(scaled(M.weights[a], Rat(2))));
  g.gamma = g.k * g.phi_rop * g.r;
  if (verify) {
    for (int i = 0; i < A.rank(); ++i)
      for (const Element& u : {A.E(i), A.F(i), A.K_simple(i)}) {
        EndoElement d = zeta_tensor(M, A.coproduct(u));
        if (!(g.gamma * d == d * g.gamma))
          throw std::logic_error("Gamma_M does not commute with the coproduct of generator " + std::to_string(i + 1));
      }
  }
  return g;
}

Element casimir(const WeightModule& M, int k, int max_k) {
  if (k < 1) throw std::invalid_argument("casimir: k must be at least 1");
  if (k > max_k) throw std::invalid_argument("casimir: k is capped at " + std::to_string(max_k));
  const Algebra& A = *M.alg;
  const RootDatum& rd = A.datum();
  EndoElement g = gamma_operator(M).gamma;
  EndoElement p = g;
  for (int j = 1; j < k; ++j) p = p * g;
  Element c(&A);
  for (int a = 0; a < M.dim(); ++a) {
    Scalar w = rd.qpow(rd.form(rd.two_rho(), M.weights[a]));
    if (M.parities[a]) w = -w;
    c += p.at(a, a) * w;
  }
  return c;
}

Element z_element(const WeightModule& M) {
  const Algebra& A = *M.alg;
  const RootDatum& rd = A.datum();
  const RatVec two_rho = rd.two_rho();
  for (auto& w : M.weights) require_half_lattice(rd, w);
  const int n = M.dim();
  std::vector<Grade> nus{Grade{}};
  for (auto& g : positive_weights_up_to(A.rank(), weight_spread(M))) nus.push_back(g);
  Element z(&A);
  for (const Grade& nu : nus) {
    const WeightBlock& B = A.block(nu);
    if (B.dim == 0) continue;
    const bool root = is_zero(nu);
    // zeta of the dual basis v_j and of the E-basis u_i.
    std::vector<SMat> zv(B.dim), zu(B.dim);
    for (int j = 0; j < B.dim; ++j) {
      zu[j] = M.E_basis(nu, j);
      if (root) {
        zv[j] = M.F_basis(nu, 0);
        continue;
      }
      zv[j] = SMat(n, n);
      for (int b = 0; b < B.dim; ++b)
        if (!B.gram_inv(j, b).is_zero()) zv[j] = zv[j] + M.F_basis(nu, b).scaled(B.gram_inv(j, b));
    }
    const Rat base = -rd.form(two_rho, nu) + rd.form(nu, nu);
    for (int k = 0; k < n; ++k) {
      const RatVec& wk = M.weights[k];
      Scalar pre = rd.qpow(base - rd.form(two_rho, wk) + rd.form(wk, nu));
      if ((M.parities[k] + rd.parity_of(nu)) & 1) pre = -pre;
      Grade kexp = rd.canonical_k(-nu - to_grade(scaled(wk, Rat(2))));
      for (int i = 0; i < B.dim; ++i)
        for (int j = 0; j < B.dim; ++j) {
          // [zeta(v_j) zeta(u_i)]_kk
          Scalar t;
          for (int l = 0; l < n; ++l)
            if (!zv[j](k, l).is_zero() && !zu[i](l, k).is_zero()) t += zv[j](k, l) * zu[i](l, k);
          if (t.is_zero()) continue;
          t *= pre;
          // v_i K u_j
          for (int b = 0; b < B.dim; ++b) {
            Scalar c = root ? Scalar(1) : B.gram_inv(i, b);
            if (c.is_zero()) continue;
            Monomial m;
            m.fw = nu;
            m.fi = b;
            m.k = kexp;
            m.ew = nu;
            m.ei = j;
            z.add(m, t * c);
            if (root) break;
          }
        }
    }
  }
  return z;
}

Scalar str_q(const SMat& g, const WeightModule& M) {
  const RootDatum& rd = M.alg->datum();
  Scalar s;
  for (int a = 0; a < M.dim(); ++a) {
    if (g(a, a).is_zero()) continue;
    Scalar t = g(a, a) * rd.qpow(-rd.form(rd.two_rho(), M.weights[a]));
    s += M.parities[a] ? -t : t;
  }
  return s;
}

bool in_u0(const Element& z) {
  for (const auto& [m, c] : z.terms())
    if (m.fw != m.ew) return false;
  return true;
}

bool is_central(const Element& z, std::string* why) {
  if (!z.algebra()) return true;
  const Algebra& A = *z.algebra();
  for (int i = 0; i < A.rank(); ++i) {
    const std::pair<const char*, Element> gens[] = {{"E", A.E(i)}, {"F", A.F(i)}, {"K", A.K_simple(i)}};
    for (const auto& [name, g] : gens)
      if (A.mul(z, g) != A.mul(g, z)) {
        if (why) *why = std::string("fails to commute with ") + name + std::to_string(i + 1);
        return false;
      }
  }
  return true;
}

}  // namespace qsuper
