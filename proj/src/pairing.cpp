#include "qsuper/pairing.hpp"

#include <algorithm>
#include <sstream>

namespace qsuper {

Scalar skew_pair(const Algebra& A, const Element& y, const Element& x) {
  Scalar s;
  for (const auto& [my, cy] : y.terms()) {
    if (!is_zero(my.k) || !is_zero(my.ew)) throw std::invalid_argument("skew_pair: left argument must lie in U^-");
    for (const auto& [mx, cx] : x.terms()) {
      if (!is_zero(mx.k) || !is_zero(mx.fw)) throw std::invalid_argument("skew_pair: right argument must lie in U^+");
      if (my.fw != mx.ew) continue;
      const Scalar& g = A.block(my.fw).gram(my.fi, mx.ei);
      if (!g.is_zero()) s += cy * cx * g;
    }
  }
  return s;
}

FreeWordPairing::FreeWordPairing(const RootDatum& rd) : rd_(rd) {}

std::map<FreeWordPairing::Word, Scalar> FreeWordPairing::r(int j, const Word& fw) const {
  std::map<Word, Scalar> out;
  if (fw.empty()) return out;
  const int i = fw[0];
  Word rest(fw.begin() + 1, fw.end());
  Grade wrest{};
  for (int x : rest) wrest[x] += 1;
  auto lower = r(j, rest);
  Scalar qij = rd_.qpow(rd_.gram()[i][j]);
  for (auto& [w, c] : lower) {
    Word nw{i};
    nw.insert(nw.end(), w.begin(), w.end());
    out[nw] += qij * c;
  }
  if (i == j) {
    Scalar c = (rd_.parity(j) && rd_.parity_of(wrest)) ? Scalar(-1) : Scalar(1);
    out[rest] += c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Scalar FreeWordPairing::operator()(const Word& fw, const Word& ew) {
  if (fw.size() != ew.size()) return Scalar();
  if (ew.empty()) return Scalar(1);
  auto key = std::make_pair(fw, ew);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const int j = ew[0];
  Word erest(ew.begin() + 1, ew.end());
  Scalar qj = rd_.q_i(j);
  Scalar cj = -(qj - qj.inverse()).inverse();
  Scalar s;
  for (auto& [w, c] : r(j, fw)) s += c * (*this)(w, erest);
  s *= cj;
  memo_.emplace(key, s);
  return s;
}

GramBlock free_gram_block(const Algebra& A, const Grade& mu) {
  GramBlock g;
  g.mu = mu;
  std::vector<int> w;
  for (int i = 0; i < A.rank(); ++i) w.insert(w.end(), mu[i], i);
  if (!w.empty()) {
    std::sort(w.begin(), w.end());
    do g.words.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
  } else {
    g.words.push_back({});
  }
  const int n = static_cast<int>(g.words.size());
  FreeWordPairing P(A.datum());
  g.matrix = SMat(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.matrix(a, b) = P(g.words[a], g.words[b]);
  g.rank = rank_profile(g.matrix).rank();
  return g;
}

DualBases dual_bases(const Algebra& A, const Grade& mu) {
  DualBases d;
  const WeightBlock& B = A.block(mu);
  for (int a = 0; a < B.dim; ++a) {
    d.v.push_back(A.from_F_coords(mu, B.gram_inv.row(a)));
    SVec e(B.dim);
    e[a] = Scalar(1);
    d.u.push_back(A.from_E_coords(mu, e));
  }
  return d;
}

Scalar rosso_form(const Algebra& A, const Element& a, const Element& b) {
  const RootDatum& rd = A.datum();
  Scalar s;
  for (const auto& [m, c] : a.terms())
    for (const auto& [m2, c2] : b.terms()) {
      // m = y K x with x in U^+_mu, y in U^-_{-nu}; likewise m2.
      if (m.ew != m2.fw || m2.ew != m.fw) continue;
      const Scalar& g1 = A.block(m.ew).gram(m2.fi, m.ei);  // (y', x)
      if (g1.is_zero()) continue;
      const Scalar& g2 = A.block(m.fw).gram(m.fi, m2.ei);  // (y, x')
      if (g2.is_zero()) continue;
      Grade lam = m.k - m.fw, lam2 = m2.k - m2.fw;
      Rat e = rd.form(rd.two_rho(), m.fw) - rd.form(lam, lam2) / Rat(2);
      Scalar t = c * c2 * g1 * g2 * rd.qpow(e);
      if (rd.parity_of(m.fw)) t = -t;
      s += t;
    }
  return s;
}

TensorElement theta_block(const Algebra& A, const Grade& mu) {
  TensorElement t(&A);
  if (is_zero(mu)) {
    t.add(Monomial{}, Monomial{}, Scalar(1));
    return t;
  }
  const WeightBlock& B = A.block(mu);
  for (int a = 0; a < B.dim; ++a)
    for (int b = 0; b < B.dim; ++b) {
      const Scalar& c = B.gram_inv(a, b);
      if (c.is_zero()) continue;
      Monomial y, x;
      y.fw = mu;
      y.fi = b;
      x.ew = mu;
      x.ei = a;
      t.add(y, x, c);
    }
  return t;
}

TensorElement quasi_r_matrix(const Algebra& A, int cutoff) {
  TensorElement t = theta_block(A, Grade{});
  if (cutoff <= 0) return t;
  for (const Grade& mu : positive_weights_up_to(A.rank(), cutoff)) t += theta_block(A, mu);
  return t;
}

bool check_theta_relations(const Algebra& A, int cutoff, std::string* why) {
  auto fail = [&](const Grade& mu, int i, int which) {
    if (why) {
      std::ostringstream os;
      os << "relation " << which << " fails at weight " << A.datum().weight_string(to_ratvec(mu, A.rank()))
         << " for i=" << i + 1;
      *why = os.str();
    }
    return false;
  };
  using T = TensorElement;
  for (const Grade& mu : positive_weights_up_to(A.rank(), cutoff)) {
    T th = theta_block(A, mu);
    for (int i = 0; i < A.rank(); ++i) {
      Grade lo = mu - grade_unit(i);
      T thl = nonneg(lo) ? theta_block(A, lo) : T(&A);
      Element Ki = A.K_simple(i), Kim = A.K_simple(i, -1), one = A.one();
      T l1 = T::pure(A.E(i), one) * th + T::pure(Ki, A.E(i)) * thl;
      T r1 = th * T::pure(A.E(i), one) + thl * T::pure(Kim, A.E(i));
      if (!(l1 == r1)) return fail(mu, i, 1);
      T l2 = T::pure(one, A.F(i)) * th + T::pure(A.F(i), Kim) * thl;
      T r2 = th * T::pure(one, A.F(i)) + thl * T::pure(A.F(i), Ki);
      if (!(l2 == r2)) return fail(mu, i, 2);
      T kk = T::pure(Ki, Ki);
      if (!(kk * th == th * kk)) return fail(mu, i, 3);
    }
  }
  return true;
}

}  // namespace qsuper
