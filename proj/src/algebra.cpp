#include "qsuper/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsuper/cache.hpp"

namespace qsuper {

namespace {

inline int sgn(int p) { return (p & 1) ? -1 : 1; }

}  // namespace

// ----------------------------------------------------------------- Element

Element::Element(const Algebra* a, const Monomial& m, Scalar c) : alg_(a) { add(m, c); }

void Element::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (!alg_) alg_ = o.alg_;
  for (auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!alg_) alg_ = o.alg_;
  for (auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Element operator*(const Element& a, const Element& b) {
  const Algebra* alg = a.alg_ ? a.alg_ : b.alg_;
  if (!alg) return Element();
  return alg->mul(a, b);
}

int Element::parity() const {
  if (terms_.empty()) return 0;
  int p = alg_->parity(terms_.begin()->first);
  for (auto& [m, c] : terms_)
    if (alg_->parity(m) != p) throw std::logic_error("element is not homogeneous in parity");
  return p;
}

Grade Element::degree() const {
  if (terms_.empty()) return Grade{};
  const auto& m0 = terms_.begin()->first;
  Grade d = m0.ew - m0.fw;
  for (auto& [m, c] : terms_)
    if (m.ew - m.fw != d) throw std::logic_error("element is not homogeneous in degree");
  return d;
}

// ----------------------------------------------------------- TensorElement

TensorElement TensorElement::pure(const Element& a, const Element& b) {
  TensorElement t(a.algebra() ? a.algebra() : b.algebra());
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) t.add(ma, mb, ca * cb);
  return t;
}

void TensorElement::add(const Monomial& a, const Monomial& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(Key{a, b}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (!alg_) alg_ = o.alg_;
  for (auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (!alg_) alg_ = o.alg_;
  for (auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

TensorElement operator*(const TensorElement& x, const TensorElement& y) {
  const Algebra* alg = x.alg_ ? x.alg_ : y.alg_;
  TensorElement r(alg);
  if (!alg) return r;
  for (auto& [kx, cx] : x.terms_)
    for (auto& [ky, cy] : y.terms_) {
      int sign = sgn(alg->parity(ky.first) * alg->parity(kx.second));
      Element a = alg->mul(Element(alg, kx.first), Element(alg, ky.first));
      Element b = alg->mul(Element(alg, kx.second), Element(alg, ky.second));
      Scalar c = cx * cy;
      if (sign < 0) c = -c;
      for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms()) r.add(ma, mb, c * ca * cb);
    }
  return r;
}

// ----------------------------------------------------------------- Algebra

Algebra::Algebra(RootDatum rd) : rd_(std::move(rd)) {}
Algebra::~Algebra() = default;

void Algebra::set_cache_dir(const std::string& dir) {
  std::lock_guard lk(mu_);
  cache_dir_ = dir;
}

Scalar Algebra::qq_minus(int i) const {
  Scalar qi = rd_.q_i(i);
  return qi - qi.inverse();
}

Scalar Algebra::pair_FE(int i) const { return -qq_minus(i).inverse(); }

const WeightBlock& Algebra::block(const Grade& mu) const {
  std::lock_guard lk(mu_);
  auto it = blocks_.find(mu);
  if (it != blocks_.end()) return *it->second;
  if (!nonneg(mu)) throw std::invalid_argument("weight block requested for a non-positive weight");
  std::unique_ptr<WeightBlock> b;
  if (!cache_dir_.empty() && !is_zero(mu)) {
    auto tmp = std::make_unique<WeightBlock>();
    if (load_block(cache_dir_, rd_, mu, *tmp)) b = std::move(tmp);
  }
  if (!b) {
    b = build_block(mu);
    if (!cache_dir_.empty() && !is_zero(mu)) save_block(cache_dir_, rd_, *b);
  }
  auto& ref = *b;
  blocks_.emplace(mu, std::move(b));
  return ref;
}

std::unique_ptr<WeightBlock> Algebra::build_block(const Grade& mu) const {
  const int r = rank();
  auto B = std::make_unique<WeightBlock>();
  B->mu = mu;
  B->parity = rd_.parity_of(mu);
  B->lmulF.resize(r);
  B->lmulE.resize(r);
  B->rF.resize(r);
  B->rpF.resize(r);
  B->rE.resize(r);
  B->rpE.resize(r);
  if (is_zero(mu)) {
    B->dim = 1;
    B->fwords = {{}};
    B->ewords = {{}};
    B->fsplit = {{-1, 0}};
    B->esplit = {{-1, 0}};
    B->gram = SMat::identity(1);
    B->gram_inv = SMat::identity(1);
    return B;
  }

  std::vector<const WeightBlock*> lower(r, nullptr);
  std::vector<std::pair<int, int>> cands;
  for (int i = 0; i < r; ++i) {
    Grade lo = mu - grade_unit(i);
    if (!nonneg(lo)) continue;
    lower[i] = &block(lo);
    for (int b = 0; b < lower[i]->dim; ++b) cands.emplace_back(i, b);
  }
  const int nc = static_cast<int>(cands.size());

  // Derivations evaluated on candidate words F_i y' and E_i x'.
  std::vector<std::vector<SVec>> rFc(r), rpFc(r), rEc(r), rpEc(r);
  for (int j = 0; j < r; ++j) {
    if (!lower[j]) continue;
    const int dj = lower[j]->dim;
    rFc[j].assign(nc, SVec(dj));
    rpFc[j].assign(nc, SVec(dj));
    rEc[j].assign(nc, SVec(dj));
    rpEc[j].assign(nc, SVec(dj));
    for (int c = 0; c < nc; ++c) {
      auto [i, b] = cands[c];
      const WeightBlock& lo = *lower[i];
      const Grade nup = lo.mu;
      const int pij = rd_.parity(i) * rd_.parity(j);
      if (!lo.rF[j].empty()) {
        const SMat& Li = lower[j]->lmulF[i];
        Scalar qij = qform(grade_unit(i), grade_unit(j));
        SVec t = qsuper::apply(Li, lo.rF[j].column(b));
        for (int k = 0; k < dj; ++k) rFc[j][c][k] += qij * t[k];
        SVec tp = qsuper::apply(Li, lo.rpF[j].column(b));
        for (int k = 0; k < dj; ++k) rpFc[j][c][k] += Scalar(sgn(pij)) * tp[k];
        const SMat& Ei = lower[j]->lmulE[i];
        SVec te = qsuper::apply(Ei, lo.rE[j].column(b));
        for (int k = 0; k < dj; ++k) rEc[j][c][k] += te[k];
        SVec tpe = qsuper::apply(Ei, lo.rpE[j].column(b));
        for (int k = 0; k < dj; ++k) rpEc[j][c][k] += Scalar(sgn(pij)) * qij * tpe[k];
      }
      if (i == j) {
        const int s = sgn(rd_.parity(j) * lo.parity);
        Scalar qn = qform(nup, grade_unit(j));
        rFc[j][c][b] += Scalar(s);
        rpFc[j][c][b] += qn;
        rEc[j][c][b] += Scalar(s) * qn;
        rpEc[j][c][b] += Scalar(1);
      }
    }
  }

  // Candidate Gram matrix: (y, E_j x') = (F_j, E_j) (r_j(y), x').
  SMat G(nc, nc);
  for (int ec = 0; ec < nc; ++ec) {
    auto [j, b] = cands[ec];
    const SMat& gl = lower[j]->gram;
    Scalar cj = pair_FE(j);
    for (int fc = 0; fc < nc; ++fc) {
      Scalar s;
      const SVec& rv = rFc[j][fc];
      for (int k = 0; k < lower[j]->dim; ++k)
        if (!rv[k].is_zero() && !gl(k, b).is_zero()) s += rv[k] * gl(k, b);
      if (!s.is_zero()) G(fc, ec) = cj * s;
    }
  }

  RankProfile rp = rank_profile(G);
  const int dim = rp.rank();
  B->dim = dim;
  B->gram = submatrix(G, rp.rows, rp.cols);
  B->gram_inv = dim ? inverse(B->gram) : SMat();
  for (int a = 0; a < dim; ++a) {
    auto [i, b] = cands[rp.rows[a]];
    B->fsplit.emplace_back(i, b);
    std::vector<int> w{i};
    w.insert(w.end(), lower[i]->fwords[b].begin(), lower[i]->fwords[b].end());
    B->fwords.push_back(std::move(w));
    auto [ie, be] = cands[rp.cols[a]];
    B->esplit.emplace_back(ie, be);
    std::vector<int> we{ie};
    we.insert(we.end(), lower[ie]->ewords[be].begin(), lower[ie]->ewords[be].end());
    B->ewords.push_back(std::move(we));
  }

  for (int i = 0; i < r; ++i) {
    if (!lower[i]) continue;
    const int di = lower[i]->dim;
    B->lmulF[i] = SMat(dim, di);
    B->lmulE[i] = SMat(dim, di);
    for (int c = 0; c < nc; ++c) {
      if (cands[c].first != i) continue;
      const int b = cands[c].second;
      // F-candidate row restricted to pivot columns, times G^{-1}.
      SVec row(dim);
      for (int k = 0; k < dim; ++k) row[k] = G(c, rp.cols[k]);
      SVec coords = apply_left(row, B->gram_inv);
      for (int a = 0; a < dim; ++a) B->lmulF[i](a, b) = coords[a];
      SVec col(dim);
      for (int k = 0; k < dim; ++k) col[k] = G(rp.rows[k], c);
      SVec ecoords = qsuper::apply(B->gram_inv, col);
      for (int a = 0; a < dim; ++a) B->lmulE[i](a, b) = ecoords[a];
    }
    B->rF[i] = SMat(di, dim);
    B->rpF[i] = SMat(di, dim);
    B->rE[i] = SMat(di, dim);
    B->rpE[i] = SMat(di, dim);
    for (int a = 0; a < dim; ++a)
      for (int k = 0; k < di; ++k) {
        B->rF[i](k, a) = rFc[i][rp.rows[a]][k];
        B->rpF[i](k, a) = rpFc[i][rp.rows[a]][k];
        B->rE[i](k, a) = rEc[i][rp.cols[a]][k];
        B->rpE[i](k, a) = rpEc[i][rp.cols[a]][k];
      }
  }
  return B;
}

// ------------------------------------------------------------ constructors

Element Algebra::one() const { return Element(this, Monomial{}); }

Element Algebra::scalar(const Scalar& s) const { return Element(this, Monomial{}, s); }

Element Algebra::E(int i) const {
  Monomial m;
  m.ew = grade_unit(i);
  return Element(this, m);
}

Element Algebra::F(int i) const {
  Monomial m;
  m.fw = grade_unit(i);
  return Element(this, m);
}

Element Algebra::K(const Grade& mu) const {
  Monomial m;
  m.k = rd_.canonical_k(mu);
  return Element(this, m);
}

Element Algebra::K_simple(int i, int power) const { return K(scaled(grade_unit(i), power)); }

SVec Algebra::reduce_F_word(const std::vector<int>& w) const {
  if (w.empty()) return SVec{Scalar(1)};
  Grade wt{};
  for (int x : w) wt[x] += 1;
  std::vector<int> rest(w.begin() + 1, w.end());
  SVec low = reduce_F_word(rest);
  return qsuper::apply(block(wt).lmulF[w[0]], low);
}

SVec Algebra::reduce_E_word(const std::vector<int>& w) const {
  if (w.empty()) return SVec{Scalar(1)};
  Grade wt{};
  for (int x : w) wt[x] += 1;
  std::vector<int> rest(w.begin() + 1, w.end());
  SVec low = reduce_E_word(rest);
  return qsuper::apply(block(wt).lmulE[w[0]], low);
}

Element Algebra::from_F_coords(const Grade& mu, const SVec& c) const {
  Element e(this);
  for (std::size_t a = 0; a < c.size(); ++a) {
    Monomial m;
    m.fw = mu;
    m.fi = static_cast<int>(a);
    e.add(m, c[a]);
  }
  return e;
}

Element Algebra::from_E_coords(const Grade& mu, const SVec& c) const {
  Element e(this);
  for (std::size_t a = 0; a < c.size(); ++a) {
    Monomial m;
    m.ew = mu;
    m.ei = static_cast<int>(a);
    e.add(m, c[a]);
  }
  return e;
}

Element Algebra::F_word(const std::vector<int>& w) const {
  Grade wt{};
  for (int x : w) wt[x] += 1;
  return from_F_coords(wt, reduce_F_word(w));
}

Element Algebra::E_word(const std::vector<int>& w) const {
  Grade wt{};
  for (int x : w) wt[x] += 1;
  return from_E_coords(wt, reduce_E_word(w));
}

// ----------------------------------------------------------- multiplication

const std::vector<SVec>& Algebra::product_table(bool fside, const Grade& mu, const Grade& nu) const {
  std::lock_guard lk(mu_);
  auto key = std::make_tuple(fside, mu, nu);
  auto it = ptab_.find(key);
  if (it != ptab_.end()) return it->second;
  const WeightBlock& bm = block(mu);
  const WeightBlock& bn = block(nu);
  const WeightBlock& bt = block(mu + nu);
  std::vector<SVec> tab(static_cast<std::size_t>(bm.dim) * bn.dim);
  for (int a = 0; a < bm.dim; ++a) {
    auto [i, a2] = fside ? bm.fsplit[a] : bm.esplit[a];
    for (int b = 0; b < bn.dim; ++b) {
      if (is_zero(mu)) {
        SVec v(bn.dim);
        v[b] = Scalar(1);
        tab[static_cast<std::size_t>(a) * bn.dim + b] = v;
        continue;
      }
      const SVec& low = product_table(fside, mu - grade_unit(i), nu)[static_cast<std::size_t>(a2) * bn.dim + b];
      tab[static_cast<std::size_t>(a) * bn.dim + b] = qsuper::apply(fside ? bt.lmulF[i] : bt.lmulE[i], low);
    }
  }
  return ptab_.emplace(key, std::move(tab)).first->second;
}

SVec Algebra::mul_F(const Grade& mu, int a, const Grade& nu, int b) const {
  if (is_zero(nu)) {
    SVec v(block(mu).dim);
    v[a] = Scalar(1);
    return v;
  }
  return product_table(true, mu, nu)[static_cast<std::size_t>(a) * block(nu).dim + b];
}

SVec Algebra::mul_E(const Grade& mu, int a, const Grade& nu, int b) const {
  if (is_zero(nu)) {
    SVec v(block(mu).dim);
    v[a] = Scalar(1);
    return v;
  }
  return product_table(false, mu, nu)[static_cast<std::size_t>(a) * block(nu).dim + b];
}

const std::vector<std::pair<Monomial, Scalar>>& Algebra::straighten(const Grade& mu, int a, const Grade& nu,
                                                                    int b) const {
  std::lock_guard lk(mu_);
  StraightKey key{mu, a, nu, b};
  auto it = straight_.find(key);
  if (it != straight_.end()) return it->second;
  std::map<Monomial, Scalar> acc;
  auto put = [&](const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    Monomial mm = canonical(m);
    auto [jt, fresh] = acc.try_emplace(mm, c);
    if (!fresh) {
      jt->second += c;
      if (jt->second.is_zero()) acc.erase(jt);
    }
  };
  if (is_zero(mu) || is_zero(nu)) {
    Monomial m;
    m.fw = nu;
    m.fi = b;
    m.ew = mu;
    m.ei = a;
    put(m, Scalar(1));
  } else {
    const WeightBlock& bm = block(mu);
    auto [i, a2] = bm.esplit[a];
    const Grade ai = grade_unit(i);
    const auto& low = straighten(mu - ai, a2, nu, b);
    const Scalar inv_qq = qq_minus(i).inverse();
    for (const auto& [m, c] : low) {
      // Pass E_i through y: sign and K-commutation, then left multiply x.
      Scalar s1 = qform(m.k, ai).inverse();
      if (sgn(rd_.parity(i) * rd_.parity_of(m.fw)) < 0) s1 = -s1;
      const WeightBlock& bx = block(m.ew + ai);
      const SMat& L = bx.lmulE[i];
      for (int t = 0; t < bx.dim; ++t) {
        const Scalar& e = L(t, m.ei);
        if (e.is_zero()) continue;
        Monomial n = m;
        n.ew = m.ew + ai;
        n.ei = t;
        put(n, c * s1 * e);
      }
      // Commutator [E_i, y] from r_i and r'_i.
      Grade lowf = m.fw - ai;
      if (!nonneg(lowf)) continue;
      const WeightBlock& by = block(m.fw);
      Scalar ca = c * inv_qq * qform(ai, lowf).inverse();
      if (sgn(rd_.parity(i) * rd_.parity_of(lowf)) < 0) ca = -ca;
      Scalar cb = -(c * inv_qq);
      const int dl = block(lowf).dim;
      for (int t = 0; t < dl; ++t) {
        const Scalar& x = by.rF[i](t, m.fi);
        if (!x.is_zero()) {
          Monomial n = m;
          n.fw = lowf;
          n.fi = t;
          n.k = m.k + ai;
          put(n, ca * x);
        }
        const Scalar& y = by.rpF[i](t, m.fi);
        if (!y.is_zero()) {
          Monomial n = m;
          n.fw = lowf;
          n.fi = t;
          n.k = m.k - ai;
          put(n, cb * y);
        }
      }
    }
  }
  std::vector<std::pair<Monomial, Scalar>> out(acc.begin(), acc.end());
  return straight_.emplace(key, std::move(out)).first->second;
}

void Algebra::mul_monomials(const Monomial& m1, const Monomial& m2, const Scalar& c, Element& out) const {
  auto emit = [&](const Monomial& mid, const Scalar& cm) {
    Scalar f = c * cm;
    if (!is_zero(mid.fw)) f *= qform(m1.k, mid.fw).inverse();
    if (!is_zero(mid.ew)) f *= qform(m2.k, mid.ew).inverse();
    SVec fp = mul_F(m1.fw, m1.fi, mid.fw, mid.fi);
    SVec ep = mul_E(mid.ew, mid.ei, m2.ew, m2.ei);
    Grade fw = m1.fw + mid.fw, ew = mid.ew + m2.ew;
    Grade k = rd_.canonical_k(m1.k + mid.k + m2.k);
    for (std::size_t a = 0; a < fp.size(); ++a) {
      if (fp[a].is_zero()) continue;
      for (std::size_t b = 0; b < ep.size(); ++b) {
        if (ep[b].is_zero()) continue;
        Monomial n;
        n.fw = fw;
        n.fi = static_cast<int>(a);
        n.k = k;
        n.ew = ew;
        n.ei = static_cast<int>(b);
        out.add(n, f * fp[a] * ep[b]);
      }
    }
  };
  if (is_zero(m1.ew) || is_zero(m2.fw)) {
    Monomial mid;
    mid.fw = m2.fw;
    mid.fi = m2.fi;
    mid.ew = m1.ew;
    mid.ei = m1.ei;
    emit(mid, Scalar(1));
    return;
  }
  for (const auto& [mid, cm] : straighten(m1.ew, m1.ei, m2.fw, m2.fi)) emit(mid, cm);
}

Element Algebra::mul(const Element& a, const Element& b) const {
  Element out(this);
  for (const auto& [m1, c1] : a.terms())
    for (const auto& [m2, c2] : b.terms()) mul_monomials(m1, m2, c1 * c2, out);
  return out;
}

Element Algebra::supercommutator(const Element& a, const Element& b) const {
  Element ab = mul(a, b), ba = mul(b, a);
  if (a.parity() && b.parity()) return ab + ba;
  return ab - ba;
}

// -------------------------------------------------------------------- Hopf

const TensorElement& Algebra::coproduct_F(const Grade& mu, int a) const {
  std::lock_guard lk(mu_);
  auto key = std::make_pair(mu, a);
  auto it = cop_f_.find(key);
  if (it != cop_f_.end()) return it->second;
  TensorElement t(this);
  if (is_zero(mu)) {
    t.add(Monomial{}, Monomial{}, Scalar(1));
  } else {
    auto [i, a2] = block(mu).fsplit[a];
    TensorElement gi = TensorElement::pure(one(), F(i)) + TensorElement::pure(F(i), K_simple(i, -1));
    t = gi * coproduct_F(mu - grade_unit(i), a2);
  }
  return cop_f_.emplace(key, std::move(t)).first->second;
}

const TensorElement& Algebra::coproduct_E(const Grade& mu, int a) const {
  std::lock_guard lk(mu_);
  auto key = std::make_pair(mu, a);
  auto it = cop_e_.find(key);
  if (it != cop_e_.end()) return it->second;
  TensorElement t(this);
  if (is_zero(mu)) {
    t.add(Monomial{}, Monomial{}, Scalar(1));
  } else {
    auto [i, a2] = block(mu).esplit[a];
    TensorElement gi = TensorElement::pure(K_simple(i), E(i)) + TensorElement::pure(E(i), one());
    t = gi * coproduct_E(mu - grade_unit(i), a2);
  }
  return cop_e_.emplace(key, std::move(t)).first->second;
}

TensorElement Algebra::coproduct(const Element& u) const {
  TensorElement out(this);
  for (const auto& [m, c] : u.terms()) {
    TensorElement kk = TensorElement::pure(K(m.k), K(m.k));
    TensorElement t = coproduct_F(m.fw, m.fi) * kk * coproduct_E(m.ew, m.ei);
    t *= c;
    out += t;
  }
  return out;
}

Scalar Algebra::counit(const Element& u) const {
  Scalar s;
  for (const auto& [m, c] : u.terms())
    if (is_zero(m.fw) && is_zero(m.ew)) s += c;
  return s;
}

const Element& Algebra::antipode_F(const Grade& mu, int a) const {
  std::lock_guard lk(mu_);
  auto key = std::make_pair(mu, a);
  auto it = ant_f_.find(key);
  if (it != ant_f_.end()) return it->second;
  Element e(this);
  if (is_zero(mu)) {
    e = one();
  } else {
    auto [i, a2] = block(mu).fsplit[a];
    Grade low = mu - grade_unit(i);
    Element si = -mul(F(i), K_simple(i));
    e = mul(antipode_F(low, a2), si);
    if (sgn(rd_.parity(i) * rd_.parity_of(low)) < 0) e = -e;
  }
  return ant_f_.emplace(key, std::move(e)).first->second;
}

const Element& Algebra::antipode_E(const Grade& mu, int a) const {
  std::lock_guard lk(mu_);
  auto key = std::make_pair(mu, a);
  auto it = ant_e_.find(key);
  if (it != ant_e_.end()) return it->second;
  Element e(this);
  if (is_zero(mu)) {
    e = one();
  } else {
    auto [i, a2] = block(mu).esplit[a];
    Grade low = mu - grade_unit(i);
    Element si = -mul(K_simple(i, -1), E(i));
    e = mul(antipode_E(low, a2), si);
    if (sgn(rd_.parity(i) * rd_.parity_of(low)) < 0) e = -e;
  }
  return ant_e_.emplace(key, std::move(e)).first->second;
}

Element Algebra::antipode(const Element& u) const {
  Element out(this);
  for (const auto& [m, c] : u.terms()) {
    Element t = mul(mul(antipode_E(m.ew, m.ei), K(-m.k)), antipode_F(m.fw, m.fi));
    Scalar cc = c;
    if (rd_.parity_of(m.fw) && rd_.parity_of(m.ew)) cc = -cc;
    out += t * cc;
  }
  return out;
}

Element Algebra::omega(const Element& u) const {
  Element out(this);
  for (const auto& [m, c] : u.terms()) {
    const WeightBlock& bf = block(m.fw);
    const WeightBlock& be = block(m.ew);
    Element y = E_word(bf.fwords[m.fi]);
    Element x = F_word(be.ewords[m.ei]);
    Scalar cc = c;
    if (m.ew[rd_.odd_index()] & 1) cc = -cc;
    out += mul(mul(y, K(-m.k)), x) * cc;
  }
  return out;
}

Element Algebra::tau(const Element& u) const {
  Element out(this);
  for (const auto& [m, c] : u.terms()) {
    std::vector<int> fw = block(m.fw).fwords[m.fi];
    std::vector<int> ew = block(m.ew).ewords[m.ei];
    std::reverse(fw.begin(), fw.end());
    std::reverse(ew.begin(), ew.end());
    out += mul(mul(F_word(ew), K(m.k)), E_word(fw)) * c;
  }
  return out;
}

Element Algebra::sigma_tilde(const Element& u, const std::vector<int>& sigma) const {
  Element out(this);
  for (const auto& [m, c] : u.terms()) {
    int s = 1;
    for (int i = 0; i < rank(); ++i)
      if (sigma[i] < 0 && ((m.k[i] + m.fw[i]) & 1)) s = -s;
    out.add(m, s < 0 ? -c : c);
  }
  return out;
}

Element Algebra::ad(const Element& a, const Element& b) const {
  // b may mix parities; the sign is taken per parity component.
  Element bpart[2] = {Element(this), Element(this)};
  for (const auto& [m, c] : b.terms()) bpart[parity(m)].add(m, c);
  Element out(this);
  TensorElement d = coproduct(a);
  for (const auto& [k, c] : d.terms()) {
    Element a1(this, k.first), s2 = antipode(Element(this, k.second));
    for (int pb = 0; pb < 2; ++pb) {
      if (bpart[pb].is_zero()) continue;
      Scalar cc = c;
      if (pb && parity(k.second)) cc = -cc;
      out += mul(mul(a1, bpart[pb]), s2) * cc;
    }
  }
  return out;
}

// ------------------------------------------------------------- derivations

namespace {

void require_minus(const Element& y) {
  for (auto& [m, c] : y.terms())
    if (!is_zero(m.k) || !is_zero(m.ew)) throw std::invalid_argument("derivation r_i requires an element of U^-");
}

void require_plus(const Element& x) {
  for (auto& [m, c] : x.terms())
    if (!is_zero(m.k) || !is_zero(m.fw)) throw std::invalid_argument("derivation r_i requires an element of U^+");
}

}  // namespace

Element Algebra::r(int i, const Element& y) const {
  require_minus(y);
  Element out(this);
  for (auto& [m, c] : y.terms()) {
    Grade low = m.fw - grade_unit(i);
    if (!nonneg(low)) continue;
    out += from_F_coords(low, block(m.fw).rF[i].column(m.fi)) * c;
  }
  return out;
}

Element Algebra::r_prime(int i, const Element& y) const {
  require_minus(y);
  Element out(this);
  for (auto& [m, c] : y.terms()) {
    Grade low = m.fw - grade_unit(i);
    if (!nonneg(low)) continue;
    out += from_F_coords(low, block(m.fw).rpF[i].column(m.fi)) * c;
  }
  return out;
}

Element Algebra::r_plus(int i, const Element& x) const {
  require_plus(x);
  Element out(this);
  for (auto& [m, c] : x.terms()) {
    Grade low = m.ew - grade_unit(i);
    if (!nonneg(low)) continue;
    out += from_E_coords(low, block(m.ew).rE[i].column(m.ei)) * c;
  }
  return out;
}

Element Algebra::r_prime_plus(int i, const Element& x) const {
  require_plus(x);
  Element out(this);
  for (auto& [m, c] : x.terms()) {
    Grade low = m.ew - grade_unit(i);
    if (!nonneg(low)) continue;
    out += from_E_coords(low, block(m.ew).rpE[i].column(m.ei)) * c;
  }
  return out;
}

}  // namespace qsuper
