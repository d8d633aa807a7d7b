#include "qsuper/modules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsuper {

const char* status_name(ModuleStatus s) {
  switch (s) {
    case ModuleStatus::Complete: return "complete";
    case ModuleStatus::Truncated: return "truncated";
    case ModuleStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

int sgn(int p) { return (p & 1) ? -1 : 1; }

// Weight spaces indexed by the offset g in lambda - g.
struct Space {
  int dim = 0;
  std::vector<SMat> E;  // E[i]: dim(g - alpha_i) x dim, empty when g - alpha_i < 0
  std::vector<SMat> F;  // F[j]: dim x dim(g - alpha_j)
};

// Flattens per-weight spaces into global matrices, ordered by height then
// offset then index.
WeightModule flatten(const Algebra& A, const RatVec& lambda, int hpar, const std::map<Grade, Space>& sp) {
  const RootDatum& rd = A.datum();
  const int r = A.rank();
  std::vector<Grade> order;
  for (auto& [g, s] : sp)
    if (s.dim) order.push_back(g);
  std::stable_sort(order.begin(), order.end(), [](const Grade& a, const Grade& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  std::map<Grade, int> offset;
  WeightModule M;
  M.alg = &A;
  for (auto& g : order) {
    offset[g] = M.dim();
    for (int a = 0; a < sp.at(g).dim; ++a) {
      M.weights.push_back(lambda - to_ratvec(g, r));
      M.parities.push_back((hpar + rd.parity_of(g)) & 1);
    }
  }
  const int n = M.dim();
  M.E.assign(r, SMat(n, n));
  M.F.assign(r, SMat(n, n));
  for (auto& g : order) {
    const Space& s = sp.at(g);
    int col0 = offset[g];
    for (int i = 0; i < r; ++i) {
      Grade lo = g - grade_unit(i);
      auto it = offset.find(lo);
      if (it != offset.end() && !s.E[i].empty())
        for (int a = 0; a < s.E[i].rows; ++a)
          for (int b = 0; b < s.dim; ++b) M.E[i](it->second + a, col0 + b) = s.E[i](a, b);
      if (it != offset.end() && !s.F[i].empty())
        for (int a = 0; a < s.dim; ++a)
          for (int b = 0; b < s.F[i].cols; ++b) M.F[i](col0 + a, it->second + b) = s.F[i](a, b);
    }
  }
  M.has_highest = true;
  M.highest = lambda;
  return M;
}

Scalar eval_k(const RootDatum& rd, const RatVec& wt, const Grade& k) { return rd.qpow(rd.form(wt, k)); }

}  // namespace

SMat WeightModule::K(const Grade& mu) const {
  const RootDatum& rd = alg->datum();
  SMat m(dim(), dim());
  for (int a = 0; a < dim(); ++a) m(a, a) = eval_k(rd, weights[a], mu);
  return m;
}

SMat WeightModule::F_basis(const Grade& mu, int a) const {
  auto key = std::make_pair(mu, a);
  if (auto it = fcache_.find(key); it != fcache_.end()) return it->second;
  SMat m = SMat::identity(dim());
  if (!is_zero(mu)) {
    auto [i, b] = alg->block(mu).fsplit[a];
    m = F[i] * F_basis(mu - grade_unit(i), b);
  }
  fcache_.emplace(key, m);
  return m;
}

SMat WeightModule::E_basis(const Grade& mu, int a) const {
  auto key = std::make_pair(mu, a);
  if (auto it = ecache_.find(key); it != ecache_.end()) return it->second;
  SMat m = SMat::identity(dim());
  if (!is_zero(mu)) {
    auto [i, b] = alg->block(mu).esplit[a];
    m = E[i] * E_basis(mu - grade_unit(i), b);
  }
  ecache_.emplace(key, m);
  return m;
}

SMat WeightModule::action(const Element& u) const {
  const RootDatum& rd = alg->datum();
  SMat out(dim(), dim());
  for (const auto& [m, c] : u.terms()) {
    SMat x = E_basis(m.ew, m.ei);
    // K acts diagonally; fold it into the rows of x.
    for (int a = 0; a < dim(); ++a) {
      Scalar kv = eval_k(rd, weights[a], m.k);
      for (int b = 0; b < dim(); ++b)
        if (!x(a, b).is_zero()) x(a, b) *= kv;
    }
    out = out + (F_basis(m.fw, m.fi) * x).scaled(c);
  }
  return out;
}

void require_half_lattice(const RootDatum& rd, const RatVec& lambda) {
  if (static_cast<int>(lambda.size()) != rd.rank()) throw std::invalid_argument("weight has the wrong number of coordinates");
  for (auto& x : lambda)
    if (2 % x.denominator() != 0)
      throw std::invalid_argument("weight " + rd.weight_string(lambda) + " is not in (1/2) Z Phi");
}

WeightModule verma_module(const Algebra& A, const RatVec& lambda, int depth) {
  const RootDatum& rd = A.datum();
  require_half_lattice(rd, lambda);
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  const int r = A.rank();
  std::map<Grade, Space> sp;
  std::vector<Grade> ws{Grade{}};
  for (auto& g : positive_weights_up_to(r, depth)) ws.push_back(g);
  for (auto& g : ws) {
    const WeightBlock& B = A.block(g);
    Space s;
    s.dim = B.dim;
    s.E.resize(r);
    s.F.resize(r);
    for (int i = 0; i < r; ++i) {
      Grade lo = g - grade_unit(i);
      if (!nonneg(lo) || B.dim == 0) continue;
      s.F[i] = B.lmulF[i];
      // E_i y v = (q_i - q_i^-1)^-1 (s q^{-(a_i, g - a_i)} q^{(lambda, a_i)} r_i(y) - q^{-(lambda, a_i)} r'_i(y)) v
      Scalar ql = rd.qpow(rd.form(lambda, grade_unit(i)));
      Scalar c1 = A.qform(grade_unit(i), lo).inverse() * ql;
      if (rd.parity(i) && rd.parity_of(lo)) c1 = -c1;
      Scalar c2 = -ql.inverse();
      Scalar inv = A.qq_minus(i).inverse();
      s.E[i] = (B.rF[i].scaled(c1) + B.rpF[i].scaled(c2)).scaled(inv);
    }
    sp.emplace(g, std::move(s));
  }
  WeightModule M = flatten(A, lambda, 0, sp);
  M.depth = depth;
  M.status = ModuleStatus::Truncated;
  return M;
}

WeightModule simple_module(const Algebra& A, const RatVec& lambda, int depth, int highest_parity) {
  const RootDatum& rd = A.datum();
  require_half_lattice(rd, lambda);
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  const int r = A.rank();
  std::map<Grade, Space> sp;
  {
    Space s;
    s.dim = 1;
    s.E.resize(r);
    s.F.resize(r);
    sp.emplace(Grade{}, std::move(s));
  }
  auto dim_at = [&](const Grade& g) {
    auto it = sp.find(g);
    return it == sp.end() ? 0 : it->second.dim;
  };
  std::vector<Grade> prev{Grade{}};
  ModuleStatus status = ModuleStatus::Inconclusive;
  int level = 1;
  for (; level <= depth + 1; ++level) {
    std::map<Grade, bool> next;
    for (auto& g : prev)
      for (int j = 0; j < r; ++j) next[g + grade_unit(j)] = true;
    std::vector<Grade> built;
    for (auto& [g, unused] : next) {
      // Candidates F_j b with b in the space at g - alpha_j.
      std::vector<std::pair<int, int>> cands;
      for (int j = 0; j < r; ++j) {
        Grade lo = g - grade_unit(j);
        if (!nonneg(lo)) continue;
        for (int b = 0; b < dim_at(lo); ++b) cands.emplace_back(j, b);
      }
      if (cands.empty()) continue;
      // Components: E_i images in the spaces at g - alpha_i.
      std::vector<int> offs(r + 1, 0);
      for (int i = 0; i < r; ++i) {
        Grade lo = g - grade_unit(i);
        offs[i + 1] = offs[i] + (nonneg(lo) ? dim_at(lo) : 0);
      }
      const int nc = static_cast<int>(cands.size()), ncomp = offs[r];
      SMat C(nc, ncomp);
      for (int c = 0; c < nc; ++c) {
        auto [j, b] = cands[c];
        Grade gb = g - grade_unit(j);
        const Space& sb = sp.at(gb);
        RatVec wb = lambda - to_ratvec(gb, r);
        for (int i = 0; i < r; ++i) {
          Grade gi = g - grade_unit(i);
          if (!nonneg(gi) || dim_at(gi) == 0) continue;
          // (-1)^{p_i p_j} F_j E_i b
          Grade gij = gb - grade_unit(i);
          if (nonneg(gij) && dim_at(gij) && !sb.E[i].empty()) {
            SVec eb = sb.E[i].column(b);
            const SMat& Fj = sp.at(gi).F[j];
            if (!Fj.empty()) {
              SVec t = qsuper::apply(Fj, eb);
              int s = sgn(rd.parity(i) * rd.parity(j));
              for (int k = 0; k < dim_at(gi); ++k)
                if (!t[k].is_zero()) C(c, offs[i] + k) += s < 0 ? -t[k] : t[k];
            }
          }
          if (i == j) {
            Scalar kv = rd.qpow(rd.form(wb, grade_unit(i)));
            C(c, offs[i] + b) += (kv - kv.inverse()) * A.qq_minus(i).inverse();
          }
        }
      }
      RankProfile rp = rank_profile(C);
      const int d = rp.rank();
      if (d == 0) continue;
      Space s;
      s.dim = d;
      s.E.resize(r);
      s.F.resize(r);
      SMat basis = submatrix(C, rp.rows, rp.cols);
      SMat binv = inverse(basis);
      for (int i = 0; i < r; ++i) {
        Grade gi = g - grade_unit(i);
        if (!nonneg(gi)) continue;
        const int di = dim_at(gi);
        s.E[i] = SMat(di, d);
        for (int a = 0; a < d; ++a)
          for (int k = 0; k < di; ++k) s.E[i](k, a) = C(rp.rows[a], offs[i] + k);
        s.F[i] = SMat(d, di);
      }
      for (int c = 0; c < nc; ++c) {
        auto [j, b] = cands[c];
        SVec row(d);
        for (int k = 0; k < d; ++k) row[k] = C(c, rp.cols[k]);
        SVec coords = apply_left(row, binv);
        for (int a = 0; a < d; ++a) s.F[j](a, b) = coords[a];
      }
      sp.emplace(g, std::move(s));
      built.push_back(g);
    }
    if (built.empty()) {
      status = ModuleStatus::Complete;
      break;
    }
    if (level == depth + 1) {
      // Still growing past the depth: drop the probe level.
      for (auto& g : built) sp.erase(g);
      break;
    }
    prev = built;
  }
  WeightModule M = flatten(A, lambda, highest_parity, sp);
  M.depth = depth;
  M.status = status;
  return M;
}

WeightModule trivial_module(const Algebra& A) { return simple_module(A, RatVec(A.rank(), Rat(0)), 1); }

WeightModule natural_module(const Algebra& A) {
  const RootDatum& rd = A.datum();
  if (!rd.has_natural_module()) throw std::invalid_argument("no natural module is defined for " + rd.name());
  WeightModule M = simple_module(A, rd.natural_highest_weight(), 8);
  if (M.status != ModuleStatus::Complete) throw std::logic_error("natural module did not terminate");
  return M;
}

WeightModule dual_module(const WeightModule& M) {
  const Algebra& A = *M.alg;
  const RootDatum& rd = A.datum();
  const int n = M.dim(), r = A.rank();
  WeightModule D;
  D.alg = M.alg;
  D.parities = M.parities;
  for (auto& w : M.weights) D.weights.push_back(scaled(w, Rat(-1)));
  D.E.assign(r, SMat(n, n));
  D.F.assign(r, SMat(n, n));
  for (int i = 0; i < r; ++i) {
    Grade ai = grade_unit(i);
    // S(E_i) = -K_i^{-1} E_i, S(F_i) = -F_i K_i
    SMat se = (M.K(scaled(ai, -1)) * M.E[i]).scaled(Scalar(-1));
    SMat sf = (M.F[i] * M.K(ai)).scaled(Scalar(-1));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int s = sgn(rd.parity(i) * M.parities[k]);
        if (!se(k, j).is_zero()) D.E[i](j, k) = s < 0 ? -se(k, j) : se(k, j);
        if (!sf(k, j).is_zero()) D.F[i](j, k) = s < 0 ? -sf(k, j) : sf(k, j);
      }
  }
  D.depth = M.depth;
  D.status = M.status;
  return D;
}

WeightModule tensor_module(const WeightModule& M, const WeightModule& N) {
  const Algebra& A = *M.alg;
  const RootDatum& rd = A.datum();
  const int m = M.dim(), n = N.dim(), r = A.rank();
  WeightModule T;
  T.alg = M.alg;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) {
      T.weights.push_back(M.weights[a] + N.weights[b]);
      T.parities.push_back((M.parities[a] + N.parities[b]) & 1);
    }
  T.E.assign(r, SMat(m * n, m * n));
  T.F.assign(r, SMat(m * n, m * n));
  for (int i = 0; i < r; ++i) {
    Grade ai = grade_unit(i);
    const int pi = rd.parity(i);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b) {
        const int col = a * n + b;
        const int s = sgn(pi * M.parities[a]);
        Scalar km = eval_k(rd, M.weights[a], ai);
        Scalar kn_inv = eval_k(rd, N.weights[b], ai).inverse();
        // E_i (m (x) n) = (-1)^{p_i |m|} K_i m (x) E_i n + E_i m (x) n
        for (int b2 = 0; b2 < n; ++b2)
          if (!N.E[i](b2, b).is_zero()) T.E[i](a * n + b2, col) += (s < 0 ? -km : km) * N.E[i](b2, b);
        for (int a2 = 0; a2 < m; ++a2)
          if (!M.E[i](a2, a).is_zero()) T.E[i](a2 * n + b, col) += M.E[i](a2, a);
        // F_i (m (x) n) = (-1)^{p_i |m|} m (x) F_i n + F_i m (x) K_i^{-1} n
        for (int b2 = 0; b2 < n; ++b2)
          if (!N.F[i](b2, b).is_zero()) T.F[i](a * n + b2, col) += s < 0 ? -N.F[i](b2, b) : N.F[i](b2, b);
        for (int a2 = 0; a2 < m; ++a2)
          if (!M.F[i](a2, a).is_zero()) T.F[i](a2 * n + b, col) += M.F[i](a2, a) * kn_inv;
      }
  }
  T.depth = std::max(M.depth, N.depth);
  T.status = (M.status == ModuleStatus::Complete && N.status == ModuleStatus::Complete) ? ModuleStatus::Complete
                                                                                       : ModuleStatus::Truncated;
  return T;
}

WeightModule parity_shift(const WeightModule& M) {
  const RootDatum& rd = M.alg->datum();
  WeightModule P = M;
  for (auto& p : P.parities) p ^= 1;
  for (int i = 0; i < rd.rank(); ++i)
    if (rd.parity(i)) {
      P.E[i] = P.E[i].scaled(Scalar(-1));
      P.F[i] = P.F[i].scaled(Scalar(-1));
    }
  return P;
}

WeightModule direct_sum(const WeightModule& M, const WeightModule& N) {
  const int m = M.dim(), n = N.dim(), r = M.alg->rank();
  WeightModule S;
  S.alg = M.alg;
  S.weights = M.weights;
  S.weights.insert(S.weights.end(), N.weights.begin(), N.weights.end());
  S.parities = M.parities;
  S.parities.insert(S.parities.end(), N.parities.begin(), N.parities.end());
  S.E.assign(r, SMat(m + n, m + n));
  S.F.assign(r, SMat(m + n, m + n));
  for (int i = 0; i < r; ++i) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        S.E[i](a, b) = M.E[i](a, b);
        S.F[i](a, b) = M.F[i](a, b);
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        S.E[i](m + a, m + b) = N.E[i](a, b);
        S.F[i](m + a, m + b) = N.F[i](a, b);
      }
  }
  S.status = (M.status == ModuleStatus::Complete && N.status == ModuleStatus::Complete) ? ModuleStatus::Complete
                                                                                       : ModuleStatus::Truncated;
  return S;
}

Character character(const WeightModule& M) {
  Character c;
  for (auto& w : M.weights) c[w] += 1;
  return c;
}

Character supercharacter(const WeightModule& M) {
  Character c;
  for (int a = 0; a < M.dim(); ++a) {
    auto& v = c[M.weights[a]];
    v += M.parities[a] ? -1 : 1;
    if (v == 0) c.erase(M.weights[a]);
  }
  return c;
}

Character char_product(const Character& a, const Character& b) {
  Character c;
  for (auto& [w1, c1] : a)
    for (auto& [w2, c2] : b) {
      RatVec w = w1 + w2;
      auto& v = c[w];
      v += c1 * c2;
      if (v == 0) c.erase(w);
    }
  return c;
}

namespace {

// Truncated series sum_g c_g e^{-g} over g in Z_+Pi with ht(g) <= h.
using Series = std::map<Grade, long long>;

Series series_mul(const Series& a, const Series& b, int h) {
  Series c;
  for (auto& [g1, c1] : a)
    for (auto& [g2, c2] : b) {
      Grade g = g1 + g2;
      if (height(g) > h) continue;
      c[g] += c1 * c2;
    }
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

// prod_odd (1 + e^{-a}) / prod_even (1 - e^{-b}), truncated.
Series kac_series(const RootDatum& rd, int h) {
  Series s{{Grade{}, 1}};
  for (auto& a : rd.pos_odd()) {
    Series f{{Grade{}, 1}, {a, 1}};
    s = series_mul(s, f, h);
  }
  for (auto& b : rd.pos_even()) {
    Series f{{Grade{}, 1}};
    Grade g = b;
    while (height(g) <= h) {
      f[g] = 1;
      g = g + b;
    }
    s = series_mul(s, f, h);
  }
  return s;
}

}  // namespace

Character kac_verma_character(const RootDatum& rd, const RatVec& lambda, int height_cut) {
  Character c;
  for (auto& [g, v] : kac_series(rd, height_cut)) c[lambda - to_ratvec(g, rd.rank())] = v;
  return c;
}

bool is_even_dominant(const RootDatum& rd, const RatVec& lambda) { return rd.in_lambda_plus(lambda); }

Character kac_typical_character(const RootDatum& rd, const RatVec& lambda, int height_cut) {
  if (!rd.is_typical(lambda)) throw std::invalid_argument("weight " + rd.weight_string(lambda) + " is atypical");
  if (!is_even_dominant(rd, lambda))
    throw std::invalid_argument("weight " + rd.weight_string(lambda) + " is not dominant integral for the even part");
  const int r = rd.rank();
  Series alt;
  const RatVec lr = lambda + rd.rho();
  for (std::size_t w = 0; w < rd.weyl().size(); ++w) {
    RatVec x = rd.apply(rd.weyl()[w], lr) - rd.rho();
    RatVec gap = lambda - x;
    Grade g = to_grade(gap);
    if (!nonneg(g)) throw std::logic_error("Weyl shift left the cone below lambda");
    if (height(g) > height_cut) continue;
    alt[g] += (rd.weyl_lengths()[w] % 2) ? -1 : 1;
  }
  Series s = series_mul(kac_series(rd, height_cut), alt, height_cut);
  Character c;
  for (auto& [g, v] : s) c[lambda - to_ratvec(g, r)] = v;
  return c;
}

std::string check_module_relations(const WeightModule& M, int h) {
  const Algebra& A = *M.alg;
  const RootDatum& rd = A.datum();
  const int r = A.rank(), n = M.dim();
  std::ostringstream err;
  // F leaves a truncated module from its deepest level, so skip those columns.
  auto bottom = [&](int b) {
    if (M.status != ModuleStatus::Truncated || !M.has_highest) return false;
    Rat ht = 0;
    for (int k = 0; k < r; ++k) ht += M.highest[k] - M.weights[b][k];
    return ht >= Rat(M.depth);
  };
  for (int i = 0; i < r; ++i) {
    // grading: E_i raises the weight by alpha_i
    RatVec ai = to_ratvec(grade_unit(i), r);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!M.E[i](a, b).is_zero() && M.weights[a] != M.weights[b] + ai) err << "E" << i + 1 << " breaks the grading; ";
        if (!M.F[i](a, b).is_zero() && M.weights[a] + ai != M.weights[b]) err << "F" << i + 1 << " breaks the grading; ";
      }
    for (int j = 0; j < r; ++j) {
      SMat ef = M.E[i] * M.F[j], fe = M.F[j] * M.E[i];
      SMat lhs = (rd.parity(i) && rd.parity(j)) ? ef + fe : ef - fe;
      SMat rhs(n, n);
      if (i == j) rhs = (M.K(grade_unit(i)) - M.K(scaled(grade_unit(i), -1))).scaled(A.qq_minus(i).inverse());
      bool ok = true;
      for (int b = 0; b < n && ok; ++b) {
        if (bottom(b)) continue;
        for (int a = 0; a < n; ++a)
          if (!(lhs(a, b) == rhs(a, b))) ok = false;
      }
      if (!ok) err << "[E" << i + 1 << ",F" << j + 1 << "] fails; ";
    }
  }
  // Reduced words act as products of their letters.
  for (const Grade& mu : positive_weights_up_to(r, h)) {
    std::vector<int> w;
    for (int i = 0; i < r; ++i) w.insert(w.end(), mu[i], i);
    std::sort(w.begin(), w.end());
    do {
      SMat pf = SMat::identity(n), pe = SMat::identity(n);
      for (int x : w) {
        pf = pf * M.F[x];
        pe = pe * M.E[x];
      }
      if (!(M.action(A.F_word(w)) == pf)) err << "F-word relation fails at height " << height(mu) << "; ";
      if (!(M.action(A.E_word(w)) == pe)) err << "E-word relation fails at height " << height(mu) << "; ";
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return err.str();
}

}  // namespace qsuper
