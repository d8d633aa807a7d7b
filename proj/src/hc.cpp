#include "qsuper/hc.hpp"

#include <sstream>
#include <stdexcept>

namespace qsuper {

namespace {

void add_to(LaurentInvariant& h, const Grade& mu, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = h.emplace(mu, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) h.erase(it);
  }
}

Grade weyl_image(const RootDatum& rd, const RatMat& w, const Grade& mu) {
  RatVec x = rd.apply(w, to_ratvec(mu, rd.rank()));
  for (auto& c : x)
    if (c.denominator() != 1) throw std::logic_error("Weyl image left the root lattice");
  return to_grade(x);
}

Scalar coeff(const LaurentInvariant& h, const Grade& mu) {
  auto it = h.find(mu);
  return it == h.end() ? Scalar() : it->second;
}

// Representative of the line mu + Z alpha and the position of mu on it.
std::pair<Grade, int> line_of(const Grade& mu, const Grade& alpha) {
  int p = 0;
  while (alpha[p] == 0) ++p;
  int n = mu[p] / alpha[p];
  if (mu[p] - n * alpha[p] < 0) --n;
  return {mu - scaled(alpha, n), n};
}

std::string wstr(const RootDatum& rd, const Grade& g) { return rd.weight_string(to_ratvec(g, rd.rank())); }

WsupResult fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

LaurentInvariant cartan_part(const Element& z) {
  LaurentInvariant h;
  for (const auto& [m, c] : z.terms()) {
    if (m.fw != m.ew) throw std::invalid_argument("element has a term of nonzero Q-degree");
    if (is_zero(m.fw)) add_to(h, m.k, c);
  }
  return h;
}

LaurentInvariant gamma_shift(const RootDatum& rd, const LaurentInvariant& h, const RatVec& lambda) {
  LaurentInvariant out;
  for (const auto& [mu, c] : h) add_to(out, mu, c * rd.qpow(rd.form(lambda, mu)));
  return out;
}

LaurentInvariant hc_project(const Element& z) {
  if (!z.algebra()) return {};
  const RootDatum& rd = z.algebra()->datum();
  return gamma_shift(rd, cartan_part(z), scaled(rd.rho(), Rat(-1)));
}

Element to_element(const Algebra& A, const LaurentInvariant& h) {
  Element e(&A);
  for (const auto& [mu, c] : h) e += A.K(mu) * c;
  return e;
}

LaurentInvariant laurent_mul(const LaurentInvariant& a, const LaurentInvariant& b) {
  LaurentInvariant out;
  for (const auto& [m1, c1] : a)
    for (const auto& [m2, c2] : b) add_to(out, m1 + m2, c1 * c2);
  return out;
}

LaurentInvariant weyl_symmetrize(const RootDatum& rd, const LaurentInvariant& h) {
  LaurentInvariant out;
  for (const auto& w : rd.weyl())
    for (const auto& [mu, c] : h) add_to(out, weyl_image(rd, w, mu), c);
  return out;
}

WsupResult wsup_membership(const RootDatum& rd, const LaurentInvariant& h, WsupMode mode) {
  const int r = rd.rank();
  for (const auto& [mu, c] : h)
    if (!rd.in_2lambda_zphi(to_ratvec(mu, r))) return fail("exponent " + wstr(rd, mu) + " is not in 2 Lambda");
  for (std::size_t g = 0; g < rd.weyl_generators().size(); ++g)
    for (const auto& [mu, c] : h) {
      Grade w = weyl_image(rd, rd.weyl_generators()[g], mu);
      if (coeff(h, w) != c)
        return fail("not invariant under s" + std::to_string(g + 1) + " at " + wstr(rd, mu));
    }
  for (const Grade& alpha : rd.pos_iso()) {
    if (mode == WsupMode::LineSums) {
      std::map<Grade, Scalar> sums;
      for (const auto& [mu, c] : h) {
        if (rd.form(mu, alpha) == Rat(0)) continue;
        sums[line_of(mu, alpha).first] += c;
      }
      for (const auto& [nu, s] : sums)
        if (!s.is_zero())
          return fail("coefficients along " + wstr(rd, nu) + " + Z" + wstr(rd, alpha) + " do not sum to zero");
    } else {
      // D_alpha(h) along each line as a Laurent polynomial in t = K_alpha,
      // reduced modulo t^2 - 1.
      std::map<Grade, std::map<int, Scalar>> lines;
      for (const auto& [mu, c] : h) {
        Rat d = rd.form(mu, alpha);
        if (d == Rat(0)) continue;
        auto [nu, n] = line_of(mu, alpha);
        lines[nu][n] += c * Scalar::rational(d);
      }
      for (auto& [nu, poly] : lines) {
        const int lo = poly.begin()->first, hi = poly.rbegin()->first;
        std::vector<Scalar> p(hi - lo + 1);
        for (auto& [n, c] : poly) p[n - lo] = c;
        for (int k = static_cast<int>(p.size()) - 1; k >= 2; --k) {
          p[k - 2] += p[k];
          p[k] = Scalar();
        }
        bool zero = p[0].is_zero() && (p.size() < 2 || p[1].is_zero());
        if (!zero)
          return fail("D_" + wstr(rd, alpha) + " is not divisible by K_alpha^2 - 1 on the line through " + wstr(rd, nu));
      }
    }
  }
  return {};
}

bool iota(const RootDatum& rd, const LaurentInvariant& h, Character* out, std::string* why) {
  Character c;
  for (const auto& [mu, a] : h) {
    if (!a.is_rational_constant() || a.to_rat().denominator() != 1) {
      if (why) *why = "coefficient of K" + wstr(rd, mu) + " is not an integer";
      return false;
    }
    c[scaled(to_ratvec(mu, rd.rank()), Rat(-1, 2))] += a.to_rat().numerator();
  }
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  if (out) *out = std::move(c);
  return true;
}

bool sch_compare(const WeightModule& M, const Element& z) {
  Character c;
  if (!iota(M.alg->datum(), hc_project(z), &c)) return false;
  return c == supercharacter(M);
}

Scalar central_eigenvalue(const RootDatum& rd, const RatVec& lambda, const Element& z) {
  Scalar s;
  for (const auto& [mu, c] : cartan_part(z)) s += c * rd.qpow(rd.form(lambda, mu));
  return s;
}

LaurentInvariant k_lambda(const RootDatum& rd, const Grade& lambda) {
  LaurentInvariant base{{lambda, Scalar(1)}};
  for (const Grade& a : rd.pos_iso()) {
    LaurentInvariant f{{Grade{}, Scalar(1)}, {scaled(a, -2), Scalar(-1)}};
    base = laurent_mul(base, f);
  }
  return weyl_symmetrize(rd, base);
}

}  // namespace qsuper
