#include "qsuper/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsuper {

RatVec to_ratvec(const Grade& g, int rank) {
  RatVec v(rank);
  for (int i = 0; i < rank; ++i) v[i] = g[i];
  return v;
}

Grade to_grade(const RatVec& v) {
  if (v.size() > static_cast<std::size_t>(kMaxRank)) throw std::domain_error("vector too long");
  Grade g{};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].denominator() != 1) throw std::domain_error("weight is not in the root lattice");
    g[i] = static_cast<int>(v[i].numerator());
  }
  return g;
}

Grade grade_unit(int i) {
  Grade g{};
  g[i] = 1;
  return g;
}

Grade operator+(const Grade& a, const Grade& b) {
  Grade r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = a[i] + b[i];
  return r;
}
Grade operator-(const Grade& a, const Grade& b) {
  Grade r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = a[i] - b[i];
  return r;
}
Grade operator-(const Grade& a) {
  Grade r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = -a[i];
  return r;
}
Grade scaled(const Grade& a, int k) {
  Grade r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = a[i] * k;
  return r;
}
RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
RatVec scaled(const RatVec& a, const Rat& k) {
  RatVec r(a);
  for (auto& x : r) x *= k;
  return r;
}
bool is_zero(const Grade& g) {
  return std::all_of(g.begin(), g.end(), [](int x) { return x == 0; });
}
int height(const Grade& g) { return std::accumulate(g.begin(), g.end(), 0); }
bool nonneg(const Grade& g) {
  return std::all_of(g.begin(), g.end(), [](int x) { return x >= 0; });
}


std::vector<Grade> positive_weights_up_to(int rank, int h) {
  std::vector<Grade> out;
  Grade g{};
  auto rec = [&](auto& self, int i, int left) -> void {
    if (i == rank) {
      if (!is_zero(g)) out.push_back(g);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      g[i] = c;
      self(self, i + 1, left - c);
    }
    g[i] = 0;
  };
  rec(rec, 0, h);
  return out;
}

namespace {

RatVec unit(int dim, int i, Rat c = 1) {
  RatVec v(dim, Rat(0));
  v[i] = c;
  return v;
}

RatVec comb(int dim, std::initializer_list<std::pair<int, Rat>> terms) {
  RatVec v(dim, Rat(0));
  for (auto& [i, c] : terms) v[i] += c;
  return v;
}

// Solves cols * x = b for x (least-index particular solution); returns false
// when the system is inconsistent.
bool solve(const std::vector<RatVec>& cols, const RatVec& b, RatVec& x) {
  const int rows = static_cast<int>(b.size());
  const int n = static_cast<int>(cols.size());
  RatMat a(rows, RatVec(n + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = cols[c][r];
    a[r][n] = b[r];
  }
  std::vector<int> pivcol;
  int row = 0;
  for (int c = 0; c < n && row < rows; ++c) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    Rat inv = Rat(1) / a[row][c];
    for (auto& e : a[row]) e *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (int k = 0; k <= n; ++k) a[r][k] -= f * a[row][k];
    }
    pivcol.push_back(c);
    ++row;
  }
  for (int r = row; r < rows; ++r)
    if (a[r][n] != 0) return false;
  x.assign(n, Rat(0));
  for (int r = 0; r < row; ++r) x[pivcol[r]] = a[r][n];
  return true;
}

std::string mat_key(const RatMat& m) {
  std::ostringstream os;
  for (auto& r : m)
    for (auto& e : r) os << e << ',';
  return os.str();
}

RatMat matmul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size();
  RatMat c(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

RootDatum RootDatum::make(const std::string& descriptor) {
  std::string d;
  for (char ch : descriptor)
    if (!isspace(static_cast<unsigned char>(ch))) d += ch;
  static const std::regex two(R"(^([ABD])\((\d+),(\d+)\)$)");
  static const std::regex one(R"(^([CFG])\((\d+)\)$)");
  static const std::regex d21(R"(^D\(2,1;(-?\d+(?:/\d+)?)\)$)");
  std::smatch mt;
  RootDatum rd;
  std::vector<RatVec> simple, even, odd;
  RatVec kernel;

  if (std::regex_match(d, mt, d21)) {
    Rat a;
    try {
      a = parse_rat(mt[1]);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad parameter in " + descriptor);
    }
    if (a == 0 || a == -1) throw std::invalid_argument("D(2,1;a) requires a not in {0,-1}");
    rd.family_ = Family::D21;
    std::ostringstream nm;
    nm << "D(2,1;" << a.numerator();
    if (a.denominator() != 1) nm << "/" << a.denominator();
    nm << ")";
    rd.name_ = nm.str();
    rd.amb_labels_ = {"e1", "e2", "e3"};
    rd.amb_gram_ = {{-(Rat(1) + a), 0, 0}, {0, 1, 0}, {0, 0, a}};
    simple = {comb(3, {{0, 1}, {1, 1}, {2, 1}}), unit(3, 1, -2), unit(3, 2, -2)};
    even = {unit(3, 0, 2), unit(3, 1, -2), unit(3, 2, -2)};
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) odd.push_back(comb(3, {{0, 1}, {1, s2}, {2, s3}}));
  } else if (std::regex_match(d, mt, two)) {
    const char f = mt[1].str()[0];
    const int m = std::stoi(mt[2]), n = std::stoi(mt[3]);
    rd.m_ = m;
    rd.n_ = n;
    rd.name_ = std::string(1, f) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    if (f == 'A') {
      if (m == n && m <= 1) throw std::invalid_argument(rd.name_ + " is not supported");
      rd.family_ = Family::A;
      const int dim = m + n + 2;
      for (int i = 0; i <= m; ++i) rd.amb_labels_.push_back("e" + std::to_string(i + 1));
      for (int j = 0; j <= n; ++j) rd.amb_labels_.push_back("d" + std::to_string(j + 1));
      rd.amb_gram_.assign(dim, RatVec(dim, Rat(0)));
      for (int i = 0; i < dim; ++i) rd.amb_gram_[i][i] = i <= m ? 1 : -1;
      for (int i = 0; i + 1 < dim; ++i) simple.push_back(comb(dim, {{i, 1}, {i + 1, -1}}));
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
          bool isodd = (i <= m) != (j <= m);
          (isodd ? odd : even).push_back(comb(dim, {{i, 1}, {j, -1}}));
        }
      kernel.assign(dim, Rat(0));
      for (int i = 0; i < dim; ++i) kernel[i] = i <= m ? 1 : -1;
      rd.degenerate_ = (m == n);
      rd.natural_amb_ = unit(dim, 0);
    } else if (f == 'B') {
      if (n < 1) throw std::invalid_argument("B(m,n) requires n >= 1");
      rd.family_ = Family::B;
      const int dim = m + n;
      for (int j = 0; j < n; ++j) rd.amb_labels_.push_back("d" + std::to_string(j + 1));
      for (int i = 0; i < m; ++i) rd.amb_labels_.push_back("e" + std::to_string(i + 1));
      rd.amb_gram_.assign(dim, RatVec(dim, Rat(0)));
      for (int i = 0; i < dim; ++i) rd.amb_gram_[i][i] = i < n ? -1 : 1;
      for (int i = 0; i + 1 < dim; ++i) simple.push_back(comb(dim, {{i, 1}, {i + 1, -1}}));
      simple.push_back(unit(dim, dim - 1));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          even.push_back(comb(dim, {{i, 1}, {j, -1}}));
          even.push_back(comb(dim, {{i, 1}, {j, 1}}));
        }
        even.push_back(unit(dim, i, 2));
      }
      for (int k = n; k < dim; ++k) {
        for (int l = k + 1; l < dim; ++l) {
          even.push_back(comb(dim, {{k, 1}, {l, -1}}));
          even.push_back(comb(dim, {{k, 1}, {l, 1}}));
        }
        even.push_back(unit(dim, k));
      }
      for (int p = 0; p < n; ++p) {
        for (int q = n; q < dim; ++q) {
          odd.push_back(comb(dim, {{p, 1}, {q, -1}}));
          odd.push_back(comb(dim, {{p, 1}, {q, 1}}));
        }
        odd.push_back(unit(dim, p));
      }
      rd.natural_amb_ = unit(dim, 0);
    } else {
      if (m < 2 || n < 1) throw std::invalid_argument("D(m,n) requires m >= 2, n >= 1");
      rd.family_ = Family::D;
      const int dim = m + n;
      for (int j = 0; j < n; ++j) rd.amb_labels_.push_back("d" + std::to_string(j + 1));
      for (int i = 0; i < m; ++i) rd.amb_labels_.push_back("e" + std::to_string(i + 1));
      rd.amb_gram_.assign(dim, RatVec(dim, Rat(0)));
      for (int i = 0; i < dim; ++i) rd.amb_gram_[i][i] = i < n ? -1 : 1;
      for (int i = 0; i + 1 < dim; ++i) simple.push_back(comb(dim, {{i, 1}, {i + 1, -1}}));
      simple.push_back(comb(dim, {{dim - 2, 1}, {dim - 1, 1}}));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          even.push_back(comb(dim, {{i, 1}, {j, -1}}));
          even.push_back(comb(dim, {{i, 1}, {j, 1}}));
        }
        even.push_back(unit(dim, i, 2));
      }
      for (int k = n; k < dim; ++k)
        for (int l = k + 1; l < dim; ++l) {
          even.push_back(comb(dim, {{k, 1}, {l, -1}}));
          even.push_back(comb(dim, {{k, 1}, {l, 1}}));
        }
      for (int p = 0; p < n; ++p)
        for (int q = n; q < dim; ++q) {
          odd.push_back(comb(dim, {{p, 1}, {q, -1}}));
          odd.push_back(comb(dim, {{p, 1}, {q, 1}}));
        }
      rd.natural_amb_ = unit(dim, 0);
    }
  } else if (std::regex_match(d, mt, one)) {
    const char f = mt[1].str()[0];
    const int k = std::stoi(mt[2]);
    rd.name_ = std::string(1, f) + "(" + std::to_string(k) + ")";
    if (f == 'C') {
      if (k < 2) throw std::invalid_argument("C(n) requires n >= 2");
      rd.family_ = Family::C;
      const int n = k - 1, dim = n + 1;
      rd.n_ = n;
      rd.amb_labels_.push_back("e");
      for (int j = 0; j < n; ++j) rd.amb_labels_.push_back("d" + std::to_string(j + 1));
      rd.amb_gram_.assign(dim, RatVec(dim, Rat(0)));
      for (int i = 0; i < dim; ++i) rd.amb_gram_[i][i] = i == 0 ? 1 : -1;
      for (int i = 0; i + 1 < dim; ++i) simple.push_back(comb(dim, {{i, 1}, {i + 1, -1}}));
      simple.push_back(unit(dim, dim - 1, 2));
      for (int i = 1; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
          even.push_back(comb(dim, {{i, 1}, {j, -1}}));
          even.push_back(comb(dim, {{i, 1}, {j, 1}}));
        }
        even.push_back(unit(dim, i, 2));
        odd.push_back(comb(dim, {{0, 1}, {i, -1}}));
        odd.push_back(comb(dim, {{0, 1}, {i, 1}}));
      }
      rd.natural_amb_ = unit(dim, 0);
    } else if (f == 'F') {
      if (k != 4) throw std::invalid_argument("unknown type " + rd.name_);
      rd.family_ = Family::F4;
      rd.amb_labels_ = {"d", "e1", "e2", "e3"};
      rd.amb_gram_ = {{-3, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
      const Rat h(1, 2);
      simple = {comb(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}}), unit(4, 3), comb(4, {{2, 1}, {3, -1}}),
                comb(4, {{1, 1}, {2, -1}})};
      even.push_back(unit(4, 0));
      for (int p = 1; p < 4; ++p) even.push_back(unit(4, p));
      for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          even.push_back(comb(4, {{i, 1}, {j, -1}}));
          even.push_back(comb(4, {{i, 1}, {j, 1}}));
        }
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1}) odd.push_back(comb(4, {{0, h}, {1, h * s1}, {2, h * s2}, {3, h * s3}}));
    } else {
      if (k != 3) throw std::invalid_argument("unknown type " + rd.name_);
      rd.family_ = Family::G3;
      rd.amb_labels_ = {"d", "e1", "e2"};
      rd.amb_gram_ = {{-2, 0, 0}, {0, 2, -1}, {0, -1, 2}};
      RatVec e1 = unit(3, 1), e2 = unit(3, 2), dl = unit(3, 0);
      RatVec e3 = scaled(e1 + e2, Rat(-1));
      simple = {dl + e3, e1, e2 - e1};
      even = {scaled(dl, Rat(2)), e1, e2, e2 + e1, e2 - e1, e1 - e3, e2 - e3};
      odd = {dl, dl + e1, dl - e1, dl + e2, dl - e2, dl + e3, dl - e3};
    }
  } else {
    throw std::invalid_argument("unrecognized root datum descriptor: " + descriptor);
  }
  rd.finish(simple, even, odd, kernel);
  return rd;
}

void RootDatum::finish(const std::vector<RatVec>& simple_amb, const std::vector<RatVec>& even_amb,
                       const std::vector<RatVec>& odd_amb, const RatVec& extra_kernel) {
  simple_amb_ = simple_amb;
  amb_kernel_ = extra_kernel;
  rank_ = static_cast<int>(simple_amb.size());
  if (rank_ > kMaxRank) throw std::invalid_argument("rank exceeds supported maximum");
  auto amb_form = [&](const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (amb_gram_[i][j] != 0) s += a[i] * amb_gram_[i][j] * b[j];
    return s;
  };
  gram_.assign(rank_, RatVec(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) gram_[i][j] = amb_form(simple_amb[i], simple_amb[j]);

  for (auto& r : even_amb) pos_even_.push_back(to_grade(from_ambient(r)));
  for (auto& r : odd_amb) pos_odd_.push_back(to_grade(from_ambient(r)));
  for (auto& r : pos_even_)
    if (!nonneg(r)) throw std::logic_error("even root not positive in " + name_);
  for (auto& r : pos_odd_)
    if (!nonneg(r)) throw std::logic_error("odd root not positive in " + name_);
  std::sort(pos_even_.begin(), pos_even_.end(),
            [](const Grade& a, const Grade& b) { return std::make_pair(height(a), a) < std::make_pair(height(b), b); });
  std::sort(pos_odd_.begin(), pos_odd_.end(),
            [](const Grade& a, const Grade& b) { return std::make_pair(height(a), a) < std::make_pair(height(b), b); });
  for (auto& r : pos_odd_)
    if (form(r, r) == 0) pos_iso_.push_back(r);

  odd_ = -1;
  for (int i = 0; i < rank_; ++i)
    if (std::find(pos_odd_.begin(), pos_odd_.end(), grade_unit(i)) != pos_odd_.end()) {
      if (odd_ >= 0) throw std::logic_error("more than one odd simple root");
      odd_ = i;
    }
  if (odd_ < 0) throw std::logic_error("no odd simple root");

  d_.resize(rank_);
  for (int i = 0; i < rank_; ++i) d_[i] = gram_[i][i] == 0 ? Rat(1) : gram_[i][i] / 2;

  long long D = 1;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) D = lcm_ll(D, (gram_[i][j] / 2).denominator());
  D_ = static_cast<int>(D);

  rho_.assign(rank_, Rat(0));
  for (auto& r : pos_even_)
    for (int i = 0; i < rank_; ++i) rho_[i] += Rat(r[i], 2);
  for (auto& r : pos_odd_)
    for (int i = 0; i < rank_; ++i) rho_[i] -= Rat(r[i], 2);

  if (degenerate_) {
    // gamma = sum_i d_i J_i alpha_i with J = (1, 2, ..., n+1, -n, ..., -1).
    const int half = (rank_ + 1) / 2;
    for (int i = 0; i < rank_; ++i) {
      int J = i < half ? i + 1 : -(rank_ - i);
      Rat c = d_[i] * J;
      relation_[i] = static_cast<int>(c.numerator());
    }
  }

  // Simple roots of the even positive system: indecomposable even roots.
  std::vector<Grade> even_simple;
  for (auto& r : pos_even_) {
    bool dec = false;
    for (auto& a : pos_even_) {
      Grade b = r - a;
      if (std::find(pos_even_.begin(), pos_even_.end(), b) != pos_even_.end()) {
        dec = true;
        break;
      }
    }
    if (!dec) even_simple.push_back(r);
  }
  for (auto& b : even_simple) {
    RatMat m(rank_, RatVec(rank_, Rat(0)));
    Rat bb = form(b, b);
    for (int j = 0; j < rank_; ++j) {
      // column j: image of alpha_j
      Rat c = Rat(2) * form_simple(b, j) / bb;
      for (int i = 0; i < rank_; ++i) m[i][j] = (i == j ? Rat(1) : Rat(0)) - c * b[i];
    }
    weyl_gens_.push_back(m);
  }
  RatMat id(rank_, RatVec(rank_, Rat(0)));
  for (int i = 0; i < rank_; ++i) id[i][i] = 1;
  std::set<std::string> seen{mat_key(id)};
  weyl_ = {id};
  weyl_len_ = {0};
  for (std::size_t head = 0; head < weyl_.size(); ++head) {
    for (auto& g : weyl_gens_) {
      RatMat w = matmul(g, weyl_[head]);
      if (seen.insert(mat_key(w)).second) {
        weyl_.push_back(w);
        weyl_len_.push_back(weyl_len_[head] + 1);
      }
    }
    if (weyl_.size() > 100000) throw std::logic_error("Weyl group too large");
  }
}

Rat RootDatum::form(const RatVec& a, const RatVec& b) const {
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j] != 0 && gram_[i][j] != 0) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

Rat RootDatum::form(const Grade& a, const Grade& b) const {
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j] != 0) s += gram_[i][j] * (a[i] * b[j]);
  }
  return s;
}

Rat RootDatum::form(const RatVec& a, const Grade& b) const {
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j] != 0) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

Rat RootDatum::form_simple(const Grade& a, int i) const {
  Rat s = 0;
  for (int j = 0; j < rank_; ++j) s += gram_[j][i] * a[j];
  return s;
}

RatVec RootDatum::apply(const RatMat& w, const RatVec& x) const {
  RatVec r(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) r[i] += w[i][j] * x[j];
  return r;
}

Rat RootDatum::coroot_pairing(const RatVec& lambda, const Grade& alpha) const {
  return Rat(2) * form(lambda, alpha) / form(alpha, alpha);
}

bool RootDatum::in_lambda(const RatVec& lambda) const {
  for (auto& a : pos_even_)
    if (coroot_pairing(lambda, a).denominator() != 1) return false;
  return true;
}

bool RootDatum::in_lambda_plus(const RatVec& lambda) const {
  for (auto& a : pos_even_) {
    Rat c = coroot_pairing(lambda, a);
    if (c.denominator() != 1 || c < 0) return false;
  }
  return true;
}

bool RootDatum::in_2lambda_zphi(const RatVec& lambda) const {
  for (auto& x : lambda)
    if (x.denominator() != 1) return false;
  for (auto& a : pos_even_) {
    Rat c = coroot_pairing(lambda, a);
    if (c.denominator() != 1 || c.numerator() % 2 != 0) return false;
  }
  return true;
}

bool RootDatum::is_typical(const RatVec& lambda) const {
  RatVec lr = lambda + rho_;
  for (auto& a : pos_iso_)
    if (form(lr, a) == 0) return false;
  return true;
}

bool RootDatum::leq(const RatVec& lambda, const RatVec& mu) const {
  for (int i = 0; i < rank_; ++i) {
    Rat d = mu[i] - lambda[i];
    if (d.denominator() != 1 || d < 0) return false;
  }
  return true;
}

Grade RootDatum::canonical_k(Grade k) const {
  if (!degenerate_) return k;
  const int c = k[0];
  if (c != 0)
    for (int i = 0; i < rank_; ++i) k[i] -= c * relation_[i];
  return k;
}

RatVec RootDatum::from_ambient(const RatVec& amb) const {
  std::vector<RatVec> cols = simple_amb_;
  if (!amb_kernel_.empty()) cols.push_back(amb_kernel_);
  RatVec x;
  if (!solve(cols, amb, x)) throw std::invalid_argument("vector is not in the span of the roots of " + name_);
  x.resize(rank_);
  return x;
}

bool RootDatum::has_natural_module() const { return !natural_amb_.empty() && !degenerate_; }

RatVec RootDatum::natural_highest_weight() const {
  if (!has_natural_module()) throw std::invalid_argument(name_ + " has no natural module");
  return from_ambient(natural_amb_);
}

std::string RootDatum::weight_string(const RatVec& w) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i].numerator();
    if (w[i].denominator() != 1) os << '/' << w[i].denominator();
  }
  os << ']';
  return os.str();
}

}  // namespace qsuper
