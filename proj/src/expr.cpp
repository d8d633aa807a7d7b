#include "qsuper/expr.hpp"

#include <cctype>
#include <limits>

namespace qsuper {

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

// A scalar multiple of one K, the only elements with an inverse here.
bool as_torus_monomial(const Element& e, Grade* k, Scalar* c) {
  if (e.size() != 1) return false;
  const auto& [m, v] = *e.terms().begin();
  if (!is_zero(m.fw) || !is_zero(m.ew)) return false;
  *k = m.k;
  *c = v;
  return true;
}

class Parser {
 public:
  Parser(const Algebra& A, const std::string& s) : A_(A), s_(s) {}

  Element run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Element e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void need(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }
  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  long long integer() {
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (!peek_digit()) throw ParseError("expected an integer", start);
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::numeric_limits<long long>::max() - 9) / 10) throw ParseError("integer too large", start);
      v = v * 10 + (s_[pos_++] - '0');
    }
    return neg ? -v : v;
  }
  // Unsigned numeral directly at the cursor (no whitespace), for indices.
  int index() {
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected a generator index", start);
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000) throw ParseError("generator index out of range", start);
    }
    if (v < 1 || v > A_.rank())
      throw ParseError("unknown generator index " + std::to_string(v) + " (rank " + std::to_string(A_.rank()) + ")", start);
    return static_cast<int>(v - 1);
  }

  Element expr() {
    Element acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Element term() {
    Element acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Element d = unary();
        Grade k;
        Scalar c;
        if (!as_torus_monomial(d, &k, &c) || !is_zero(k) || c.is_zero())
          throw ParseError("can only divide by a nonzero scalar", at);
        acc *= c.inverse();
      } else {
        return acc;
      }
    }
  }

  Element unary() {
    if (eat('-')) return -unary();
    return power();
  }

  Element power() {
    std::size_t at = 0;
    skip();
    bool is_q = pos_ < s_.size() && s_[pos_] == 'q';
    Element base = atom();
    while (eat('^')) {
      at = pos_;
      Rat e;
      if (eat('(')) {
        long long a = integer();
        long long b = eat('/') ? integer() : 1;
        need(')');
        if (b == 0) throw ParseError("zero denominator in exponent", at);
        e = Rat(a, b);
      } else {
        e = Rat(integer());
      }
      if (e.denominator() != 1) {
        if (!is_q) throw ParseError("fractional exponent on something other than q", at);
        try {
          base = A_.scalar(A_.datum().qpow(e));
        } catch (const std::domain_error&) {
          throw ParseError("q exponent not representable for this root datum", at);
        }
        is_q = false;
        continue;
      }
      base = raise(base, e.numerator(), at);
      is_q = false;
    }
    return base;
  }

  Element raise(const Element& b, long long n, std::size_t at) {
    if (n > 64 || n < -64) throw ParseError("exponent too large", at);
    Element base = b;
    if (n < 0) {
      Grade k;
      Scalar c;
      if (!as_torus_monomial(b, &k, &c) || c.is_zero()) throw ParseError("negative power of a non-invertible element", at);
      base = A_.K(-k) * c.inverse();
      n = -n;
    }
    Element out = A_.one();
    for (long long i = 0; i < n; ++i) out = out * base;
    return out;
  }

  Element atom() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", at);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = integer();
      return A_.scalar(Scalar(v));
    }
    if (c == '(') {
      ++pos_;
      Element e = expr();
      need(')');
      return e;
    }
    ++pos_;
    switch (c) {
      case 'q': return A_.scalar(A_.datum().qpow(Rat(1)));
      case 'E': return A_.E(index());
      case 'F': return A_.F(index());
      case 'K': {
        need('[');
        Grade k{};
        int n = 0;
        do {
          std::size_t p = pos_;
          long long v = integer();
          if (n == kMaxRank) throw ParseError("too many K exponents", p);
          if (v > 1000000 || v < -1000000) throw ParseError("K exponent too large", p);
          k[n++] = static_cast<int>(v);
        } while (eat(','));
        need(']');
        if (n != A_.rank())
          throw ParseError("K takes " + std::to_string(A_.rank()) + " exponents, got " + std::to_string(n), at);
        return A_.K(k);
      }
      default: throw ParseError(std::string("unexpected '") + c + "'", at);
    }
  }

  const Algebra& A_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(const Algebra& A, const std::string& text) { return Parser(A, text).run(); }

Scalar parse_scalar(const Algebra& A, const std::string& text) {
  Element e = parse_expression(A, text);
  if (e.is_zero()) return Scalar();
  Grade k;
  Scalar c;
  if (!as_torus_monomial(e, &k, &c) || !is_zero(k)) throw ParseError("not a scalar", 0);
  return c;
}

std::string render_scalar(const Algebra& A, const Scalar& s) { return s.render(A.datum().D()); }

std::string render_monomial(const Algebra& A, const Monomial& m) {
  std::string out;
  auto add = [&](const std::string& f) {
    if (!out.empty()) out += "*";
    out += f;
  };
  for (int l : A.block(m.fw).fwords[m.fi]) add("F" + std::to_string(l + 1));
  if (!is_zero(m.k)) {
    std::string k = "K[";
    for (int i = 0; i < A.rank(); ++i) k += (i ? "," : "") + std::to_string(m.k[i]);
    add(k + "]");
  }
  for (int l : A.block(m.ew).ewords[m.ei]) add("E" + std::to_string(l + 1));
  return out.empty() ? "1" : out;
}

std::string render(const Element& e) {
  if (e.is_zero() || !e.algebra()) return "0";
  const Algebra& A = *e.algebra();
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    // c * v^k needs no parentheses; anything else is wrapped.
    bool neg = c.is_monomial() && c.num().lead() < 0;
    Scalar mag = neg ? -c : c;
    std::string coef;
    if (!mag.is_one()) coef = mag.is_monomial() ? render_scalar(A, mag) : "(" + render_scalar(A, mag) + ")";
    std::string mono = render_monomial(A, m), t;
    if (mono == "1") t = coef.empty() ? "1" : coef;
    else t = coef.empty() ? mono : coef + "*" + mono;
    if (out.empty()) out = (neg ? "-" : "") + t;
    else out += (neg ? " - " : " + ") + t;
  }
  return out;
}

}  // namespace qsuper
