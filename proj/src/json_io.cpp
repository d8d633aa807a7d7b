#include "qsuper/json_io.hpp"

#include <charconv>
#include <stdexcept>

#include "qsuper/expr.hpp"

namespace qsuper {

namespace {

long long parse_ll(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) throw std::invalid_argument("bad rational '" + std::string(s) + "'");
  return v;
}

json word_to_json(const std::vector<int>& w) {
  json j = json::array();
  for (int l : w) j.push_back(l + 1);
  return j;
}

json grade_to_json(const Grade& g, int rank) {
  json j = json::array();
  for (int i = 0; i < rank; ++i) j.push_back(g[i]);
  return j;
}

Grade grade_from_json(const json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank) throw std::invalid_argument("exponent has the wrong arity");
  Grade g{};
  for (int i = 0; i < rank; ++i) g[i] = j[i].get<int>();
  return g;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_ll(s));
  long long d = parse_ll(std::string_view(s).substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rat(parse_ll(std::string_view(s).substr(0, slash)), d);
}

std::string rat_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

json scalar_to_json(const Algebra& A, const Scalar& s) { return render_scalar(A, s); }

json ratvec_to_json(const RatVec& v) {
  json j = json::array();
  for (const Rat& r : v) j.push_back(rat_string(r));
  return j;
}

RatVec ratvec_from_json(const json& j) {
  RatVec v;
  for (const auto& x : j) v.push_back(x.is_number_integer() ? Rat(x.get<long long>()) : parse_rat(x.get<std::string>()));
  return v;
}

json element_to_json(const Element& e) {
  json terms = json::array();
  if (e.algebra()) {
    const Algebra& A = *e.algebra();
    for (const auto& [m, c] : e.terms())
      terms.push_back({{"coeff", scalar_to_json(A, c)},
                       {"f_word", word_to_json(A.block(m.fw).fwords[m.fi])},
                       {"k", grade_to_json(m.k, A.rank())},
                       {"e_word", word_to_json(A.block(m.ew).ewords[m.ei])}});
  }
  return {{"expr", render(e)}, {"terms", terms}};
}

Element element_from_json(const Algebra& A, const json& j) {
  if (j.contains("terms")) {
    Element out(&A);
    for (const auto& t : j.at("terms")) {
      std::vector<int> fw, ew;
      for (const auto& l : t.at("f_word")) fw.push_back(l.get<int>() - 1);
      for (const auto& l : t.at("e_word")) ew.push_back(l.get<int>() - 1);
      for (int l : fw)
        if (l < 0 || l >= A.rank()) throw std::invalid_argument("generator index out of range");
      for (int l : ew)
        if (l < 0 || l >= A.rank()) throw std::invalid_argument("generator index out of range");
      Scalar c = parse_scalar(A, t.at("coeff").get<std::string>());
      out += A.F_word(fw) * A.K(grade_from_json(t.at("k"), A.rank())) * A.E_word(ew) * c;
    }
    return out;
  }
  return parse_expression(A, j.at("expr").get<std::string>());
}

json laurent_to_json(const Algebra& A, const LaurentInvariant& h) {
  json j = json::array();
  for (const auto& [mu, c] : h) j.push_back({grade_to_json(mu, A.rank()), scalar_to_json(A, c)});
  return j;
}

LaurentInvariant laurent_from_json(const Algebra& A, const json& j) {
  LaurentInvariant h;
  for (const auto& p : j) {
    Scalar c = parse_scalar(A, p.at(1).get<std::string>());
    if (c.is_zero()) continue;
    Scalar& slot = h[grade_from_json(p.at(0), A.rank())];
    slot += c;
  }
  for (auto it = h.begin(); it != h.end();) it = it->second.is_zero() ? h.erase(it) : std::next(it);
  return h;
}

json character_to_json(const Character& c) {
  json j = json::array();
  for (const auto& [w, m] : c)
    if (m != 0) j.push_back({ratvec_to_json(w), m});
  return j;
}

json datum_to_json(const RootDatum& rd) {
  const int r = rd.rank();
  json gram = json::array();
  for (const auto& row : rd.gram()) gram.push_back(ratvec_to_json(row));
  json weyl_len = rd.weyl_lengths();
  auto roots = [&](const std::vector<Grade>& v) {
    json j = json::array();
    for (const Grade& g : v) j.push_back(grade_to_json(g, r));
    return j;
  };
  json parities = json::array();
  json d = json::array();
  for (int i = 0; i < r; ++i) {
    parities.push_back(rd.parity(i));
    d.push_back(rat_string(rd.d(i)));
  }
  return {{"name", rd.name()},
          {"rank", r},
          {"odd_index", rd.odd_index() + 1},
          {"parities", parities},
          {"gram", gram},
          {"d", d},
          {"v_power", rd.D()},
          {"positive_even_roots", roots(rd.pos_even())},
          {"positive_odd_roots", roots(rd.pos_odd())},
          {"positive_isotropic_roots", roots(rd.pos_iso())},
          {"rho", ratvec_to_json(rd.rho())},
          {"weyl_order", rd.weyl().size()},
          {"ambient_labels", rd.ambient_labels()},
          {"degenerate", rd.degenerate()}};
}

json module_to_json(const WeightModule& M) {
  json basis = json::array();
  for (int a = 0; a < M.dim(); ++a) basis.push_back({{"weight", ratvec_to_json(M.weights[a])}, {"parity", M.parities[a]}});
  json out{{"dim", M.dim()}, {"status", status_name(M.status)}, {"basis", basis}};
  if (M.has_highest) out["highest_weight"] = ratvec_to_json(M.highest);
  return out;
}

json envelope(const RootDatum& rd, const std::string& command, json result) {
  return {{"schema_version", kJsonSchemaVersion}, {"type", rd.name()}, {"command", command}, {"result", std::move(result)}};
}

}  // namespace qsuper
