#include "qsuper/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "qsuper/acceptance.hpp"
#include "qsuper/cache.hpp"
#include "qsuper/center.hpp"
#include "qsuper/expr.hpp"
#include "qsuper/hc.hpp"
#include "qsuper/json_io.hpp"
#include "qsuper/pairing.hpp"

namespace qsuper {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string type, cache_dir, expr, left, right, form = "skew", module, weight, mode = "both";
  bool json = false, zflag = false, raw = false, super = false, timings = false;
  int cutoff = 4, k = 1, depth = 8;
};

RatVec parse_weight(const std::string& text, int rank) {
  RatVec w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(0, part.find_first_not_of(" \t"));
    part.erase(part.find_last_not_of(" \t") + 1);
    try {
      w.push_back(parse_rat(part));
    } catch (const std::exception&) {
      throw Usage("bad weight coordinate '" + part + "'");
    }
  }
  if (static_cast<int>(w.size()) != rank)
    throw Usage("weight '" + text + "' needs " + std::to_string(rank) + " coordinates");
  return w;
}

// Module named on the command line, validated before anything is built.
struct ModuleSpec {
  enum Kind { Vector, Trivial, Verma, Simple } kind = Vector;
  RatVec weight;
  bool dual = false;
};

ModuleSpec parse_module(const std::string& text, const RootDatum& rd) {
  ModuleSpec s;
  std::string t = text;
  if (t.rfind("dual:", 0) == 0) {
    s.dual = true;
    t = t.substr(5);
  }
  if (t == "vector" || t == "natural") {
    if (!rd.has_natural_module()) throw Usage(rd.name() + " has no natural module here");
    s.kind = ModuleSpec::Vector;
  } else if (t == "trivial") {
    s.kind = ModuleSpec::Trivial;
  } else if (t.rfind("verma:", 0) == 0 || t.rfind("simple:", 0) == 0) {
    bool verma = t[0] == 'v';
    s.kind = verma ? ModuleSpec::Verma : ModuleSpec::Simple;
    s.weight = parse_weight(t.substr(verma ? 6 : 7), rd.rank());
    try {
      require_half_lattice(rd, s.weight);
    } catch (const std::invalid_argument& e) {
      throw Usage(e.what());
    }
  } else {
    throw Usage("unknown module '" + text + "' (vector, trivial, verma:<w>, simple:<w>, dual:<module>)");
  }
  return s;
}

WeightModule build_module(const Algebra& A, const ModuleSpec& s, int depth) {
  WeightModule M;
  switch (s.kind) {
    case ModuleSpec::Vector: M = natural_module(A); break;
    case ModuleSpec::Trivial: M = trivial_module(A); break;
    case ModuleSpec::Verma: M = verma_module(A, s.weight, depth); break;
    case ModuleSpec::Simple: M = simple_module(A, s.weight, depth); break;
  }
  return s.dual ? dual_module(M) : M;
}

WeightModule finite_module(const Algebra& A, const ModuleSpec& s, int depth) {
  WeightModule M = build_module(A, s, depth);
  if (M.status != ModuleStatus::Complete)
    throw std::runtime_error(std::string("module is ") + status_name(M.status) + " at depth " + std::to_string(depth) +
                             "; a finite-dimensional module is required");
  return M;
}

std::string render_tensor(const TensorElement& t) {
  if (t.is_zero()) return "0";
  const Algebra& A = *t.algebra();
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    os << (first ? "" : "\n");
    first = false;
    os << "(" << render_scalar(A, c) << ") " << render_monomial(A, key.first) << " (x) " << render_monomial(A, key.second);
  }
  return os.str();
}

json tensor_to_json(const TensorElement& t) {
  json j = json::array();
  if (t.is_zero()) return j;
  const Algebra& A = *t.algebra();
  for (const auto& [key, c] : t.terms())
    j.push_back({{"coeff", scalar_to_json(A, c)},
                 {"left", render(Element(&A, key.first))},
                 {"right", render(Element(&A, key.second))}});
  return j;
}

std::string render_laurent_inv(const Algebra& A, const LaurentInvariant& h) { return render(to_element(A, h)); }

class Runner {
 public:
  Runner(const Flags& f, std::ostream& out, std::ostream& err) : f_(f), out_(out), err_(err) {}

  // Everything that can be checked without computing.
  void validate(const std::string& cmd) {
    if (cmd == "verify" && f_.type.empty()) return;
    if (f_.type.empty()) throw Usage("--type is required");
    try {
      rd_.emplace(RootDatum::make(f_.type));
    } catch (const std::invalid_argument& e) {
      throw Usage(e.what());
    }
    if (f_.cutoff < 0 || f_.cutoff > 12) throw Usage("--cutoff must lie in [0, 12]");
    if (f_.depth < 1 || f_.depth > 16) throw Usage("--depth must lie in [1, 16]");
    if (f_.k < 1 || f_.k > 4) throw Usage("--k must lie in [1, 4]");
    if (f_.form != "skew" && f_.form != "rosso") throw Usage("--form is skew or rosso");
    if (f_.mode != "both" && f_.mode != "lines" && f_.mode != "derivative")
      throw Usage("--mode is both, lines or derivative");
    if (!f_.module.empty()) mod_ = parse_module(f_.module, *rd_);
    if (!f_.weight.empty()) {
      RatVec w = parse_weight(f_.weight, rd_->rank());
      Grade g{};
      for (int i = 0; i < rd_->rank(); ++i) {
        if (w[i].denominator() != 1 || w[i] < Rat(0)) throw Usage("--weight must be a non-negative integer vector");
        g[i] = static_cast<int>(w[i].numerator());
      }
      if (height(g) > 12) throw Usage("--weight height above 12");
      weight_ = g;
    }
    bool need_expr = cmd == "normalize";
    bool need_pair = cmd == "pair";
    bool need_module = cmd == "casimir" || cmd == "z-element" || cmd == "character";
    bool need_input = cmd == "hc" || cmd == "check-central" || cmd == "check-wsup";
    if (need_expr && f_.expr.empty()) throw Usage("--expr is required");
    if (need_pair && (f_.left.empty() || f_.right.empty())) throw Usage("--left and --right are required");
    if (need_module && !mod_) throw Usage("--module is required");
    if (need_input && f_.expr.empty() && !mod_) throw Usage("--expr or --module is required");
    if (cmd == "dual-basis" && !weight_) throw Usage("--weight is required");
    alg_ = std::make_unique<Algebra>(*rd_);
    if (!f_.cache_dir.empty()) alg_->set_cache_dir(f_.cache_dir);
    // Parse expressions early so syntax errors surface before any work.
    auto pre = [&](const std::string& s) {
      if (!s.empty()) parsed_.emplace(s, parse_expression(*alg_, s));
    };
    pre(f_.expr);
    pre(f_.left);
    pre(f_.right);
  }

  int run(const std::string& cmd) {
    if (cmd == "root-datum") return root_datum();
    if (cmd == "normalize") return emit(cmd, element_to_json(parsed_.at(f_.expr)), render(parsed_.at(f_.expr)));
    if (cmd == "pair") return pair();
    if (cmd == "dual-basis") return dual_basis();
    if (cmd == "theta") {
      TensorElement t = quasi_r_matrix(*alg_, f_.cutoff);
      return emit(cmd, {{"cutoff", f_.cutoff}, {"terms", tensor_to_json(t)}}, render_tensor(t));
    }
    if (cmd == "casimir") {
      Element c = casimir(finite_module(*alg_, *mod_, f_.depth), f_.k);
      return emit(cmd, element_to_json(c), render(c));
    }
    if (cmd == "z-element") {
      Element z = z_element(finite_module(*alg_, *mod_, f_.depth));
      return emit(cmd, element_to_json(z), render(z));
    }
    if (cmd == "hc") {
      LaurentInvariant h = hc_project(input());
      return emit(cmd, laurent_to_json(*alg_, h), render_laurent_inv(*alg_, h));
    }
    if (cmd == "check-central") {
      std::string why;
      bool ok = is_central(input(), &why);
      emit(cmd, {{"central", ok}, {"reason", why}}, ok ? "central" : "not central: " + why);
      return ok ? kExitOk : kExitCheckFailed;
    }
    if (cmd == "check-wsup") return check_wsup();
    if (cmd == "character") {
      WeightModule M = build_module(*alg_, *mod_, f_.depth);
      Character c = f_.super ? supercharacter(M) : character(M);
      std::ostringstream os;
      os << "# " << status_name(M.status) << ", dim " << M.dim();
      for (const auto& [w, m] : c) os << "\n" << rd_->weight_string(w) << " " << m;
      return emit(cmd, {{"module", module_to_json(M)}, {f_.super ? "supercharacter" : "character", character_to_json(c)}},
                  os.str());
    }
    if (cmd == "verify") return verify();
    throw Usage("unknown command " + cmd);
  }

 private:
  int emit(const std::string& cmd, json result, const std::string& text) {
    if (f_.json) {
      out_ << envelope(*rd_, cmd, std::move(result)).dump(2) << "\n";
    } else {
      out_ << text << "\n";
    }
    return kExitOk;
  }

  Element input() {
    if (!f_.expr.empty()) return parsed_.at(f_.expr);
    WeightModule M = finite_module(*alg_, *mod_, f_.depth);
    return f_.zflag ? z_element(M) : casimir(M, f_.k);
  }

  int root_datum() {
    const RootDatum& rd = *rd_;
    std::ostringstream os;
    os << "type " << rd.name() << "\nrank " << rd.rank() << "\nodd simple root " << rd.odd_index() + 1
       << (rd.odd_isotropic() ? " (isotropic)" : " (non-isotropic)") << "\nq = v^" << rd.D() << "\ngram";
    for (const auto& row : rd.gram()) os << "\n  " << rd.weight_string(row);
    auto roots = [&](const char* label, const std::vector<Grade>& v) {
      os << "\n" << label << " (" << v.size() << ")";
      for (const Grade& g : v) os << " " << rd.weight_string(to_ratvec(g, rd.rank()));
    };
    roots("positive even roots", rd.pos_even());
    roots("positive odd roots", rd.pos_odd());
    roots("positive isotropic roots", rd.pos_iso());
    os << "\nrho " << rd.weight_string(rd.rho()) << "\nWeyl group order " << rd.weyl().size();
    return emit("root-datum", datum_to_json(rd), os.str());
  }

  int pair() {
    const Element &a = parsed_.at(f_.left), &b = parsed_.at(f_.right);
    Scalar s = f_.form == "rosso" ? rosso_form(*alg_, a, b) : skew_pair(*alg_, a, b);
    return emit("pair", {{"form", f_.form}, {"value", scalar_to_json(*alg_, s)}}, render_scalar(*alg_, s));
  }

  int dual_basis() {
    DualBases d = dual_bases(*alg_, *weight_);
    json j = json::array();
    std::ostringstream os;
    os << "# dim " << d.v.size();
    for (std::size_t i = 0; i < d.v.size(); ++i) {
      j.push_back({{"v", element_to_json(d.v[i])}, {"u", element_to_json(d.u[i])}});
      os << "\nv" << i + 1 << " = " << render(d.v[i]) << "\nu" << i + 1 << " = " << render(d.u[i]);
    }
    return emit("dual-basis", {{"weight", rd_->weight_string(to_ratvec(*weight_, rd_->rank()))}, {"pairs", j}}, os.str());
  }

  int check_wsup() {
    Element e = input();
    LaurentInvariant h = f_.raw ? cartan_part(e) : hc_project(e);
    json rows = json::array();
    std::ostringstream os;
    bool ok = true;
    for (auto [name, mode] : {std::pair{"lines", WsupMode::LineSums}, std::pair{"derivative", WsupMode::Derivative}}) {
      if (f_.mode != "both" && f_.mode != name) continue;
      WsupResult r = wsup_membership(*rd_, h, mode);
      ok = ok && r.pass;
      rows.push_back({{"mode", name}, {"pass", r.pass}, {"reason", r.reason}});
      os << (os.tellp() ? "\n" : "") << name << ": " << (r.pass ? "pass" : "fail: " + r.reason);
    }
    emit("check-wsup", {{"invariant", laurent_to_json(*alg_, h)}, {"modes", rows}, {"pass", ok}}, os.str());
    return ok ? kExitOk : kExitCheckFailed;
  }

  int verify() {
    AcceptanceOptions opt;
    opt.only_type = rd_ ? rd_->name() : "";
    opt.cache_dir = f_.cache_dir;
    bool ok = true;
    json rows = json::array();
    opt.on_row = [&](const AcceptanceRow& r) {
      if (r.status == "FAIL") ok = false;
      if (f_.json) {
        json row{{"id", r.id}, {"title", r.title}, {"status", r.status}, {"detail", r.detail}};
        if (f_.timings) row["seconds"] = r.seconds;
        rows.push_back(row);
      } else {
        out_ << format_row(r, f_.timings) << std::endl;
      }
    };
    run_acceptance(opt);
    if (f_.json)
      out_ << json{{"schema_version", kJsonSchemaVersion}, {"command", "verify"}, {"type", opt.only_type}, {"rows", rows}}.dump(2)
           << "\n";
    return ok ? kExitOk : kExitCheckFailed;
  }

  const Flags& f_;
  std::ostream& out_;
  std::ostream& err_;  // reserved for warnings
  std::optional<RootDatum> rd_;
  std::unique_ptr<Algebra> alg_;
  std::optional<ModuleSpec> mod_;
  std::optional<Grade> weight_;
  std::map<std::string, Element> parsed_;
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Exact computations in quantum superalgebras U_q(g)", "qsuper"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--type", f.type, "root datum, e.g. A(1,0), B(0,1), C(2), D(2,1;2)");
  app.add_flag("--json", f.json, "emit JSON");
  app.add_option("--cache-dir", f.cache_dir, "weight-block cache directory (default $QSUPER_CACHE_DIR)");

  auto* root = app.add_subcommand("root-datum", "print the root datum");
  auto* norm = app.add_subcommand("normalize", "print the normal form of an expression");
  norm->add_option("--expr", f.expr, "expression")->required();
  auto* pair = app.add_subcommand("pair", "pair two elements");
  pair->add_option("--left", f.left, "element of U^- (skew) or U (rosso)")->required();
  pair->add_option("--right", f.right, "element of U^+ (skew) or U (rosso)")->required();
  pair->add_option("--form", f.form, "skew or rosso")->capture_default_str();
  auto* dual = app.add_subcommand("dual-basis", "dual bases of U^-_{-mu} and U^+_mu");
  dual->add_option("--weight", f.weight, "mu in simple-root coordinates, e.g. 1,1")->required();
  auto* theta = app.add_subcommand("theta", "truncated quasi-R-matrix");
  theta->add_option("--cutoff", f.cutoff, "largest height")->capture_default_str();
  auto* cas = app.add_subcommand("casimir", "Casimir element C_M^(k)");
  auto* zel = app.add_subcommand("z-element", "central element z_M");
  auto* hc = app.add_subcommand("hc", "Harish-Chandra image");
  auto* cc = app.add_subcommand("check-central", "test centrality; exit 1 when not central");
  auto* ws = app.add_subcommand("check-wsup", "test membership of the HC image; exit 1 on failure");
  auto* ch = app.add_subcommand("character", "character of a module");
  auto* ver = app.add_subcommand("verify", "run the acceptance suite");
  for (auto* s : {cas, zel, hc, cc, ws, ch})
    s->add_option("--module", f.module, "vector, trivial, verma:<w>, simple:<w>, dual:<module>");
  for (auto* s : {cas, zel, hc, cc, ws, ch}) s->add_option("--depth", f.depth, "module depth cutoff")->capture_default_str();
  for (auto* s : {cas, hc, cc, ws}) s->add_option("--k", f.k, "Casimir power")->capture_default_str();
  for (auto* s : {hc, cc, ws}) {
    s->add_option("--expr", f.expr, "element");
    s->add_flag("--z", f.zflag, "use z_M of --module instead of its Casimir");
  }
  ws->add_flag("--raw", f.raw, "take the expression as the invariant itself (no HC projection)");
  ws->add_option("--mode", f.mode, "both, lines or derivative")->capture_default_str();
  ch->add_flag("--super", f.super, "supercharacter");
  ver->add_flag("--timings", f.timings, "include timings (output is then not reproducible)");
  (void)root;

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qsuper: " << e.what() << "\n";
    return kExitUsage;
  }
  if (f.cache_dir.empty()) f.cache_dir = cache_dir_from_env();

  std::string cmd = app.get_subcommands().front()->get_name();
  Runner runner(f, out, err);
  try {
    runner.validate(cmd);
    return runner.run(cmd);
  } catch (const Usage& e) {
    err << "qsuper: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "qsuper: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CacheCorruption& e) {
    err << "qsuper: cache corruption: " << e.what() << "\n";
    return kExitCache;
  } catch (const std::exception& e) {
    err << "qsuper: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qsuper
