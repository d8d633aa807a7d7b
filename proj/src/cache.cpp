#include "qsuper/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qsuper {

using nlohmann::json;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

Poly poly_from(const json& a) {
  std::vector<Int> c;
  for (const auto& s : a) c.emplace_back(s.get<std::string>());
  return Poly(std::move(c));
}

json scalar_json(const Scalar& s) {
  if (s.is_zero()) return 0;
  return json::array({s.shift(), poly_json(s.num()), poly_json(s.den())});
}

Scalar scalar_from(const json& j) {
  if (j.is_number()) return Scalar();
  return Scalar::from_parts(j.at(0).get<int>(), poly_from(j.at(1)), poly_from(j.at(2)));
}

json mat_json(const SMat& m) {
  json a = json::array();
  for (const auto& e : m.a) a.push_back(scalar_json(e));
  return json{{"cols", m.cols}, {"rows", m.rows}, {"data", a}};
}

SMat mat_from(const json& j) {
  SMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto& d = j.at("data");
  if (d.size() != m.a.size()) throw CacheCorruption("matrix size mismatch");
  for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = scalar_from(d[i]);
  return m;
}

json mats_json(const std::vector<SMat>& v) {
  json a = json::array();
  for (const auto& m : v) a.push_back(mat_json(m));
  return a;
}

std::vector<SMat> mats_from(const json& a) {
  std::vector<SMat> v;
  for (const auto& j : a) v.push_back(mat_from(j));
  return v;
}

std::string weight_key(const RootDatum& rd, const Grade& mu) {
  std::string s;
  for (int i = 0; i < rd.rank(); ++i) {
    if (i) s += '_';
    s += std::to_string(mu[i]);
  }
  return s;
}

std::string safe_name(const std::string& n) {
  std::string s;
  for (char c : n) s += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return s;
}

json payload(const RootDatum& rd, const WeightBlock& b) {
  json w = json::array();
  for (int i = 0; i < rd.rank(); ++i) w.push_back(b.mu[i]);
  json fs = json::array(), es = json::array();
  for (auto [i, k] : b.fsplit) fs.push_back({i, k});
  for (auto [i, k] : b.esplit) es.push_back({i, k});
  return json{{"datum", rd.name()},
              {"sign", "pm"},
              {"weight", w},
              {"dim", b.dim},
              {"parity", b.parity},
              {"fwords", b.fwords},
              {"ewords", b.ewords},
              {"fsplit", fs},
              {"esplit", es},
              {"gram", mat_json(b.gram)},
              {"gram_inv", mat_json(b.gram_inv)},
              {"lmulF", mats_json(b.lmulF)},
              {"lmulE", mats_json(b.lmulE)},
              {"rF", mats_json(b.rF)},
              {"rpF", mats_json(b.rpF)},
              {"rE", mats_json(b.rE)},
              {"rpE", mats_json(b.rpE)}};
}

}  // namespace

std::string cache_dir_from_env() {
  const char* e = std::getenv("QSUPER_CACHE_DIR");
  return e ? std::string(e) : std::string();
}

std::string block_cache_path(const std::string& dir, const RootDatum& rd, const Grade& mu) {
  return (std::filesystem::path(dir) / safe_name(rd.name()) / ("w_" + weight_key(rd, mu) + ".json")).string();
}

std::string block_to_json(const RootDatum& rd, const WeightBlock& b) {
  json p = payload(rd, b);
  std::string body = p.dump();
  json doc{{"schema_version", kCacheSchemaVersion}, {"checksum", hex64(fnv1a(body))}, {"payload", p}};
  return doc.dump();
}

WeightBlock block_from_json(const RootDatum& rd, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CacheCorruption(std::string("unparsable cache file: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kCacheSchemaVersion) throw CacheCorruption("cache schema version mismatch");
    const json& p = doc.at("payload");
    if (hex64(fnv1a(p.dump())) != doc.at("checksum").get<std::string>()) throw CacheCorruption("cache checksum mismatch");
    if (p.at("datum").get<std::string>() != rd.name()) throw CacheCorruption("cache file belongs to another datum");
    WeightBlock b;
    const auto& w = p.at("weight");
    for (int i = 0; i < rd.rank(); ++i) b.mu[i] = w.at(i).get<int>();
    b.dim = p.at("dim").get<int>();
    b.parity = p.at("parity").get<int>();
    b.fwords = p.at("fwords").get<std::vector<std::vector<int>>>();
    b.ewords = p.at("ewords").get<std::vector<std::vector<int>>>();
    for (const auto& x : p.at("fsplit")) b.fsplit.emplace_back(x.at(0).get<int>(), x.at(1).get<int>());
    for (const auto& x : p.at("esplit")) b.esplit.emplace_back(x.at(0).get<int>(), x.at(1).get<int>());
    b.gram = mat_from(p.at("gram"));
    b.gram_inv = mat_from(p.at("gram_inv"));
    b.lmulF = mats_from(p.at("lmulF"));
    b.lmulE = mats_from(p.at("lmulE"));
    b.rF = mats_from(p.at("rF"));
    b.rpF = mats_from(p.at("rpF"));
    b.rE = mats_from(p.at("rE"));
    b.rpE = mats_from(p.at("rpE"));
    return b;
  } catch (const json::exception& e) {
    throw CacheCorruption(std::string("malformed cache file: ") + e.what());
  }
}

bool load_block(const std::string& dir, const RootDatum& rd, const Grade& mu, WeightBlock& out) {
  std::ifstream in(block_cache_path(dir, rd, mu), std::ios::binary);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  out = block_from_json(rd, ss.str());
  if (out.mu != mu) throw CacheCorruption("cache file weight does not match its name");
  return true;
}

void save_block(const std::string& dir, const RootDatum& rd, const WeightBlock& b) {
  namespace fs = std::filesystem;
  fs::path path(block_cache_path(dir, rd, b.mu));
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) return;  // cache is best effort
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << block_to_json(rd, b);
    if (!out) return;
  }
  fs::rename(tmp, path, ec);
}

}  // namespace qsuper
