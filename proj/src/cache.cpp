#include "refeul/cache.hpp"

#include <fstream>
#include <stdexcept>
#include <system_error>

#include "refeul/engine.hpp"

namespace refeul {

nlohmann::json to_json(const CacheEntry& e) {
  return {{"n", e.n}, {"method", e.method}, {"polynomial", to_json(e.polynomial)}, {"tool_version", e.tool_version}};
}

CacheEntry cache_entry_from_json(const nlohmann::json& j) {
  try {
    CacheEntry e;
    e.n = j.at("n").get<std::size_t>();
    e.method = j.at("method").get<std::string>();
    if (e.method != "brute" && e.method != "fast") throw std::invalid_argument("unknown method " + e.method);
    e.polynomial = bipoly_from_json(j.at("polynomial"));
    e.tool_version = j.at("tool_version").get<std::string>();
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed cache entry: ") + ex.what());
  }
}

PolyCache::PolyCache(std::filesystem::path path, std::string tool_version)
    : path_(std::move(path)), tool_version_(std::move(tool_version)) {
  std::ifstream in(path_);
  if (!in) return;
  try {
    const auto doc = nlohmann::json::parse(in);
    for (const auto& item : doc.at("entries")) {
      CacheEntry e = cache_entry_from_json(item);
      entries_[e.n] = std::move(e);
    }
  } catch (const std::exception& ex) {
    entries_.clear();
    load_warning_ = "ignoring unreadable cache " + path_.string() + ": " + ex.what();
  }
}

std::optional<BiPoly> PolyCache::lookup(std::size_t n, const std::string& method) const {
  auto it = entries_.find(n);
  if (it == entries_.end()) return std::nullopt;
  const CacheEntry& e = it->second;
  if (e.tool_version != tool_version_ || e.method != method || n == 0) return std::nullopt;
  const auto [tp, tq] = top_monomial(n);
  if (e.polynomial.coeff(tp, tq) != 1 || eval(e.polynomial, 1, 1) != factorial(n)) return std::nullopt;
  return e.polynomial;
}

void PolyCache::store(std::size_t n, const std::string& method, const BiPoly& poly) {
  entries_[n] = CacheEntry{n, method, poly, tool_version_};
}

void PolyCache::save() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [n, e] : entries_) entries.push_back(to_json(e));
  const nlohmann::json doc = {{"entries", std::move(entries)}};

  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump(1) << '\n';
    if (!out) throw std::runtime_error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace refeul
