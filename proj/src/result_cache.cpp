#include "inducibility/result_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

#include "inducibility/errors.hpp"
#include "inducibility/report_json.hpp"
#include "inducibility/version.hpp"

namespace inducibility {
namespace {

std::string hex(const std::string& text) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (const unsigned char c : text) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

// Current-version records keyed by m; unreadable lines are skipped.
std::map<int, SearchResult> read_records(const std::filesystem::path& file) {
  std::map<int, SearchResult> out;
  std::ifstream in(file);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      SearchResult r = search_result_from_json(Json::parse(line));
      if (r.version == kVersion) out[r.m] = std::move(r);
    } catch (const std::exception&) {
      continue;
    }
  }
  return out;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::default_dir() {
  if (const char* env = std::getenv("INDUCIBILITY_CACHE_DIR"); env && *env) return env;
  return ".inducibility-cache";
}

std::filesystem::path ResultCache::file_for(const std::string& pattern_label) const {
  return dir_ / (hex(pattern_label) + ".jsonl");
}

std::optional<SearchResult> ResultCache::load(const std::string& pattern_label, int m) const {
  const auto records = read_records(file_for(pattern_label));
  const auto it = records.find(m);
  if (it == records.end() || it->second.pattern != pattern_label) return std::nullopt;
  return it->second;
}

void ResultCache::store(const SearchResult& result) const {
  std::filesystem::create_directories(dir_);
  const auto file = file_for(result.pattern);
  auto records = read_records(file);
  records[result.m] = result;

  std::ostringstream body;
  for (const auto& [m, r] : records) body << to_json(r).dump() << '\n';
  auto tmp = file;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << body.str();
    if (!out.flush()) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace inducibility
