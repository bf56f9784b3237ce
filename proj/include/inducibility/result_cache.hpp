#pragma once

#include <filesystem>
#include <optional>

#include "inducibility/exact_search.hpp"

namespace inducibility {

// Directory of JSON-lines files, one per pattern (file name = hex of the
// pattern's canonical graph6), one record per m. Records written by another
// version are ignored on load and dropped on the next store.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  // Default directory: $INDUCIBILITY_CACHE_DIR, else ".inducibility-cache".
  static std::filesystem::path default_dir();

  std::optional<SearchResult> load(const std::string& pattern_label, int m) const;
  // Atomic: the new file is written beside the old one and renamed over it.
  void store(const SearchResult& result) const;

  std::filesystem::path file_for(const std::string& pattern_label) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace inducibility
