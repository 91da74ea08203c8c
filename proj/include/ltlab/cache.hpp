#pragma once

// On-disk result cache. Entries are opaque byte strings stored one per file;
// writes go to a temporary file that is then renamed into place, so a reader
// never sees a partial entry.

#include <filesystem>
#include <optional>
#include <string>

namespace ltlab {

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);
  const std::filesystem::path& dir() const { return dir_; }
  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& bytes) const;
  /// File holding the entry for key (keys are sanitized into file names).
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace ltlab
