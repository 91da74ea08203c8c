#include "ltlab/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "ltlab/errors.hpp"

namespace ltlab {

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::string name;
  for (char c : key) {
    bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '.' ||
                c == '_';
    name += keep ? c : '_';
  }
  // Sanitizing can merge distinct keys, so disambiguate with a hash of the raw key.
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : key) h = (h ^ c) * 1099511628211ull;
  std::ostringstream os;
  os << name << '-' << std::hex << h << ".entry";
  return dir_ / os.str();
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void ResultCache::store(const std::string& key, const std::string& bytes) const {
  static std::atomic<unsigned> counter{0};
  auto final_path = path_for(key);
  auto tmp = final_path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << bytes;
    out.flush();
    if (!out) throw std::runtime_error("short write to cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

}  // namespace ltlab
