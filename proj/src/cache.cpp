#include "kloverify/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kloverify {

namespace {

std::atomic<int> g_hits{0};
std::atomic<int> g_misses{0};

bool read_file(const std::filesystem::path& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return static_cast<bool>(in);
}

}  // namespace

std::string resolve_cache_dir(const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  const char* env = std::getenv("KLOVERIFY_CACHE");
  return env ? std::string(env) : std::string();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a64(bytes);
  return os.str();
}

bool cache_load(const std::string& dir, const std::string& name,
                nlohmann::ordered_json& out) {
  if (dir.empty()) return false;
  const std::filesystem::path base = std::filesystem::path(dir) / name;
  std::string payload, sum;
  if (!read_file(base, payload) || !read_file(base.string() + ".sum", sum)) {
    ++g_misses;
    return false;
  }
  while (!sum.empty() && (sum.back() == '\n' || sum.back() == '\r')) sum.pop_back();
  if (sum != fnv1a64_hex(payload)) {
    ++g_misses;
    return false;
  }
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(payload, nullptr, false);
  if (doc.is_discarded()) {
    ++g_misses;
    return false;
  }
  out = std::move(doc);
  ++g_hits;
  return true;
}

void cache_store(const std::string& dir, const std::string& name,
                 const nlohmann::ordered_json& doc) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  const std::filesystem::path base = std::filesystem::path(dir) / name;
  const std::string payload = doc.dump(1);
  {
    std::ofstream out(base, std::ios::binary | std::ios::trunc);
    out << payload;
  }
  std::ofstream sum(base.string() + ".sum", std::ios::binary | std::ios::trunc);
  sum << fnv1a64_hex(payload) << "\n";
}

int cache_hit_count() { return g_hits.load(); }
int cache_miss_count() { return g_misses.load(); }

}  // namespace kloverify
