#include "mdl/cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>
#include <unistd.h>

namespace mdl::harness {

std::string CacheKey::file_name() const {
  std::ostringstream out;
  out << kind << "_" << weight << "_" << depth << ".json";
  return out.str();
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256_hex: digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

CacheStore::CacheStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

void CacheStore::reset_counters() const {
  hits_ = 0;
  misses_ = 0;
  computes_ = 0;
}

std::optional<nlohmann::json> CacheStore::get(const CacheKey& key) const {
  if (!enabled()) {
    ++misses_;
    return std::nullopt;
  }
  const auto path = dir_ / key.version / key.file_name();
  std::ifstream in(path);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  nlohmann::json entry;
  try {
    in >> entry;
  } catch (const nlohmann::json::exception&) {
    throw std::runtime_error("cache: unreadable entry at " + path.string());
  }
  if (!entry.is_object() || !entry.contains("payload") || !entry.contains("sha256") ||
      entry.value("kind", "") != key.kind || entry.value("weight", -1) != key.weight ||
      entry.value("depth", -1) != key.depth ||
      entry.value("version", "") != key.version)
    throw std::runtime_error("cache: entry at " + path.string() +
                             " does not match its key");
  const std::string digest = sha256_hex(entry["payload"].dump());
  if (digest != entry["sha256"].get<std::string>())
    throw std::runtime_error("cache: corrupt entry at " + path.string() +
                             " (digest mismatch)");
  ++hits_;
  return entry["payload"];
}

void CacheStore::put(const CacheKey& key, const nlohmann::json& payload) const {
  if (!enabled()) return;
  const auto parent = dir_ / key.version;
  std::filesystem::create_directories(parent);
  nlohmann::json entry{{"kind", key.kind},
                       {"weight", key.weight},
                       {"depth", key.depth},
                       {"version", key.version},
                       {"sha256", sha256_hex(payload.dump())},
                       {"payload", payload}};
  static std::atomic<std::uint64_t> write_serial{0};
  const auto path = parent / key.file_name();
  const auto tmp = parent / (key.file_name() + ".tmp." +
                             std::to_string(::getpid()) + "." +
                             std::to_string(write_serial.fetch_add(1)));
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << entry.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);  // atomic replacement of complete entries
}

nlohmann::json CacheStore::get_or_compute(
    const CacheKey& key, const std::function<nlohmann::json()>& fn) const {
  if (auto hit = get(key)) return *hit;
  nlohmann::json payload = fn();
  ++computes_;
  put(key, payload);
  return payload;
}

}  // namespace mdl::harness
