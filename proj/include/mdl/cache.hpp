#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace mdl::harness {

// Any change to the canonical tuple ordering or the matrix definitions must
// bump this; it is part of every cache key.
inline constexpr const char* kCodeVersion = "1-lex";

struct CacheKey {
  std::string kind;
  int weight = 0;
  int depth = 0;
  std::string version = kCodeVersion;

  std::string file_name() const;
};

std::string sha256_hex(std::string_view data);

// Content-addressed persistence of computed artifacts. Entries are verified
// against a stored digest on read; a corrupt entry is an error, never a
// silent recompute. Writes go through a temp file and an atomic rename.
class CacheStore {
 public:
  CacheStore() = default;  // disabled store: get misses, put is a no-op
  explicit CacheStore(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<nlohmann::json> get(const CacheKey& key) const;
  void put(const CacheKey& key, const nlohmann::json& payload) const;
  nlohmann::json get_or_compute(const CacheKey& key,
                                const std::function<nlohmann::json()>& fn) const;

  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }
  std::uint64_t computes() const { return computes_.load(); }
  void reset_counters() const;

 private:
  std::filesystem::path dir_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
  mutable std::atomic<std::uint64_t> computes_{0};
};

}  // namespace mdl::harness
