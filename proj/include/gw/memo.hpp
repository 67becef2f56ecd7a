#pragma once

#include <gw/bigint.hpp>

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace gw {

/// Canonical memo key "d:n:sorted-codims". Counts are order-independent, so
/// keys use the sorted multiset.
std::string memo_key(int d, int n, std::vector<int> codims);

/// Shared memo table: concurrent readers, serialized insertion. Results are
/// independent of interleaving because every stored value is a pure function
/// of its key.
class MemoTable {
 public:
  std::optional<CountValue> lookup(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, const CountValue& value) {
    std::unique_lock lock(mutex_);
    map_.emplace(key, value);
  }

  std::map<std::string, CountValue> snapshot() const {
    std::shared_lock lock(mutex_);
    return map_;
  }

  void merge(const std::map<std::string, CountValue>& entries) {
    std::unique_lock lock(mutex_);
    for (const auto& [k, v] : entries) map_.emplace(k, v);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, CountValue> map_;
};

/// Process-wide memo shared by the line and conic counters.
MemoTable& global_memo();

/// Cache file I/O: a flat text map from canonical key to decimal count with a
/// schema-version header. Load returns false (after warning on stderr) on a
/// version mismatch; save is atomic (write-temp-then-rename).
inline constexpr const char* kCacheHeader = "gwcount-cache v1";
bool load_cache_file(const std::string& path, MemoTable& memo);
bool save_cache_file(const std::string& path, const MemoTable& memo);

}  // namespace gw
