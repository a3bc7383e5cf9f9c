#pragma once

#include <cstddef>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace multindex {

/// Upper bound on entries per memo table, read once from MULTINDEX_CACHE_LIMIT
/// (0 or unset means unbounded).
inline std::size_t memo_cache_limit() {
  static const std::size_t limit = [] {
    const char* env = std::getenv("MULTINDEX_CACHE_LIMIT");
    return env ? static_cast<std::size_t>(std::strtoull(env, nullptr, 10)) : std::size_t{0};
  }();
  return limit;
}

/// Pure-function cache. Values are computed outside the lock, so two threads
/// may race to compute the same entry; both produce the same value and the
/// first insert wins.
template <class Key, class Value, class Compare = std::less<Key>>
class MemoCache {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const Value& insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    const std::size_t limit = memo_cache_limit();
    if (limit != 0 && table_.size() >= limit) table_.clear();
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  template <class F>
  Value get_or_compute(const Key& key, F&& compute) {
    if (auto hit = find(key)) return *std::move(hit);
    Value value = compute();
    std::unique_lock lock(mutex_);
    const std::size_t limit = memo_cache_limit();
    if (limit != 0 && table_.size() >= limit) table_.clear();
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value, Compare> table_;
};

}  // namespace multindex
