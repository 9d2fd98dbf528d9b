#pragma once

#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace kroncalc {

/// String-keyed memo table. Lookups take a shared lock; inserts are
/// idempotent (first writer wins, later writers must produce equal values).
template <typename Value>
class ConcurrentMemo {
public:
    std::optional<Value> find(const std::string& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        hits_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
    }

    const Value& insert(const std::string& key, Value value) {
        std::unique_lock lock(mutex_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

    template <typename Compute>
    Value get_or_compute(const std::string& key, Compute&& compute) {
        if (auto v = find(key)) return *v;
        return insert(key, compute());
    }

    size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

    size_t hits() const { return hits_.load(std::memory_order_relaxed); }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, Value> map_;
    mutable std::atomic<size_t> hits_{0};
};

}  // namespace kroncalc
