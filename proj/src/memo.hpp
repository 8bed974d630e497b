#pragma once

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace socle {

// Concurrent cache: shared reads, first insertion wins. Node-based storage keeps
// returned references valid for the program lifetime.
template <class Key, class Value, class Hash = std::hash<Key>>
class Memo {
public:
    template <class F>
    const Value& getOrCompute(const Key& key, F&& compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace socle
