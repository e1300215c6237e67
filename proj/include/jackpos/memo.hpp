#pragma once

#include <exception>
#include <functional>
#include <future>
#include <map>
#include <mutex>

namespace jackpos {

/// Compute-once cache. The first caller for a key computes the value outside
/// the lock; concurrent callers wait on the same shared future. Stored
/// values are immutable and references stay valid for the memo's lifetime.
template <class Key, class Value, class Compare = std::less<Key>>
class Memo {
public:
    template <class F>
    const Value& get(const Key& key, F&& compute) {
        std::shared_future<Value> fut;
        std::promise<Value> promise;
        bool owner = false;
        {
            std::lock_guard lock(mutex_);
            auto it = cache_.find(key);
            if (it == cache_.end()) {
                fut = promise.get_future().share();
                cache_.emplace(key, fut);
                owner = true;
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            try {
                promise.set_value(compute());
            } catch (...) {
                promise.set_exception(std::current_exception());
            }
        }
        return fut.get();
    }

    void clear() {
        std::lock_guard lock(mutex_);
        cache_.clear();
    }

private:
    std::mutex mutex_;
    std::map<Key, std::shared_future<Value>, Compare> cache_;
};

}  // namespace jackpos
