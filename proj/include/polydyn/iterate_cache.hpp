#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "polydyn/poly.hpp"

namespace polydyn {

/// Memo of f^0, f^1, ... keyed by the polynomial.  Safe for concurrent use.
template <class K>
class IterateCache {
public:
  Poly<K> get(const Poly<K>& f, std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(f);
      if (it != table_.end() && it->second.size() > n) return it->second[n];
    }
    std::unique_lock lock(mutex_);
    auto& chain = table_[f];
    if (chain.empty()) chain.push_back(Poly<K>::x());
    while (chain.size() <= n) chain.push_back(compose(f, chain.back()));
    return chain[n];
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Poly<K>, std::vector<Poly<K>>, PolyHash<K>> table_;
};

/// Process-wide cache used by the harnesses that walk f^1, f^2, ...
template <class K>
IterateCache<K>& session_iterates() {
  static IterateCache<K> cache;
  return cache;
}

}  // namespace polydyn
