#include "epos/expansions.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "epos/errors.hpp"
#include "epos/parallel.hpp"

namespace epos {

namespace {

EFunction compute_path(int n) {
  const auto shards = CompositionSpace::path_support(n).shards(4 * worker_count());
  return map_reduce(
      shards.size(), EFunction{},
      [&](std::size_t i) {
        EFunction part;
        shards[i].for_each([&](Parts parts) { part.add_term(parts, weight(parts)); });
        return part;
      },
      [](EFunction& acc, const EFunction& part) { acc += part; });
}

}  // namespace

const EFunction& path_csf_e(int n) {
  if (n < 1) throw DomainError("path needs at least one vertex, got " + std::to_string(n));
  static std::map<int, std::unique_ptr<EFunction>> cache;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<EFunction>(compute_path(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n, std::move(value));
  return *it->second;
}

EFunction spider_csf_e(int a, int b, int c) {
  if (!(a >= b && b >= c && c >= 1)) {
    throw DomainError("spider legs must satisfy a >= b >= c >= 1, got " + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c));
  }
  const int n = a + b + c + 1;
  EFunction out = path_csf_e(n);
  for (int i = 1; i <= c; ++i) {
    out += path_csf_e(i) * path_csf_e(n - i);
    out -= path_csf_e(b + i) * path_csf_e(n - b - i);
  }
  return out;
}

EFunction spider4m_csf(int m) {
  if (m < 1) throw DomainError("m must be positive, got " + std::to_string(m));
  return spider_csf_e(4 * m + 2, 2 * m, 1);
}

}  // namespace epos
