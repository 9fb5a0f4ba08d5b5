#include "epos/efunction.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>

#include "epos/errors.hpp"

namespace epos {

bool CanonicalOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
                                      std::greater<>());
}

EFunction EFunction::term(Parts parts, const Coeff& c) {
  EFunction f;
  f.add_term(parts, c);
  return f;
}

EFunction EFunction::term(const Partition& lambda, const Coeff& c) {
  EFunction f;
  f.add_term(lambda, c);
  return f;
}

void EFunction::add_term(Parts parts, const Coeff& c) {
  if (c == 0) return;
  add_term(Partition(parts), c);
}

void EFunction::add_term(const Partition& lambda, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Coeff EFunction::coeff(const Partition& lambda) const {
  const auto it = terms_.find(lambda);
  return it == terms_.end() ? Coeff(0) : it->second;
}

std::optional<int> EFunction::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.total();
  for (const auto& [lambda, c] : terms_) {
    if (lambda.total() != d) return std::nullopt;
  }
  return d;
}

bool EFunction::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

EFunction& EFunction::operator+=(const EFunction& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

EFunction& EFunction::operator-=(const EFunction& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

EFunction& EFunction::operator*=(const Coeff& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, value] : terms_) value *= c;
  return *this;
}

EFunction operator*(const EFunction& a, const EFunction& b) {
  EFunction out;
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) out.add_term(merge(la, lb), ca * cb);
  }
  return out;
}

bool is_e_positive(const EFunction& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second >= 0; });
}

std::vector<std::pair<Partition, Coeff>> negative_terms(const EFunction& f) {
  std::vector<std::pair<Partition, Coeff>> out;
  for (const auto& [lambda, c] : f.terms()) {
    if (c < 0) out.emplace_back(lambda, c);
  }
  return out;
}

const EFunction& p_to_e(int r) {
  if (r < 1) throw DomainError("power sum index must be positive, got " + std::to_string(r));
  // deque keeps references stable while the cache grows.
  static std::deque<EFunction> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) < r) {
    // p_s = (-1)^(s-1) s e_s + sum_{k=1}^{s-1} (-1)^(k-1) e_k p_{s-k}
    const int s = static_cast<int>(cache.size()) + 1;
    EFunction p = EFunction::term(Partition{s}, Coeff(s % 2 == 1 ? s : -s));
    for (int k = 1; k < s; ++k) {
      const EFunction ek = EFunction::term(Partition{k}, Coeff(k % 2 == 1 ? 1 : -1));
      p += ek * cache[static_cast<std::size_t>(s - k - 1)];
    }
    cache.push_back(std::move(p));
  }
  return cache[static_cast<std::size_t>(r - 1)];
}

EFunction p_partition_to_e(const Partition& lambda) {
  EFunction out = EFunction::term(Partition{}, 1);
  for (int r : lambda.parts()) out = out * p_to_e(r);
  return out;
}

std::string to_pretty(const EFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : f.terms()) {
    const bool negative = c < 0;
    const Coeff magnitude = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude.str() + "·e[" + lambda.to_string() + "]";
    first = false;
  }
  return out;
}

}  // namespace epos
