#include "epos/composition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "epos/errors.hpp"

namespace epos {

namespace {

void require_positive(Parts parts) {
  for (int p : parts) {
    if (p < 1) throw DomainError("composition parts must be positive, got " + std::to_string(p));
  }
}

std::string join(Parts parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_);
  total_ = epos::total(parts_);
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(Parts parts) : Composition(std::vector<int>(parts.begin(), parts.end())) {}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw DomainError("malformed composition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

int Composition::part(int k) const {
  const int len = length();
  if (k == 0 || k > len || k < -len) {
    throw DomainError("part index " + std::to_string(k) + " out of range for length " + std::to_string(len));
  }
  return k > 0 ? parts_[static_cast<std::size_t>(k - 1)] : parts_[static_cast<std::size_t>(len + k)];
}

std::string Composition::to_string() const { return join(parts_); }

Composition concat(std::initializer_list<Parts> pieces) {
  std::vector<int> out;
  for (Parts piece : pieces) out.insert(out.end(), piece.begin(), piece.end());
  return Composition(std::move(out));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  total_ = epos::total(parts_);
}

Partition::Partition(Sorted, std::vector<int> parts) : parts_(std::move(parts)) {
  total_ = epos::total(parts_);
}

std::string Partition::to_string() const { return join(parts_); }

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> out;
  out.reserve(a.parts_.size() + b.parts_.size());
  std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(), std::back_inserter(out),
             std::greater<>());
  return Partition(Partition::Sorted{}, std::move(out));
}

int total(Parts parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

int surplus(Parts parts, int a) {
  if (a < 0) throw DomainError("surplus threshold must be nonnegative");
  int sum = 0;
  if (sum >= a) return sum - a;
  for (int p : parts) {
    sum += p;
    if (sum >= a) return sum - a;
  }
  throw DomainError("surplus threshold " + std::to_string(a) + " exceeds composition total " +
                    std::to_string(sum));
}

Coeff weight_prime(Parts parts) {
  if (parts.empty()) throw DomainError("weight of the empty composition");
  Coeff w = 1;
  for (std::size_t i = 1; i < parts.size(); ++i) w *= parts[i] - 1;
  return w;
}

Coeff weight(Parts parts) {
  if (parts.empty()) throw DomainError("weight of the empty composition");
  return parts[0] * weight_prime(parts);
}

std::strong_ordering alpha_compare(Parts k, Parts l) {
  if (total(k) != total(l)) throw DomainError("alphabetic order compares compositions of equal size only");
  const std::size_t common = std::min(k.size(), l.size());
  for (std::size_t s = 0; s < common; ++s) {
    if (k[s] != l[s]) return k[s] <=> l[s];
  }
  // Equal totals and a common prefix force equal lengths.
  return std::strong_ordering::equal;
}

std::optional<int> first_odd(Parts parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] % 2 != 0) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

std::optional<int> last_odd(Parts parts) {
  for (std::size_t i = parts.size(); i > 0; --i) {
    if (parts[i - 1] % 2 != 0) return static_cast<int>(i);
  }
  return std::nullopt;
}

int leading_even_count(Parts parts) {
  const auto fo = first_odd(parts);
  return fo ? *fo - 1 : static_cast<int>(parts.size());
}

int trailing_even_count(Parts parts) {
  const auto lo = last_odd(parts);
  return static_cast<int>(parts.size()) - lo.value_or(0);
}

int odd_count(Parts parts) {
  return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int p) { return p % 2 != 0; }));
}

Composition rotate_longest_odd_suffix(Parts parts) {
  if (parts.empty()) throw DomainError("rotation of the empty composition");
  std::size_t cut = parts.size();
  while (cut > 0 && parts[cut - 1] % 2 != 0) --cut;
  std::vector<int> out(parts.begin() + static_cast<std::ptrdiff_t>(cut), parts.end());
  out.insert(out.end(), parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(cut));
  return Composition(std::move(out));
}

Composition rotate_longest_odd_prefix(Parts parts) {
  if (parts.empty()) throw DomainError("rotation of the empty composition");
  std::size_t cut = 0;
  while (cut < parts.size() && parts[cut] % 2 != 0) ++cut;
  std::vector<int> out(parts.begin() + static_cast<std::ptrdiff_t>(cut), parts.end());
  out.insert(out.end(), parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(cut));
  return Composition(std::move(out));
}

CompositionSpace CompositionSpace::min2(int n) {
  if (n < 2) throw DomainError("C_n requires n >= 2, got " + std::to_string(n));
  return CompositionSpace(n, 2);
}

CompositionSpace CompositionSpace::path_support(int n) {
  if (n < 1) throw DomainError("path support requires n >= 1, got " + std::to_string(n));
  return CompositionSpace(n, 1);
}

std::vector<Composition> CompositionSpace::collect() const {
  std::vector<Composition> out;
  for_each([&](Parts parts) { out.emplace_back(parts); });
  return out;
}

std::uint64_t count_min2(int n) {
  if (n < 2) return 0;
  // a(n) = a(n-1) + a(n-2) with a(2) = a(3) = 1; a(0) = 1 counts the empty tail.
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int k = 2; k <= n; ++k) {
    for (int p = 2; p <= k; ++p) a[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(k - p)];
  }
  return a[static_cast<std::size_t>(n)];
}

std::uint64_t CompositionSpace::count() const {
  std::uint64_t c = 0;
  for (int p = first_min_; p <= n_; ++p) {
    const int rest = n_ - p;
    c += rest == 0 ? 1 : count_min2(rest);
  }
  return c;
}

std::vector<CompositionShard> CompositionSpace::shards(std::size_t min_count) const {
  std::vector<CompositionShard> current{root()};
  while (current.size() < min_count) {
    std::vector<CompositionShard> refined;
    bool split_any = false;
    for (auto& shard : current) {
      if (shard.remaining == 0) {
        refined.push_back(std::move(shard));
        continue;
      }
      split_any = true;
      for (int p = shard.next_min; p <= shard.remaining; ++p) {
        const int rest = shard.remaining - p;
        if (rest == 1) continue;
        CompositionShard child{shard.prefix, rest, 2};
        child.prefix.push_back(p);
        refined.push_back(std::move(child));
      }
    }
    current = std::move(refined);
    if (!split_any) break;
  }
  return current;
}

}  // namespace epos
