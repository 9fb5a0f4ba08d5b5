#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace epos {

/// Exact integer used for every coefficient and weight.
using Coeff = boost::multiprecision::cpp_int;

/// Read-only view of the parts of a composition or partition.
using Parts = std::span<const int>;

/// An ordered list of positive parts.
///
/// Parts are addressed either through parts() (0-based) or through part(k)
/// with the usual 1-based convention, where part(-j) is the j-th last part.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);
  explicit Composition(Parts parts);

  /// Parses the comma-separated text format, e.g. "18,18,3,2,2".
  static Composition parse(std::string_view text);

  Parts parts() const { return parts_; }
  operator Parts() const { return parts_; }  // NOLINT(google-explicit-constructor)

  int length() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }
  bool empty() const { return parts_.empty(); }

  /// 1-based access; negative k counts from the end (part(-1) is the last).
  int part(int k) const;

  /// Comma-separated text form.
  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Concatenation of any number of part lists.
Composition concat(std::initializer_list<Parts> pieces);

/// A multiset of positive parts stored in non-increasing order.
class Partition {
 public:
  Partition() = default;
  /// Sorts the given parts; every part must be positive.
  explicit Partition(std::vector<int> parts);
  explicit Partition(Parts parts) : Partition(std::vector<int>(parts.begin(), parts.end())) {}
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  Parts parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }
  std::string to_string() const;

  /// Multiset union, i.e. the index of the product e_a * e_b.
  friend Partition merge(const Partition& a, const Partition& b);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  struct Sorted {};
  Partition(Sorted, std::vector<int> parts);

  std::vector<int> parts_;
  int total_ = 0;
};

// ---------------------------------------------------------------------------
// Statistics

int total(Parts parts);

/// The a-surplus: the smallest prefix sum that reaches a, minus a.
/// Throws DomainError when a exceeds the total.
int surplus(Parts parts, int a);

/// Product of (i_k - 1) over every part but the first. Throws on empty input.
Coeff weight_prime(Parts parts);

/// First part times weight_prime. Throws on empty input.
Coeff weight(Parts parts);

/// Alphabetic order of two compositions of the same total: the first index
/// where the parts differ decides. Throws DomainError on different totals.
std::strong_ordering alpha_compare(Parts k, Parts l);

/// 1-based index of the first / last odd part, absent for even compositions.
std::optional<int> first_odd(Parts parts);
std::optional<int> last_odd(Parts parts);

/// Number of even parts before the first odd part (the whole length when
/// there is none). Equals first_odd - 1 whenever an odd part exists.
int leading_even_count(Parts parts);

/// Number of even parts after the last odd part (the whole length when
/// there is none). Equals length - last_odd whenever an odd part exists.
int trailing_even_count(Parts parts);

int odd_count(Parts parts);

/// Moves the longest all-odd suffix to the front, preserving the order
/// inside both pieces. Throws on empty input.
Composition rotate_longest_odd_suffix(Parts parts);

/// Inverse of rotate_longest_odd_suffix on compositions whose first part is
/// even: moves the longest all-odd prefix to the end.
Composition rotate_longest_odd_prefix(Parts parts);

// ---------------------------------------------------------------------------
// Enumeration

/// A contiguous slice of a CompositionSpace: every composition that starts
/// with `prefix` and continues with parts >= 2 summing to `remaining`.
struct CompositionShard {
  std::vector<int> prefix;
  int remaining = 0;
  int next_min = 2;

  template <class Fn>
  void for_each(Fn&& fn) const;
};

/// Compositions of n whose first part is at least `first_min` and whose
/// remaining parts are all at least 2.
///
/// Enumeration is lexicographic ascending in the part sequence. shards()
/// cuts the space into consecutive slices; visiting the slices in order
/// reproduces the full enumeration order.
class CompositionSpace {
 public:
  /// C_n: every part at least 2. Throws DomainError for n < 2.
  static CompositionSpace min2(int n);
  /// Compositions with a nonzero path weight: first part free, rest >= 2.
  /// Throws DomainError for n < 1.
  static CompositionSpace path_support(int n);

  int n() const { return n_; }
  int first_min() const { return first_min_; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    root().for_each(std::forward<Fn>(fn));
  }

  std::vector<Composition> collect() const;
  std::uint64_t count() const;

  /// At least `min_count` slices when the space is large enough.
  std::vector<CompositionShard> shards(std::size_t min_count) const;

 private:
  CompositionSpace(int n, int first_min) : n_(n), first_min_(first_min) {}
  CompositionShard root() const { return CompositionShard{{}, n_, first_min_}; }

  int n_;
  int first_min_;
};

/// Number of compositions of n with all parts >= 2 (zero for n < 2).
std::uint64_t count_min2(int n);

template <class Fn>
void CompositionShard::for_each(Fn&& fn) const {
  std::vector<int> buffer(prefix);
  buffer.reserve(prefix.size() + static_cast<std::size_t>(remaining / 2) + 1);
  // Iterative depth-first walk; `next` holds the candidate value of the part
  // being chosen at each depth beyond the prefix.
  if (remaining == 0) {
    if (!buffer.empty()) fn(Parts(buffer));
    return;
  }
  std::vector<int> rest_stack{remaining};
  std::vector<int> next{next_min};
  while (!next.empty()) {
    const int rest = rest_stack.back();
    int p = next.back();
    // Skip values that would leave a remainder of exactly 1.
    if (p < rest && rest - p < 2) p = rest;
    next.back() = p;
    if (p > rest) {
      next.pop_back();
      rest_stack.pop_back();
      if (!next.empty()) {
        buffer.pop_back();
        ++next.back();
      }
      continue;
    }
    buffer.push_back(p);
    if (p == rest) {
      fn(Parts(buffer));
      buffer.pop_back();
      ++next.back();
    } else {
      rest_stack.push_back(rest - p);
      next.push_back(2);
    }
  }
}

}  // namespace epos
