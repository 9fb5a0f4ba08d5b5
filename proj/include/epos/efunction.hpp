#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epos/composition.hpp"

namespace epos {

/// Canonical term order: shorter partitions first, then lexicographically
/// larger part lists first. For degree 3 this gives e3, e21, e111.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// A symmetric function written in the elementary basis with exact integer
/// coefficients. Zero coefficients are never stored, so two functions are
/// equal exactly when their term maps are equal.
class EFunction {
 public:
  using Terms = std::map<Partition, Coeff, CanonicalOrder>;

  EFunction() = default;

  /// c * e_I, indexed by the underlying partition of I.
  static EFunction term(Parts parts, const Coeff& c = 1);
  static EFunction term(const Partition& lambda, const Coeff& c = 1);

  /// Accumulates c * e_I.
  void add_term(Parts parts, const Coeff& c);
  void add_term(const Partition& lambda, const Coeff& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of e_lambda (zero when absent).
  Coeff coeff(const Partition& lambda) const;

  /// Common degree of all terms; absent for the zero function or when the
  /// terms have different degrees.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  EFunction& operator+=(const EFunction& other);
  EFunction& operator-=(const EFunction& other);
  EFunction& operator*=(const Coeff& c);

  friend EFunction operator+(EFunction a, const EFunction& b) { return a += b; }
  friend EFunction operator-(EFunction a, const EFunction& b) { return a -= b; }
  friend EFunction operator*(EFunction a, const Coeff& c) { return a *= c; }
  friend EFunction operator*(const Coeff& c, EFunction a) { return a *= c; }
  friend EFunction operator*(const EFunction& a, const EFunction& b);

  friend bool operator==(const EFunction& a, const EFunction& b) = default;

 private:
  Terms terms_;
};

inline EFunction add(const EFunction& f, const EFunction& g) { return f + g; }
inline EFunction scale(const EFunction& f, const Coeff& c) { return f * c; }
inline EFunction mul(const EFunction& f, const EFunction& g) { return f * g; }

bool is_e_positive(const EFunction& f);

/// Terms with negative coefficients, in canonical order.
std::vector<std::pair<Partition, Coeff>> negative_terms(const EFunction& f);

/// The power sum p_r in the elementary basis (Newton's identities).
/// Memoized and safe to call from several threads. Throws for r < 1.
const EFunction& p_to_e(int r);

/// The product of p_to_e over the parts of lambda.
EFunction p_partition_to_e(const Partition& lambda);

/// Human-readable form, e.g. "3·e[3] + 1·e[2,1]"; "0" for the zero function.
std::string to_pretty(const EFunction& f);

}  // namespace epos
