#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "epos/composition.hpp"
#include "epos/efunction.hpp"

namespace epos {

// Throughout, m >= 1 fixes the spider S(4m+2, 2m, 1) and n = 6m + 4.
inline int spider_order(int m) { return 6 * m + 4; }

// ---------------------------------------------------------------------------
// Coefficient polynomials

/// 2jkl - 3jk - 3jl - 2kl + 2j + 2k + 2l.
std::int64_t f_poly(std::int64_t j, std::int64_t k, std::int64_t l);

/// f for K > L and f/2 for K = L. Throws DomainError for `cmp` less, and
/// InvariantViolation when f is odd in the equal case.
std::int64_t g_coeff(std::int64_t j, std::int64_t k, std::int64_t l, std::strong_ordering cmp);

/// w_{JKL} + w_{KJL} + w_{KLJ} - w_{JK} w_L - w_{KJ} w_L.
Coeff b_coeff(Parts j, Parts k, Parts l);

// ---------------------------------------------------------------------------
// Surplus-defined subsets of C_n

enum class BSet { kA, kB1, kB2, kB1Prime, kB2Prime };

std::string to_string(BSet set);

/// Evaluates the surplus characterization of the chosen set.
/// Throws DomainError when I is not a composition of n = 6m+4.
bool membership(Parts i, BSet which, int m);

/// The unique set among A, B1, B1', B2, B2' containing I.
BSet classify_composition(Parts i, int m);

// ---------------------------------------------------------------------------
// Triples

/// Membership in T = C_{2m+2} x C_{2m+1} x C_{2m+1}.
bool in_triple_set(Parts j, Parts k, Parts l, int m);

/// (P, Q) in C_{4m+3} x C_{2m+1} with surplus_P(2m+1) >= 2.
bool in_b2_pairs(Parts p, Parts q, int m);

enum class TripleClass { kT1, kT2, kT3, kT4, kUnmatched };

std::string to_string(TripleClass cls);

struct TripleT {
  Composition j;
  Composition k;
  Composition l;
  TripleClass cls = TripleClass::kUnmatched;

  std::string to_string() const;
  friend bool operator==(const TripleT&, const TripleT&) = default;
};

/// Class of a triple of T. kUnmatched covers K < L (folded into the mirror
/// triple) and K >= L with g >= 0.
TripleClass classify_triple(Parts j, Parts k, Parts l);

/// The components of T, enumerated once and shared across the callers.
struct TripleSpace {
  explicit TripleSpace(int m);
  int m;
  std::vector<Composition> js;  // C_{2m+2}
  std::vector<Composition> ks;  // C_{2m+1}; L ranges over the same set
  std::uint64_t size() const { return js.size() * ks.size() * ks.size(); }
};

/// Every triple of T with its class, J-major then K then L.
std::vector<TripleT> classify_triples(int m);

// ---------------------------------------------------------------------------
// Symmetric functions of the decomposition

/// The bracket multiplying e_1^2: sum over I in C_{n-2} with
/// surplus_I(4m+2) >= 1 of w_{1I} e_I.
EFunction e1_squared_part(int m);

/// X1: the bracket multiplying e_1.
EFunction x1_fun(int m);

/// X0 = sum_{C_n} w_I e_I - sum_{C_{4m+3} x C_{2m+1}} w_P w_Q e_{PQ}.
EFunction x0_fun(int m);

/// sum over B2 pairs of (p1 q1 - p1 - q1) w'_P w'_Q e_{PQ}.
EFunction b2_pair_sum(int m);

/// Y = sum_T b(J,K,L) e_{JKL} + sum_A w_I e_I.
EFunction y_fun(int m);

/// sum over T with K >= L and g >= 0 of g w'_J w'_K w'_L e_{JKL}.
EFunction nonnegative_triple_sum(int m);

/// W = sum_A w_I e_I + sum over T1..T4 of g w'_J w'_K w'_L e_{JKL}.
EFunction w_fun(int m);

/// Smallest k1 j1 - 2 j1 + 1 over C_{4m+2} x C_{2m+1}.
std::int64_t x1_min_cross_coefficient(int m);

/// Smallest p1 q1 - p1 - q1 over the B2 pairs.
std::int64_t b2_min_coefficient(int m);

struct IdentityCheck {
  std::string name;
  int m = 0;
  bool holds = false;
  /// lhs - rhs; zero exactly when the identity holds.
  EFunction difference;
  std::vector<std::string> notes;
};

/// spider4m_csf(m) == e1^2 * e1_squared_part + e1 * X1 + X0.
IdentityCheck check_lemma_x0(int m);

/// X0 == b2_pair_sum + Y.
IdentityCheck check_lemma_y(int m);
inline bool verify_lemma_y(int m) { return check_lemma_y(m).holds; }

/// Y == nonnegative_triple_sum + W, and the union of T1..T4 equals
/// {(J,K,L) in T : K >= L, f(j1,k1,l1) < 0}.
IdentityCheck check_lemma_t1234(int m);

// ---------------------------------------------------------------------------
// Structural supersets of the injection images

enum class SLabel { kS1, kS2, kS3, kS41, kS42 };
inline constexpr SLabel kAllSLabels[] = {SLabel::kS1, SLabel::kS2, SLabel::kS3, SLabel::kS41, SLabel::kS42};

std::string to_string(SLabel label);

/// S2 as stated with the last part of Q at least 4 (strict) or with any even
/// last part (relaxed).
enum class S2Variant { kStrict, kRelaxed };

/// A split I = PQR given by part indices: P = [0, p_end), Q = [p_end, q_end),
/// R = [q_end, length).
struct Factorization {
  std::size_t p_end = 0;
  std::size_t q_end = 0;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// All splits of I that satisfy the conditions of the labelled set. P is
/// pinned by its size; for S3, S41 and S42 every Q/R boundary is tried, so
/// the caller can check that at most one qualifies.
std::vector<Factorization> s_factorizations(Parts i, SLabel label, int m, S2Variant variant = S2Variant::kStrict);

bool s_membership(Parts i, SLabel label, int m, S2Variant variant = S2Variant::kStrict);

}  // namespace epos
