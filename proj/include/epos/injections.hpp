#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epos/composition.hpp"
#include "epos/decomposition.hpp"

namespace epos {

// Every map below takes a triple (J, K, L) of T and throws DomainError when
// the triple lies outside the map's domain. The images are compositions of
// n = 6m+4 with the same underlying partition as JKL.

/// Domain T1: j1 = 2, k1 = l1 = 3, K >= L.
Composition phi1(Parts j, Parts k, Parts l);
/// Domain T2: l1 = 2, f(j1, k1, 2) < 0, k1 even and at least 4.
Composition phi2(Parts j, Parts k, Parts l);
/// Domain T3: l1 = 2, f(j1, k1, 2) < 0, k1 odd.
Composition phi3(Parts j, Parts k, Parts l);

/// U(K), the rotation of the longest odd suffix to the front.
inline Composition u_rotation(Parts k) { return rotate_longest_odd_suffix(k); }

/// Membership in T41 among triples with k1 = l1 = 2:
/// f(L) - 1 <= l(U(K)) - lo(U(K)).
bool in_t41(Parts j, Parts k, Parts l);

/// Domain T41 and T42 respectively.
Composition phi41(Parts j, Parts k, Parts l);
Composition phi42(Parts j, Parts k, Parts l);
/// Dispatches on T41 / T42; domain T4' = {k1 = l1 = 2}, with no order on K, L.
Composition phi4(Parts j, Parts k, Parts l);

/// w_image / (w'_J w'_K w'_L) + f(j1, k1, l1). The division is checked to be
/// exact (InvariantViolation otherwise).
std::int64_t c1(Parts j, Parts k, Parts l);
std::int64_t c2(Parts j, Parts k, Parts l);
std::int64_t c3(Parts j, Parts k, Parts l);
/// For K > L both images phi4(J,K,L) and phi4(J,L,K) enter; for K = L the
/// single image enters against f/2. Domain T4.
std::int64_t c4(Parts j, Parts k, Parts l);

struct Triple {
  Composition j;
  Composition k;
  Composition l;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Inverses reconstructed from an image alone, following the injectivity
/// arguments. They return nothing when the composition is not of the shape
/// the map produces for the given m.
std::optional<Triple> phi1_inverse(Parts image, int m);
std::optional<Triple> phi2_inverse(Parts image, int m);
std::optional<Triple> phi3_inverse(Parts image, int m);
std::optional<Triple> phi41_inverse(Parts image, int m);
std::optional<Triple> phi42_inverse(Parts image, int m);

/// The bar reading of q_lo for an image of phi41: bar after the first part
/// whose prefix sum reaches 4m+4; the nearest odd part left of the bar.
std::optional<int> bar_reading_q_lo(Parts image, int m);

struct MapCheck {
  std::string name;
  std::uint64_t domain_size = 0;
  std::uint64_t duplicate_images = 0;
  std::uint64_t outside_a = 0;
  std::uint64_t outside_s = 0;
  std::uint64_t partition_changed = 0;
  std::uint64_t round_trip_failures = 0;
  std::uint64_t coefficient_failures = 0;
  /// Range of the map's coefficient c_i over its domain, when nonempty.
  std::optional<std::int64_t> min_coefficient;
  std::optional<std::int64_t> max_coefficient;
  std::vector<std::string> witnesses;

  bool passed() const {
    return duplicate_images == 0 && outside_a == 0 && outside_s == 0 && partition_changed == 0 &&
           round_trip_failures == 0 && coefficient_failures == 0;
  }
};

struct InjectionReport {
  int m = 0;
  /// phi1, phi2, phi3, phi41, phi42 in that order. The phi4 entries cover
  /// T4', and their coefficient check is c4 = 0 over T4.
  std::vector<MapCheck> maps;
  /// Images shared between different maps.
  std::uint64_t cross_duplicates = 0;
  /// The stronger bound c3 >= 2, which the positivity argument does not
  /// need (c3 >= 0 suffices). A witness is kept when it fails.
  bool c3_at_least_two = true;
  std::optional<std::string> c3_witness;
  /// Agreement of bar_reading_q_lo with q_lo over the phi41 images.
  std::uint64_t bar_reading_agreements = 0;
  std::uint64_t bar_reading_disagreements = 0;
  std::vector<std::string> witnesses;

  bool verdict() const;
};

/// Applies every map to its whole domain for this m.
InjectionReport verify_injections(int m);

struct DisjointnessReport {
  int m = 0;
  S2Variant variant = S2Variant::kStrict;
  std::uint64_t scanned = 0;
  /// Member counts in the order of kAllSLabels.
  std::vector<std::uint64_t> members;
  std::uint64_t overlaps = 0;
  std::uint64_t separation_failures = 0;
  std::uint64_t ambiguous_factorizations = 0;
  std::vector<std::string> witnesses;

  bool verdict() const { return overlaps == 0 && separation_failures == 0 && ambiguous_factorizations == 0; }
};

/// Scans C_n: at most one S-set per composition, surplus at 2m+2 equal to 1
/// on S1 and 0 on the others, and at most one factorization per set.
DisjointnessReport verify_disjointness(int m, S2Variant variant = S2Variant::kStrict);

}  // namespace epos
