#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "epos/decomposition.hpp"
#include "epos/efunction.hpp"

namespace epos {

/// One negative term g w'_J w'_K w'_L e_{JKL} of W and the A-terms matched
/// against it. Every image has the partition of JKL, so the group adds
/// net * e_{JKL} to W.
struct CertificateGroup {
  TripleT triple;
  std::vector<Composition> images;
  Coeff net;
};

struct Certificate {
  int m = 0;
  std::vector<CertificateGroup> groups;
  /// Groups per class, T1..T4.
  std::array<std::uint64_t, 4> group_count{};
  std::uint64_t zero_net_count = 0;
  /// A-compositions not used as images, and the sum of their weights.
  std::uint64_t leftover_a_count = 0;
  Coeff leftover_a_weight = 0;

  bool nets_nonnegative = false;
  bool t4_nets_zero = false;
  bool images_unique = false;
  bool images_in_a = false;
  /// Every other summand of the final recomposition is termwise nonnegative.
  bool pieces_nonnegative = false;
  /// The full recomposition equals the spider's function.
  bool identity_checked = false;
  bool spider_e_positive = false;
  std::vector<std::string> witnesses;

  bool verdict = false;
};

/// Builds the matching for S(4m+2, 2m, 1) and checks it end to end. Never
/// throws on a failed check; the failure is recorded in the witnesses.
Certificate certify(int m);

}  // namespace epos
