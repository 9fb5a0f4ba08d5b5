#include <gtest/gtest.h>

#include <set>

#include "epos/certify.hpp"
#include "epos/decomposition.hpp"
#include "epos/expansions.hpp"

namespace epos {
namespace {

TEST(Certify, VerdictAndInvariantsForSmallM) {
  for (int m = 1; m <= 3; ++m) {
    const Certificate cert = certify(m);
    EXPECT_TRUE(cert.verdict) << m;
    EXPECT_TRUE(cert.identity_checked);
    EXPECT_TRUE(cert.spider_e_positive);
    EXPECT_TRUE(cert.witnesses.empty());

    std::array<std::uint64_t, 4> expected_counts{};
    for (const auto& t : classify_triples(m)) {
      if (t.cls != TripleClass::kUnmatched) ++expected_counts[static_cast<std::size_t>(t.cls)];
    }
    EXPECT_EQ(cert.group_count, expected_counts);
    EXPECT_EQ(cert.groups.size(), expected_counts[0] + expected_counts[1] + expected_counts[2] + expected_counts[3]);

    std::set<Composition> seen;
    for (const auto& group : cert.groups) {
      EXPECT_GE(group.net, 0);
      if (group.triple.cls == TripleClass::kT4) EXPECT_EQ(group.net, 0);
      const Partition lambda(concat({group.triple.j, group.triple.k, group.triple.l}).parts());
      for (const auto& image : group.images) {
        EXPECT_EQ(Partition(image.parts()), lambda);
        EXPECT_TRUE(membership(image, BSet::kA, m));
        EXPECT_TRUE(seen.insert(image).second) << image.to_string();
      }
    }
  }
}

// W regrouped: the group nets plus the untouched A-terms give W back.
TEST(Certify, GroupsAccountForAllOfW) {
  for (int m = 1; m <= 3; ++m) {
    const Certificate cert = certify(m);
    std::set<Composition> used;
    EFunction regrouped;
    for (const auto& group : cert.groups) {
      regrouped.add_term(concat({group.triple.j, group.triple.k, group.triple.l}), group.net);
      used.insert(group.images.begin(), group.images.end());
    }
    std::uint64_t leftover = 0;
    Coeff leftover_weight = 0;
    CompositionSpace::min2(spider_order(m)).for_each([&](Parts i) {
      if (!membership(i, BSet::kA, m) || used.contains(Composition(i))) return;
      regrouped.add_term(i, weight(i));
      ++leftover;
      leftover_weight += weight(i);
    });
    EXPECT_EQ(regrouped, w_fun(m)) << m;
    EXPECT_EQ(cert.leftover_a_count, leftover);
    EXPECT_EQ(cert.leftover_a_weight, leftover_weight);
    EXPECT_TRUE(is_e_positive(regrouped));
  }
}

TEST(Certify, SpiderIsEPositiveByDirectExpansion) {
  for (int m = 1; m <= 4; ++m) EXPECT_TRUE(is_e_positive(spider4m_csf(m))) << m;
}

}  // namespace
}  // namespace epos
