#include <gtest/gtest.h>

#include <random>

#include "epos/efunction.hpp"
#include "epos/errors.hpp"
#include "epos/expansions.hpp"
#include "oracles.hpp"

namespace epos {
namespace {

EFunction random_function(std::mt19937& rng, int degree) {
  EFunction f;
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> terms(0, 4);
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<int> parts;
    int rest = degree;
    while (rest > 0) {
      const int p = std::uniform_int_distribution<int>(1, rest)(rng);
      parts.push_back(p);
      rest -= p;
    }
    f.add_term(Parts(parts), coeff(rng));
  }
  return f;
}

bool no_zero_terms(const EFunction& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second != 0; });
}

TEST(ETerm, Examples) {
  const EFunction a = EFunction::term(Composition{1, 2}, 1);
  EXPECT_EQ(a.size(), 1U);
  EXPECT_EQ(a.coeff(Partition{2, 1}), 1);
  EXPECT_EQ(EFunction::term(Composition{6, 2, 1, 1}, 7).coeff(Partition{6, 2, 1, 1}), 7);
  EXPECT_EQ(EFunction::term(Composition{3, 3}, -2).coeff(Partition{3, 3}), -2);
  EXPECT_TRUE(EFunction::term(Composition{3}, 0).is_zero());
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(EFunction::term(Partition{2, 1}) * EFunction::term(Partition{2}), EFunction::term(Partition{2, 2, 1}));
  EXPECT_TRUE(add(EFunction::term(Partition{3}, 3), EFunction::term(Partition{3}, -3)).is_zero());
  EFunction expected;
  expected.add_term(Partition{3, 1}, 3);
  expected.add_term(Partition{2, 1, 1}, 1);
  EXPECT_EQ(mul(path_csf_e(1), path_csf_e(3)), expected);
  EXPECT_EQ(scale(expected, 2).coeff(Partition{3, 1}), 6);
  EXPECT_TRUE(scale(expected, 0).is_zero());
}

TEST(Arithmetic, RingLawsOnRandomInputs) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const EFunction a = random_function(rng, 4);
    const EFunction b = random_function(rng, 4);
    const EFunction c = random_function(rng, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(scale(a * b, 3), scale(a, 3) * b);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE(no_zero_terms(a * b - b * c));
    if (!a.is_zero() && !c.is_zero()) {
      const auto product = a * c;
      if (!product.is_zero()) EXPECT_EQ(product.degree(), 7);
    }
  }
}

TEST(Degree, HomogeneityReporting) {
  EXPECT_FALSE(EFunction{}.degree().has_value());
  EXPECT_TRUE(EFunction{}.is_homogeneous());
  EFunction mixed = EFunction::term(Partition{3}) + EFunction::term(Partition{2});
  EXPECT_FALSE(mixed.degree().has_value());
  EXPECT_FALSE(mixed.is_homogeneous());
  EXPECT_EQ(path_csf_e(7).degree(), 7);
}

TEST(Positivity, ReportsViolators) {
  EFunction positive = EFunction::term(Partition{3}, 3) + EFunction::term(Partition{2, 1}, 1);
  EXPECT_TRUE(is_e_positive(positive));
  EXPECT_TRUE(negative_terms(positive).empty());
  const EFunction negative = EFunction::term(Partition{2, 2}, -1);
  EXPECT_FALSE(is_e_positive(negative));
  const auto bad = negative_terms(negative);
  ASSERT_EQ(bad.size(), 1U);
  EXPECT_EQ(bad[0].first, Partition({2, 2}));
  EXPECT_EQ(bad[0].second, -1);
}

TEST(Order, CanonicalTermOrder) {
  EFunction f = path_csf_e(4);
  std::vector<std::string> order;
  for (const auto& [lambda, c] : f.terms()) order.push_back(lambda.to_string());
  EXPECT_EQ(order, (std::vector<std::string>{"4", "3,1", "2,2"}));
  const EFunction mixed = path_csf_e(3) * EFunction::term(Partition{1}) + path_csf_e(4);
  order.clear();
  for (const auto& [lambda, c] : mixed.terms()) order.push_back(lambda.to_string());
  EXPECT_EQ(order, (std::vector<std::string>{"4", "3,1", "2,2", "2,1,1"}));
  EXPECT_EQ(to_pretty(path_csf_e(3)), "3·e[3] + 1·e[2,1]");
  EXPECT_EQ(to_pretty(EFunction{}), "0");
  EXPECT_EQ(to_pretty(EFunction::term(Partition{2}, -2) + EFunction::term(Partition{1, 1}, 1)), "-2·e[2] + 1·e[1,1]");
}

TEST(PowerSums, Examples) {
  EXPECT_EQ(p_to_e(1), EFunction::term(Partition{1}));
  EXPECT_EQ(p_to_e(2), EFunction::term(Partition{1, 1}) - EFunction::term(Partition{2}, 2));
  EXPECT_EQ(p_to_e(3), EFunction::term(Partition{1, 1, 1}) - EFunction::term(Partition{2, 1}, 3) +
                           EFunction::term(Partition{3}, 3));
  EXPECT_THROW(p_to_e(0), DomainError);
  EXPECT_EQ(p_partition_to_e(Partition{1}), EFunction::term(Partition{1}));
  EXPECT_EQ(p_partition_to_e(Partition{2, 1}), EFunction::term(Partition{1, 1, 1}) - EFunction::term(Partition{2, 1}, 2));
  EXPECT_EQ(p_partition_to_e(Partition{3, 2}), p_to_e(3) * p_to_e(2));
}

TEST(PowerSums, MatchPolynomialExpansionInVariables) {
  for (int r = 1; r <= 6; ++r) {
    EXPECT_EQ(oracle::expand(p_to_e(r), r), oracle::power_sum(r, r)) << "r=" << r;
  }
  // A product, checked with one spare variable.
  const auto lhs = oracle::expand(p_partition_to_e(Partition{3, 2}), 6);
  const auto rhs = oracle::poly_mul(oracle::power_sum(3, 6), oracle::power_sum(2, 6));
  EXPECT_EQ(lhs, rhs);
}

}  // namespace
}  // namespace epos
