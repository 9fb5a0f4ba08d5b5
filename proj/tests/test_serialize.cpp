#include <gtest/gtest.h>

#include "epos/errors.hpp"
#include "epos/expansions.hpp"
#include "epos/serialize.hpp"

namespace epos {
namespace {

TEST(Json, ShapeOfPathThree) {
  const Json doc = to_json(path_csf_e(3));
  EXPECT_EQ(doc["degree"], 3);
  EXPECT_EQ(doc["basis"], "e");
  ASSERT_EQ(doc["terms"].size(), 2U);
  EXPECT_EQ(doc["terms"][0]["partition"], Json::array({3}));
  EXPECT_EQ(doc["terms"][0]["coeff"], "3");
  EXPECT_EQ(doc["terms"][1]["partition"], Json::array({2, 1}));
  EXPECT_TRUE(to_json(EFunction{})["degree"].is_null());
}

TEST(Json, RoundTrip) {
  for (const EFunction& f : {path_csf_e(9), spider4m_csf(1), EFunction{},
                             EFunction::term(Partition{2}, Coeff("-123456789012345678901234567890"))}) {
    const auto text = to_json(f).dump();
    EXPECT_EQ(efunction_from_json(nlohmann::json::parse(text)), f);
  }
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(efunction_from_json(nlohmann::json::parse("[]")), DomainError);
  EXPECT_THROW(efunction_from_json(nlohmann::json::parse(R"({"terms": 3})")), DomainError);
  EXPECT_THROW(efunction_from_json(nlohmann::json::parse(R"({"basis": "p", "terms": []})")), DomainError);
  EXPECT_THROW(efunction_from_json(nlohmann::json::parse(R"({"terms": [{"partition": [2, 0], "coeff": "1"}]})")),
               DomainError);
  EXPECT_THROW(efunction_from_json(nlohmann::json::parse(R"({"terms": [{"partition": [2], "coeff": 1}]})")),
               DomainError);
  EXPECT_THROW(efunction_from_json(nlohmann::json::parse(R"({"terms": [{"partition": [2], "coeff": "1x"}]})")),
               DomainError);
}

TEST(Csv, RoundTripAndFormat) {
  EXPECT_EQ(to_csv(path_csf_e(3)), "partition,coefficient\n3,3\n2 1,1\n");
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(efunction_from_csv(to_csv(path_csf_e(n))), path_csf_e(n));
  EXPECT_EQ(efunction_from_csv(to_csv(spider4m_csf(1))), spider4m_csf(1));
}

TEST(Csv, RejectsMalformedInput) {
  EXPECT_THROW(efunction_from_csv(""), DomainError);
  EXPECT_THROW(efunction_from_csv("parts,coeff\n3,3\n"), DomainError);
  EXPECT_THROW(efunction_from_csv("partition,coefficient\n3 3\n"), DomainError);
  EXPECT_THROW(efunction_from_csv("partition,coefficient\n3 x,1\n"), DomainError);
  EXPECT_THROW(efunction_from_csv("partition,coefficient\n3,\n"), DomainError);
}

TEST(Reports, FlattenedForms) {
  const Json report = to_json(check_lemma_y(1));
  EXPECT_EQ(report["verdict"], true);
  const std::string csv = report_to_csv(report);
  EXPECT_EQ(csv.rfind("key,value\n", 0), 0U);
  EXPECT_NE(csv.find("m,1\n"), std::string::npos);
  EXPECT_NE(csv.find("verdict,true\n"), std::string::npos);
  const std::string text = report_to_text(report);
  EXPECT_NE(text.find("verdict: true\n"), std::string::npos);

  const Json cert = to_json(certify(1));
  EXPECT_EQ(cert["verdict"], true);
  EXPECT_TRUE(cert["witnesses"].empty());
  EXPECT_TRUE(cert["group_count"].contains("T4"));
  const Json inj = to_json(verify_injections(1));
  EXPECT_EQ(inj["maps"].size(), 5U);
}

}  // namespace
}  // namespace epos
