#include <gtest/gtest.h>

#include <stdexcept>
#include <string>

#include "epos/certify.hpp"
#include "epos/decomposition.hpp"
#include "epos/expansions.hpp"
#include "epos/parallel.hpp"

namespace epos {
namespace {

class WorkerGuard {
 public:
  explicit WorkerGuard(unsigned w) { set_worker_count(w); }
  ~WorkerGuard() { set_worker_count(0); }
  WorkerGuard(const WorkerGuard&) = delete;
  WorkerGuard& operator=(const WorkerGuard&) = delete;
};

TEST(MapReduce, FoldsInTaskOrder) {
  for (unsigned workers : {1U, 2U, 7U}) {
    WorkerGuard guard(workers);
    const std::string joined = map_reduce(
        20, std::string{}, [](std::size_t i) { return std::to_string(i) + ";"; },
        [](std::string& acc, std::string v) { acc += v; });
    std::string expected;
    for (int i = 0; i < 20; ++i) expected += std::to_string(i) + ";";
    EXPECT_EQ(joined, expected) << workers;
  }
  WorkerGuard guard(4);
  EXPECT_EQ(map_reduce(0, 5, [](std::size_t) { return 1; }, [](int& a, int v) { a += v; }), 5);
}

TEST(MapReduce, PropagatesExceptions) {
  for (unsigned workers : {1U, 3U}) {
    WorkerGuard guard(workers);
    EXPECT_THROW(map_reduce(
                     10, 0,
                     [](std::size_t i) {
                       if (i == 6) throw std::runtime_error("boom");
                       return 1;
                     },
                     [](int& a, int v) { a += v; }),
                 std::runtime_error);
  }
}

TEST(WorkerCount, OverrideAndReset) {
  {
    WorkerGuard guard(3);
    EXPECT_EQ(worker_count(), 3U);
  }
  EXPECT_GE(worker_count(), 1U);
}

TEST(Determinism, ResultsDoNotDependOnWorkers) {
  EFunction w_one;
  EFunction x_one;
  Certificate cert_one;
  {
    WorkerGuard guard(1);
    w_one = w_fun(2);
    x_one = x0_fun(2);
    cert_one = certify(2);
  }
  WorkerGuard guard(5);
  EXPECT_EQ(w_fun(2), w_one);
  EXPECT_EQ(x0_fun(2), x_one);
  const Certificate cert_many = certify(2);
  ASSERT_EQ(cert_many.groups.size(), cert_one.groups.size());
  for (std::size_t g = 0; g < cert_one.groups.size(); ++g) {
    EXPECT_EQ(cert_many.groups[g].triple, cert_one.groups[g].triple);
    EXPECT_EQ(cert_many.groups[g].images, cert_one.groups[g].images);
    EXPECT_EQ(cert_many.groups[g].net, cert_one.groups[g].net);
  }
}

}  // namespace
}  // namespace epos
