// Acceptance run: one PASS/FAIL line per criterion, with the runtime limits
// pinned below. Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "epos/certify.hpp"
#include "epos/decomposition.hpp"
#include "epos/expansions.hpp"
#include "epos/graph_oracle.hpp"
#include "epos/injections.hpp"
#include "fixtures.hpp"

namespace {

using namespace epos;
using Clock = std::chrono::steady_clock;
using Seconds = std::chrono::duration<double>;

constexpr Seconds kLimit1{0.010};
constexpr Seconds kLimit2{1.0};
constexpr Seconds kLimit3{30.0};
constexpr Seconds kLimit4{120.0};
constexpr Seconds kLimit5{10.0};
constexpr Seconds kLimit6{120.0};
constexpr Seconds kLimit7{60.0};
constexpr Seconds kLimit8{300.0};
constexpr Seconds kLimit9{1.0};

// Collects failed sub-checks for one criterion.
struct Findings {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool run_criterion(int number, const std::string& title, Seconds limit, const std::function<void(Findings&)>& body) {
  Findings findings;
  const auto start = Clock::now();
  try {
    body(findings);
  } catch (const std::exception& e) {
    findings.failures.push_back(std::string("exception: ") + e.what());
  }
  const Seconds elapsed = Clock::now() - start;
  if (elapsed > limit) {
    std::ostringstream msg;
    msg << "runtime " << elapsed.count() << " s exceeds " << limit.count() << " s";
    findings.failures.push_back(msg.str());
  }
  const bool ok = findings.failures.empty();
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title << " (" << elapsed.count()
            << " s, limit " << limit.count() << " s)\n";
  for (const auto& f : findings.failures) std::cout << "       - " << f << "\n";
  return ok;
}

void criterion1(Findings& out) {
  const EFunction expected = EFunction::term(Partition{3}, 3) + EFunction::term(Partition{2, 1}, 1);
  out.require(path_csf_e(3) == expected, "X(P3) != 3e3 + e21");
}

void criterion2(Findings& out) {
  const EFunction x = spider_csf_e(6, 2, 1);
  out.require(x == fixtures::spider621(), "S(6,2,1) differs from the 26-term table");
  out.require(x.size() == 26, "term count != 26");
  out.require(x.coeff(Partition{4, 3, 3}) == 1, "coeff e433 != 1");
  out.require(x.coeff(Partition{2, 2, 2, 2, 2}) == 2, "coeff e22222 != 2");
}

void criterion3(Findings& out) {
  for (int n = 1; n <= 12; ++n) {
    out.require(path_csf_e(n) == csf_subset_expansion(path_graph(n)), "path n=" + std::to_string(n));
  }
  for (int a = 1; a <= 9; ++a) {
    for (int b = 1; b <= a; ++b) {
      for (int c = 1; c <= b && a + b + c + 1 <= 12; ++c) {
        const std::vector<int> legs{a, b, c};
        out.require(spider_csf_e(a, b, c) == csf_subset_expansion(spider_graph(legs)),
                    "spider " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
      }
    }
  }
}

void criterion4(Findings& out) {
  for (int m = 1; m <= 3; ++m) {
    const std::string tag = " m=" + std::to_string(m);
    out.require(check_lemma_x0(m).holds, "first recomposition" + tag);
    out.require(check_lemma_y(m).holds, "second recomposition" + tag);
    out.require(check_lemma_t1234(m).holds, "third recomposition" + tag);
  }
}

void criterion5(Findings& out) {
  out.require(f_poly(3, 3, 3) == 0 && f_poly(2, 3, 4) == 0 && f_poly(2, 4, 3) == 0, "named zeros of f");
  out.require(f_poly(2, 3, 3) == -2, "f(2,3,3) != -2");
  for (int j = 2; j <= 40; ++j) out.require(f_poly(j, 2, 2) == -2 * j, "f(j,2,2) at j=" + std::to_string(j));
  std::uint64_t violations = 0;
  for (int j = 2; j <= 40; ++j) {
    for (int k = 2; k <= 40; ++k) {
      for (int l = 2; l <= 40; ++l) {
        const bool excepted = (j == 2 && k == 3 && l == 3) || std::min(k, l) == 2;
        if (!excepted && f_poly(j, k, l) < 0) ++violations;
      }
    }
  }
  out.require(violations == 0, std::to_string(violations) + " negative values outside the exceptions");
}

void criterion6(Findings& out) {
  using C = Composition;
  out.require(phi1(C{2, 6}, C{3, 4}, C{3, 2, 2}) == C{3, 6, 3, 4, 2, 2, 2}, "phi1 example 1");
  out.require(phi1(C{2, 4, 2}, C{3, 4}, C{3, 2, 2}) == C{2, 4, 3, 3, 4, 2, 2, 2}, "phi1 example 2");
  out.require(phi2(C{8}, C{4, 3}, C{2, 3, 2}) == C{8, 2, 3, 4, 3, 2}, "phi2 example");
  out.require(phi3(C{8, 6}, C{3, 4, 3, 3}, C{2, 3, 2, 6}) == C{8, 6, 4, 3, 3, 2, 3, 3, 2, 6}, "phi3 example 1");
  out.require(phi3(C{8, 6}, C{3, 4, 2, 2, 2}, C{2, 3, 2, 6}) == C{8, 6, 4, 2, 2, 2, 2, 3, 3, 2, 6}, "phi3 example 2");
  out.require(phi42(C{8, 6}, C{2, 2, 3, 3, 3}, C{2, 2, 2, 2, 3, 2}) == C{8, 6, 3, 3, 2, 2, 2, 2, 3, 2, 2, 3, 2},
              "phi42 example");
  // Order-preserving rotation of the odd suffix. Reversing that suffix
  // instead would give 8,6,5,3,3,3,2,2,2,2,2,2.
  out.require(phi41(C{8, 6}, C{2, 3, 3, 5}, C{2, 3, 2, 2, 2, 2}) == C{8, 6, 3, 3, 5, 3, 2, 2, 2, 2, 2, 2},
              "phi41 example");
  for (int m = 1; m <= 5; ++m) {
    const std::string tag = " m=" + std::to_string(m);
    const InjectionReport report = verify_injections(m);
    for (const auto& map : report.maps) {
      out.require(map.duplicate_images == 0, map.name + " not injective" + tag);
      out.require(map.outside_a == 0 && map.outside_s == 0, map.name + " image outside A or S" + tag);
      out.require(map.partition_changed == 0, map.name + " changes the partition" + tag);
      out.require(map.coefficient_failures == 0, map.name + " coefficient check" + tag);
    }
    out.require(report.cross_duplicates == 0, "images shared between maps" + tag);
    const auto& c1_range = report.maps[0];
    if (c1_range.min_coefficient) {
      out.require(*c1_range.min_coefficient >= 4 && *c1_range.max_coefficient <= 6, "c1 outside {4,6}" + tag);
    }
    if (report.maps[1].min_coefficient) out.require(*report.maps[1].min_coefficient >= 2, "c2 < 2" + tag);
    out.require(report.c3_at_least_two, "c3 >= 2 fails" + tag + " at " + report.c3_witness.value_or("?"));
  }
}

void criterion7(Findings& out) {
  for (int m = 1; m <= 4; ++m) {
    const DisjointnessReport report = verify_disjointness(m);
    const std::string tag = " m=" + std::to_string(m);
    out.require(report.scanned == count_min2(spider_order(m)), "scan incomplete" + tag);
    out.require(report.overlaps == 0, "S-sets overlap" + tag);
    out.require(report.separation_failures == 0, "surplus separation" + tag);
    out.require(report.ambiguous_factorizations == 0, "ambiguous factorization" + tag);
  }
}

void criterion8(Findings& out) {
  for (int m = 1; m <= 3; ++m) {
    const Certificate cert = certify(m);
    const std::string tag = " m=" + std::to_string(m);
    out.require(cert.verdict, "certificate verdict" + tag);
    out.require(cert.identity_checked, "recomposition" + tag);
    for (const auto& group : cert.groups) {
      if (group.triple.cls == TripleClass::kT4) {
        out.require(group.net == 0, "T4 net nonzero at " + group.triple.to_string());
      } else {
        out.require(group.net >= 0, "negative net at " + group.triple.to_string());
      }
    }
  }
  for (int m = 1; m <= 4; ++m) {
    out.require(is_e_positive(spider4m_csf(m)), "spider not e-positive m=" + std::to_string(m));
  }
}

void criterion9(Findings& out) {
  const Composition p{18, 18, 3, 2, 2};
  const Composition q{18, 3};
  out.require(surplus(p, 21) >= 2, "surplus of P at 21 below 2");
  out.require(in_b2_pairs(p, q, 10), "(P, Q) not in the first sum at m=10");
  out.require(in_triple_set(Composition{18, 2, 2}, q, q, 10), "triple not in T at m=10");
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "path P3 expansion", kLimit1, criterion1);
  all &= run_criterion(2, "S(6,2,1) table", kLimit2, criterion2);
  all &= run_criterion(3, "formulas agree with the subset oracle", kLimit3, criterion3);
  all &= run_criterion(4, "decomposition identities, m=1..3", kLimit4, criterion4);
  all &= run_criterion(5, "facts about f", kLimit5, criterion5);
  all &= run_criterion(6, "injections, m=1..5", kLimit6, criterion6);
  all &= run_criterion(7, "S-set disjointness, m=1..4", kLimit7, criterion7);
  all &= run_criterion(8, "certificates m=1..3, positivity m=1..4", kLimit8, criterion8);
  all &= run_criterion(9, "m=10 membership fixtures", kLimit9, criterion9);
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
