#include "epos/certify.hpp"

#include <algorithm>

#include "epos/errors.hpp"
#include "epos/expansions.hpp"
#include "epos/injections.hpp"
#include "epos/parallel.hpp"

namespace epos {

namespace {

constexpr std::size_t kWitnessLimit = 16;

void witness(Certificate& cert, std::string what) {
  if (cert.witnesses.size() < kWitnessLimit) cert.witnesses.push_back(std::move(what));
}

std::vector<Composition> images_for(const Composition& j, const Composition& k, const Composition& l,
                                    TripleClass cls) {
  switch (cls) {
    case TripleClass::kT1: return {phi1(j, k, l)};
    case TripleClass::kT2: return {phi2(j, k, l)};
    case TripleClass::kT3: return {phi3(j, k, l)};
    case TripleClass::kT4:
      if (alpha_compare(k, l) == 0) return {phi4(j, k, l)};
      return {phi4(j, k, l), phi4(j, l, k)};
    case TripleClass::kUnmatched: break;
  }
  return {};
}

std::vector<CertificateGroup> build_groups(int m) {
  const TripleSpace space(m);
  return map_reduce(
      space.js.size(), std::vector<CertificateGroup>{},
      [&](std::size_t ji) {
        std::vector<CertificateGroup> part;
        const Composition& j = space.js[ji];
        for (const auto& k : space.ks) {
          for (const auto& l : space.ks) {
            const TripleClass cls = classify_triple(j, k, l);
            if (cls == TripleClass::kUnmatched) continue;
            CertificateGroup group{TripleT{j, k, l, cls}, images_for(j, k, l, cls), 0};
            for (const auto& image : group.images) group.net += weight(image);
            const Coeff base = weight_prime(j) * weight_prime(k) * weight_prime(l);
            group.net += Coeff(g_coeff(j.part(1), k.part(1), l.part(1), alpha_compare(k, l))) * base;
            part.push_back(std::move(group));
          }
        }
        return part;
      },
      [](std::vector<CertificateGroup>& acc, std::vector<CertificateGroup> part) {
        acc.insert(acc.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      });
}

struct Leftover {
  EFunction sum;
  std::uint64_t count = 0;
  Coeff weight = 0;
  std::uint64_t nonpositive = 0;
};

Leftover leftover_a(int m, const std::vector<Composition>& used_sorted) {
  const auto shards = CompositionSpace::min2(spider_order(m)).shards(4 * worker_count());
  return map_reduce(
      shards.size(), Leftover{},
      [&](std::size_t s) {
        Leftover part;
        shards[s].for_each([&](Parts i) {
          if (!membership(i, BSet::kA, m)) return;
          if (std::binary_search(used_sorted.begin(), used_sorted.end(), Composition(i))) return;
          const Coeff w = weight(i);
          ++part.count;
          part.weight += w;
          if (w <= 0) ++part.nonpositive;
          part.sum.add_term(i, w);
        });
        return part;
      },
      [](Leftover& acc, const Leftover& part) {
        acc.sum += part.sum;
        acc.count += part.count;
        acc.weight += part.weight;
        acc.nonpositive += part.nonpositive;
      });
}

}  // namespace

Certificate certify(int m) {
  if (m < 1) throw DomainError("m must be positive, got " + std::to_string(m));
  Certificate cert;
  cert.m = m;
  cert.groups = build_groups(m);

  cert.nets_nonnegative = true;
  cert.t4_nets_zero = true;
  cert.images_in_a = true;
  EFunction group_sum;
  std::vector<Composition> used;
  for (const auto& group : cert.groups) {
    const auto index = static_cast<std::size_t>(group.triple.cls);
    ++cert.group_count[index];
    if (group.net == 0) ++cert.zero_net_count;
    if (group.net < 0) {
      cert.nets_nonnegative = false;
      witness(cert, "negative net " + group.net.str() + " at " + group.triple.to_string());
    }
    if (group.triple.cls == TripleClass::kT4 && group.net != 0) {
      cert.t4_nets_zero = false;
      witness(cert, "nonzero T4 net " + group.net.str() + " at " + group.triple.to_string());
    }
    for (const auto& image : group.images) {
      if (!membership(image, BSet::kA, m)) {
        cert.images_in_a = false;
        witness(cert, "image (" + image.to_string() + ") outside A at " + group.triple.to_string());
      }
      used.push_back(image);
    }
    group_sum.add_term(concat({group.triple.j, group.triple.k, group.triple.l}), group.net);
  }

  std::sort(used.begin(), used.end());
  cert.images_unique = true;
  for (std::size_t i = 1; i < used.size(); ++i) {
    if (used[i] != used[i - 1]) continue;
    cert.images_unique = false;
    witness(cert, "image (" + used[i].to_string() + ") used twice");
  }
  used.erase(std::unique(used.begin(), used.end()), used.end());

  const Leftover leftover = leftover_a(m, used);
  cert.leftover_a_count = leftover.count;
  cert.leftover_a_weight = leftover.weight;

  const EFunction e1 = EFunction::term(Partition{1});
  const EFunction e1_squared = e1 * e1 * e1_squared_part(m);
  const EFunction e1_linear = e1 * x1_fun(m);
  const EFunction b2 = b2_pair_sum(m);
  const EFunction nonnegative = nonnegative_triple_sum(m);
  cert.pieces_nonnegative = leftover.nonpositive == 0;
  for (const auto* piece : {&e1_squared, &e1_linear, &b2, &nonnegative}) {
    if (!is_e_positive(*piece)) cert.pieces_nonnegative = false;
  }
  if (!cert.pieces_nonnegative) witness(cert, "a summand of the recomposition has a negative coefficient");

  const EFunction recomposed = e1_squared + e1_linear + b2 + nonnegative + group_sum + leftover.sum;
  const EFunction spider = spider4m_csf(m);
  cert.identity_checked = recomposed == spider;
  if (!cert.identity_checked) witness(cert, "recomposition differs from the spider: " + to_pretty(spider - recomposed).substr(0, 400));
  cert.spider_e_positive = is_e_positive(spider);
  if (!cert.spider_e_positive) witness(cert, "spider has negative coefficients");

  cert.verdict = cert.nets_nonnegative && cert.t4_nets_zero && cert.images_unique && cert.images_in_a &&
                 cert.pieces_nonnegative && cert.identity_checked && cert.spider_e_positive;
  return cert;
}

}  // namespace epos
