#include "epos/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "epos/errors.hpp"
#include "epos/expansions.hpp"
#include "epos/fault.hpp"
#include "epos/parallel.hpp"

namespace epos {

namespace {

void require_m(int m) {
  if (m < 1) throw DomainError("m must be positive, got " + std::to_string(m));
}

// w_{1I}: the weight of I with a part 1 prepended.
Coeff one_prefixed_weight(Parts i) {
  Coeff w = 1;
  for (int p : i) w *= p - 1;
  return w;
}

Coeff triple_weight_prime(Parts j, Parts k, Parts l) { return weight_prime(j) * weight_prime(k) * weight_prime(l); }

// Sums `visit(parts, acc)` over a composition space, split across workers.
template <class Visit>
EFunction sum_over(const CompositionSpace& space, Visit visit) {
  const auto shards = space.shards(4 * worker_count());
  return map_reduce(
      shards.size(), EFunction{},
      [&](std::size_t s) {
        EFunction part;
        shards[s].for_each([&](Parts parts) { visit(parts, part); });
        return part;
      },
      [](EFunction& acc, const EFunction& part) { acc += part; });
}

// Sums `visit(j, k, l, acc)` over T, one task per J.
template <class Visit>
EFunction sum_over_triples(const TripleSpace& space, Visit visit) {
  return map_reduce(
      space.js.size(), EFunction{},
      [&](std::size_t ji) {
        EFunction part;
        const Composition& j = space.js[ji];
        for (const auto& k : space.ks) {
          for (const auto& l : space.ks) visit(j, k, l, part);
        }
        return part;
      },
      [](EFunction& acc, const EFunction& part) { acc += part; });
}

std::vector<int> prefix_sums(Parts parts) {
  std::vector<int> sums(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) sums[i + 1] = sums[i] + parts[i];
  return sums;
}

std::optional<std::size_t> index_of_sum(const std::vector<int>& sums, int value) {
  const auto it = std::lower_bound(sums.begin(), sums.end(), value);
  if (it == sums.end() || *it != value) return std::nullopt;
  return static_cast<std::size_t>(it - sums.begin());
}

Parts slice(Parts parts, std::size_t begin, std::size_t end) { return parts.subspan(begin, end - begin); }

constexpr unsigned kT1Bit = 1U << 0U;
constexpr unsigned kT2Bit = 1U << 1U;
constexpr unsigned kT3Bit = 1U << 2U;
constexpr unsigned kT4Bit = 1U << 3U;

// Bitmask of the class predicates satisfied by (J, K, L), each evaluated
// independently of the others.
unsigned class_predicates(Parts j, Parts k, Parts l) {
  const int j1 = j[0];
  const int k1 = k[0];
  const int l1 = l[0];
  const bool k_ge_l = alpha_compare(k, l) >= 0;
  unsigned bits = 0;
  if (l1 == 3 && k1 == 3 && j1 == 2 && k_ge_l) bits |= kT1Bit;
  if (l1 == 2 && f_poly(j1, k1, 2) < 0 && k1 % 2 == 0 && k1 >= 4) bits |= kT2Bit;
  if (l1 == 2 && f_poly(j1, k1, 2) < 0 && k1 % 2 != 0) bits |= kT3Bit;
  if (l1 == 2 && k1 == 2 && k_ge_l) bits |= kT4Bit;
  return bits;
}

}  // namespace

std::int64_t f_poly(std::int64_t j, std::int64_t k, std::int64_t l) {
  return 2 * j * k * l - 3 * j * k - 3 * j * l - 2 * k * l + 2 * j + 2 * k + 2 * l;
}

std::int64_t g_coeff(std::int64_t j, std::int64_t k, std::int64_t l, std::strong_ordering cmp) {
  const std::int64_t f = f_poly(j, k, l);
  if (cmp > 0) return f;
  if (cmp < 0) throw DomainError("g is only defined for K >= L");
  if (f % 2 != 0) {
    throw InvariantViolation("f(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) +
                             ") is odd although K = L");
  }
  return f / 2;
}

Coeff b_coeff(Parts j, Parts k, Parts l) {
  return weight(concat({j, k, l})) + weight(concat({k, j, l})) + weight(concat({k, l, j})) -
         weight(concat({j, k})) * weight(l) - weight(concat({k, j})) * weight(l);
}

std::string to_string(BSet set) {
  switch (set) {
    case BSet::kA: return "A";
    case BSet::kB1: return "B1";
    case BSet::kB2: return "B2";
    case BSet::kB1Prime: return "B1'";
    case BSet::kB2Prime: return "B2'";
  }
  return "?";
}

bool membership(Parts i, BSet which, int m) {
  require_m(m);
  if (total(i) != spider_order(m)) {
    throw DomainError("composition total " + std::to_string(total(i)) + " differs from n = " +
                      std::to_string(spider_order(m)));
  }
  const int low = surplus(i, 2 * m + 1);
  const int mid = surplus(i, 4 * m + 2);
  switch (which) {
    case BSet::kA: return low != 0 && surplus(i, 4 * m + 3) != 0;
    case BSet::kB1: return low <= 1 && mid == 1;
    case BSet::kB2: return low >= 2 && mid == 1;
    case BSet::kB1Prime: return low == 0 && mid == 0;
    case BSet::kB2Prime: return low == 0 && mid >= 2;
  }
  return false;
}

BSet classify_composition(Parts i, int m) {
  std::optional<BSet> found;
  for (BSet set : {BSet::kA, BSet::kB1, BSet::kB2, BSet::kB1Prime, BSet::kB2Prime}) {
    if (!membership(i, set, m)) continue;
    if (found) throw InvariantViolation("composition " + Composition(i).to_string() + " lies in two B-sets");
    found = set;
  }
  if (!found) throw InvariantViolation("composition " + Composition(i).to_string() + " lies in no B-set");
  return *found;
}

bool in_triple_set(Parts j, Parts k, Parts l, int m) {
  auto in_c = [](Parts parts, int size) {
    return !parts.empty() && total(parts) == size && std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 2; });
  };
  return in_c(j, 2 * m + 2) && in_c(k, 2 * m + 1) && in_c(l, 2 * m + 1);
}

bool in_b2_pairs(Parts p, Parts q, int m) {
  auto in_c = [](Parts parts, int size) {
    return !parts.empty() && total(parts) == size && std::all_of(parts.begin(), parts.end(), [](int x) { return x >= 2; });
  };
  return in_c(p, 4 * m + 3) && in_c(q, 2 * m + 1) && surplus(p, 2 * m + 1) >= 2;
}

std::string to_string(TripleClass cls) {
  switch (cls) {
    case TripleClass::kT1: return "T1";
    case TripleClass::kT2: return "T2";
    case TripleClass::kT3: return "T3";
    case TripleClass::kT4: return "T4";
    case TripleClass::kUnmatched: return "unmatched";
  }
  return "?";
}

std::string TripleT::to_string() const {
  return "J=(" + j.to_string() + ") K=(" + k.to_string() + ") L=(" + l.to_string() + ")";
}

TripleClass classify_triple(Parts j, Parts k, Parts l) {
  switch (class_predicates(j, k, l)) {
    case 0: return TripleClass::kUnmatched;
    case kT1Bit: return TripleClass::kT1;
    case kT2Bit: return TripleClass::kT2;
    case kT3Bit: return TripleClass::kT3;
    case kT4Bit: return TripleClass::kT4;
    default:
      throw InvariantViolation("triple " + TripleT{Composition(j), Composition(k), Composition(l)}.to_string() +
                               " satisfies two class predicates");
  }
}

TripleSpace::TripleSpace(int m_in) : m(m_in) {
  require_m(m);
  js = CompositionSpace::min2(2 * m + 2).collect();
  ks = CompositionSpace::min2(2 * m + 1).collect();
}

std::vector<TripleT> classify_triples(int m) {
  const TripleSpace space(m);
  std::vector<TripleT> out;
  out.reserve(space.size());
  for (const auto& j : space.js) {
    for (const auto& k : space.ks) {
      for (const auto& l : space.ks) out.push_back(TripleT{j, k, l, classify_triple(j, k, l)});
    }
  }
  return out;
}

EFunction e1_squared_part(int m) {
  require_m(m);
  const int n = spider_order(m);
  return sum_over(CompositionSpace::min2(n - 2), [&](Parts i, EFunction& acc) {
    if (surplus(i, 4 * m + 2) >= 1) acc.add_term(i, one_prefixed_weight(i));
  });
}

EFunction x1_fun(int m) {
  require_m(m);
  const int n = spider_order(m);
  EFunction out = sum_over(CompositionSpace::min2(n - 1), [&](Parts i, EFunction& acc) {
    const int theta = surplus(i, 4 * m + 2);
    if (theta >= 2) acc.add_term(i, weight(i));
    if (theta >= 1) acc.add_term(i, one_prefixed_weight(i));
  });
  const auto js = CompositionSpace::min2(4 * m + 2).collect();
  const auto ks = CompositionSpace::min2(2 * m + 1).collect();
  out += map_reduce(
      js.size(), EFunction{},
      [&](std::size_t ji) {
        EFunction part;
        const Composition& j = js[ji];
        for (const auto& k : ks) {
          const Coeff c = Coeff(k.part(1) * j.part(1) - 2 * j.part(1) + 1) * weight_prime(j) * weight_prime(k);
          part.add_term(concat({j, k}), c);
        }
        return part;
      },
      [](EFunction& acc, const EFunction& part) { acc += part; });
  return out;
}

EFunction x0_fun(int m) {
  require_m(m);
  const int n = spider_order(m);
  EFunction out = sum_over(CompositionSpace::min2(n), [](Parts i, EFunction& acc) { acc.add_term(i, weight(i)); });
  const auto ps = CompositionSpace::min2(4 * m + 3).collect();
  const auto qs = CompositionSpace::min2(2 * m + 1).collect();
  out -= map_reduce(
      ps.size(), EFunction{},
      [&](std::size_t pi) {
        EFunction part;
        for (const auto& q : qs) part.add_term(concat({ps[pi], q}), weight(ps[pi]) * weight(q));
        return part;
      },
      [](EFunction& acc, const EFunction& part) { acc += part; });
  return out;
}

EFunction b2_pair_sum(int m) {
  require_m(m);
  const auto ps = CompositionSpace::min2(4 * m + 3).collect();
  const auto qs = CompositionSpace::min2(2 * m + 1).collect();
  return map_reduce(
      ps.size(), EFunction{},
      [&](std::size_t pi) {
        EFunction part;
        const Composition& p = ps[pi];
        if (surplus(p, 2 * m + 1) < 2) return part;
        for (const auto& q : qs) {
          const int p1 = p.part(1);
          const int q1 = q.part(1);
          part.add_term(concat({p, q}), Coeff(p1 * q1 - p1 - q1) * weight_prime(p) * weight_prime(q));
        }
        return part;
      },
      [](EFunction& acc, const EFunction& part) { acc += part; });
}

namespace {

EFunction a_weight_sum(int m) {
  return sum_over(CompositionSpace::min2(spider_order(m)), [m](Parts i, EFunction& acc) {
    if (membership(i, BSet::kA, m)) acc.add_term(i, weight(i));
  });
}

// g * w'_J w'_K w'_L for a triple with K >= L.
Coeff g_term(Parts j, Parts k, Parts l) {
  return Coeff(g_coeff(j[0], k[0], l[0], alpha_compare(k, l))) * triple_weight_prime(j, k, l);
}

}  // namespace

EFunction y_fun(int m) {
  require_m(m);
  const TripleSpace space(m);
  EFunction out = sum_over_triples(space, [](Parts j, Parts k, Parts l, EFunction& acc) {
    acc.add_term(concat({j, k, l}), b_coeff(j, k, l));
  });
  out += a_weight_sum(m);
  return out;
}

EFunction nonnegative_triple_sum(int m) {
  require_m(m);
  const TripleSpace space(m);
  return sum_over_triples(space, [](Parts j, Parts k, Parts l, EFunction& acc) {
    const auto cmp = alpha_compare(k, l);
    if (cmp < 0) return;
    const std::int64_t g = g_coeff(j[0], k[0], l[0], cmp);
    if (g >= 0) acc.add_term(concat({j, k, l}), Coeff(g) * triple_weight_prime(j, k, l));
  });
}

EFunction w_fun(int m) {
  require_m(m);
  const TripleSpace space(m);
  EFunction out = sum_over_triples(space, [](Parts j, Parts k, Parts l, EFunction& acc) {
    if (classify_triple(j, k, l) != TripleClass::kUnmatched) acc.add_term(concat({j, k, l}), g_term(j, k, l));
  });
  out += a_weight_sum(m);
  return out;
}

std::int64_t x1_min_cross_coefficient(int m) {
  require_m(m);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  CompositionSpace::min2(4 * m + 2).for_each([&](Parts j) {
    CompositionSpace::min2(2 * m + 1).for_each([&](Parts k) {
      best = std::min<std::int64_t>(best, std::int64_t{k[0]} * j[0] - 2 * j[0] + 1);
    });
  });
  return best;
}

std::int64_t b2_min_coefficient(int m) {
  require_m(m);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const auto qs = CompositionSpace::min2(2 * m + 1).collect();
  CompositionSpace::min2(4 * m + 3).for_each([&](Parts p) {
    if (surplus(p, 2 * m + 1) < 2) return;
    for (const auto& q : qs) {
      best = std::min<std::int64_t>(best, std::int64_t{p[0]} * q.part(1) - p[0] - q.part(1));
    }
  });
  return best;
}

IdentityCheck check_lemma_x0(int m) {
  require_m(m);
  const EFunction e1 = EFunction::term(Partition{1});
  const EFunction recomposed = e1 * e1 * e1_squared_part(m) + e1 * x1_fun(m) + x0_fun(m);
  IdentityCheck check{"x0", m, false, spider4m_csf(m) - recomposed, {}};
  check.holds = check.difference.is_zero();
  return check;
}

IdentityCheck check_lemma_y(int m) {
  require_m(m);
  IdentityCheck check{"y", m, false, x0_fun(m) - (b2_pair_sum(m) + y_fun(m)), {}};
  check.holds = check.difference.is_zero();
  return check;
}

IdentityCheck check_lemma_t1234(int m) {
  require_m(m);
  IdentityCheck check{"t1234", m, false, y_fun(m) - (nonnegative_triple_sum(m) + w_fun(m)), {}};
  check.holds = check.difference.is_zero();

  const TripleSpace space(m);
  std::uint64_t mismatches = 0;
  for (const auto& j : space.js) {
    for (const auto& k : space.ks) {
      for (const auto& l : space.ks) {
        const bool in_t_prime = alpha_compare(k, l) >= 0 && f_poly(j.part(1), k.part(1), l.part(1)) < 0;
        const bool in_union = classify_triple(j, k, l) != TripleClass::kUnmatched;
        if (in_t_prime == in_union) continue;
        if (++mismatches <= 10) {
          check.notes.push_back("class union disagrees with K>=L, f<0 at " +
                                TripleT{j, k, l, TripleClass::kUnmatched}.to_string());
        }
      }
    }
  }
  if (mismatches > 0) check.holds = false;
  return check;
}

std::string to_string(SLabel label) {
  switch (label) {
    case SLabel::kS1: return "S1";
    case SLabel::kS2: return "S2";
    case SLabel::kS3: return "S3";
    case SLabel::kS41: return "S41";
    case SLabel::kS42: return "S42";
  }
  return "?";
}

std::vector<Factorization> s_factorizations(Parts i, SLabel label, int m, S2Variant variant) {
  require_m(m);
  std::vector<Factorization> out;
  const int n = spider_order(m);
  if (total(i) != n || std::any_of(i.begin(), i.end(), [](int p) { return p < 2; })) return out;
  const auto sums = prefix_sums(i);
  const std::size_t len = i.size();

  if (label == SLabel::kS1) {
    const auto a = index_of_sum(sums, 2 * m + 3);
    const auto b = index_of_sum(sums, 4 * m + 4);
    if (a && b) out.push_back({*a, *b});
    return out;
  }

  const auto a = index_of_sum(sums, 2 * m + 2);
  if (!a) return out;

  if (label == SLabel::kS2) {
    if (detail::fault_active("s2_accept_all")) {
      out.push_back({*a, *a});
      return out;
    }
    const auto b = index_of_sum(sums, 4 * m + 5);
    if (!b) return out;
    const Parts q = slice(i, *a, *b);
    const int last = q.back();
    const bool last_ok = last % 2 == 0 && (variant == S2Variant::kRelaxed || last >= 4);
    if (q.front() == 2 && last_ok) out.push_back({*a, *b});
    return out;
  }

  // S3, S41 and S42: P is the prefix of size 2m+2; try every Q/R boundary.
  for (std::size_t t = *a; t < len; ++t) {
    const Parts q = slice(i, *a, t);
    const Parts r = slice(i, t, len);
    if (r.front() != 2) continue;
    const int q_size = sums[t] - sums[*a];
    const int lead_r = leading_even_count(r);   // f(R) - 1
    const int trail_q = trailing_even_count(q);  // l(Q) - lo(Q)
    bool ok = false;
    switch (label) {
      case SLabel::kS3: {
        if (odd_count(r) < 2) break;
        const int r_fo = r[static_cast<std::size_t>(lead_r)];
        if (q_size != 2 * m + 1 - r_fo) break;
        const bool after_first_odd_is_odd = r[static_cast<std::size_t>(lead_r) + 1] % 2 != 0;
        ok = (lead_r <= trail_q && after_first_odd_is_odd) || lead_r == trail_q + 1;
        break;
      }
      case SLabel::kS41: {
        if (odd_count(q) < 2) break;
        const int q_lo = q[static_cast<std::size_t>(*last_odd(q)) - 1];
        ok = lead_r >= trail_q && q_size == 2 * m + 1 + q_lo;
        break;
      }
      case SLabel::kS42: {
        if (odd_count(r) < 2) break;
        const int r_fo = r[static_cast<std::size_t>(lead_r)];
        if (q_size != 2 * m + 1 - r_fo) break;
        const bool after_first_odd_is_even = r[static_cast<std::size_t>(lead_r) + 1] % 2 == 0;
        ok = lead_r <= trail_q && after_first_odd_is_even;
        break;
      }
      default:
        break;
    }
    if (ok) out.push_back({*a, t});
  }
  return out;
}

bool s_membership(Parts i, SLabel label, int m, S2Variant variant) {
  return !s_factorizations(i, label, m, variant).empty();
}

}  // namespace epos
