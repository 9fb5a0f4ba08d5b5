#include "epos/injections.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "epos/errors.hpp"
#include "epos/fault.hpp"
#include "epos/parallel.hpp"

namespace epos {

namespace {

constexpr std::size_t kWitnessLimit = 8;

using Vec = std::vector<int>;

Vec to_vec(Parts p) { return Vec(p.begin(), p.end()); }

Vec joined(Parts a, Parts b, Parts c) {
  Vec out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

Vec insert_at(Parts p, std::size_t pos, int value) {
  Vec out = to_vec(p);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), value);
  return out;
}

Vec erase_at(Parts p, std::size_t pos) {
  Vec out = to_vec(p);
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

std::string describe(Parts j, Parts k, Parts l) {
  return "J=(" + Composition(j).to_string() + ") K=(" + Composition(k).to_string() + ") L=(" +
         Composition(l).to_string() + ")";
}

// m of a triple of T, or DomainError.
int triple_m(Parts j, Parts k, Parts l) {
  const int size = total(k);
  const int m = (size - 1) / 2;
  if (k.empty() || size % 2 == 0 || m < 1 || !in_triple_set(j, k, l, m)) {
    throw DomainError("not a triple of T: " + describe(j, k, l));
  }
  return m;
}

void require_class(Parts j, Parts k, Parts l, TripleClass cls, const char* map) {
  triple_m(j, k, l);
  if (classify_triple(j, k, l) != cls) {
    throw DomainError(std::string(map) + " is not defined on " + describe(j, k, l));
  }
}

void require_t4_prime(Parts j, Parts k, Parts l, const char* map) {
  triple_m(j, k, l);
  if (k[0] != 2 || l[0] != 2) throw DomainError(std::string(map) + " needs k1 = l1 = 2, got " + describe(j, k, l));
}

// An image together with the split I = PQR it was built from.
struct Built {
  Vec parts;
  Factorization split;
};

Built build(Parts p, Parts q, Parts r) { return {joined(p, q, r), {p.size(), p.size() + q.size()}}; }

Built build_phi1(Parts j, Parts k, Parts l) {
  Vec p = to_vec(j);
  const int last = p.back();
  p.front() = std::min(last, l[0]);
  p.back() = std::max(last, l[0]);
  Vec r = to_vec(l);
  r.front() = j[0];
  return build(p, k, r);
}

Built build_phi2(Parts j, Parts k, Parts l) {
  if (detail::fault_active("phi2_identity")) return build(j, k, l);
  Vec q{2};
  q.insert(q.end(), k.begin() + 1, k.end());
  q.push_back(k[0]);
  return build(j, q, l.subspan(1));
}

Built build_phi3(Parts j, Parts k, Parts l) {
  const auto pos = static_cast<std::size_t>(std::min(leading_even_count(l), trailing_even_count(k) + 1));
  return build(j, k.subspan(1), insert_at(l, pos, k[0]));
}

Built build_phi41(Parts j, Parts k, Parts l) {
  const Composition u = u_rotation(k);
  const auto fo = static_cast<std::size_t>(leading_even_count(l));
  const Vec q = insert_at(u, u.parts().size() - fo, l[fo]);
  return build(j, q, erase_at(l, fo));
}

Built build_phi42(Parts j, Parts k, Parts l) {
  const Composition u = u_rotation(k);
  const auto t = static_cast<std::size_t>(trailing_even_count(u));
  const std::size_t lo = u.parts().size() - t - 1;
  return build(j, erase_at(u, lo), insert_at(l, t, u.parts()[lo]));
}

Built build_phi4(Parts j, Parts k, Parts l) { return in_t41(j, k, l) ? build_phi41(j, k, l) : build_phi42(j, k, l); }

// w_image / (w'_J w'_K w'_L), asserted exact.
std::int64_t weight_ratio(Parts image, Parts j, Parts k, Parts l) {
  const Coeff denominator = weight_prime(j) * weight_prime(k) * weight_prime(l);
  const Coeff numerator = weight(image);
  if (numerator % denominator != 0) {
    throw InvariantViolation("image weight is not a multiple of w'_J w'_K w'_L at " + describe(j, k, l));
  }
  return static_cast<std::int64_t>(numerator / denominator);
}

std::int64_t f_at(Parts j, Parts k, Parts l) { return f_poly(j[0], k[0], l[0]); }

// Splits I at the two given prefix sums; nothing when either is missing.
std::optional<Factorization> split_at_sums(Parts image, int first, int second) {
  int sum = 0;
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;
  for (std::size_t i = 0; i <= image.size(); ++i) {
    if (sum == first) a = i;
    if (sum == second) b = i;
    if (i < image.size()) sum += image[i];
  }
  if (!a || !b) return std::nullopt;
  return Factorization{*a, *b};
}

bool in_c(Parts image, int m) {
  return total(image) == spider_order(m) && std::all_of(image.begin(), image.end(), [](int p) { return p >= 2; });
}

struct Pieces {
  Parts p;
  Parts q;
  Parts r;
};

Pieces pieces(Parts image, Factorization f) {
  return {image.subspan(0, f.p_end), image.subspan(f.p_end, f.q_end - f.p_end), image.subspan(f.q_end)};
}

std::optional<Pieces> unique_pieces(Parts image, SLabel label, int m) {
  if (!in_c(image, m)) return std::nullopt;
  const auto fs = s_factorizations(image, label, m);
  if (fs.size() != 1) return std::nullopt;
  return pieces(image, fs.front());
}

std::optional<Triple> checked(Vec j, Vec k, Vec l, int m) {
  if (j.empty() || k.empty() || l.empty()) return std::nullopt;
  if (!in_triple_set(j, k, l, m)) return std::nullopt;
  return Triple{Composition(std::move(j)), Composition(std::move(k)), Composition(std::move(l))};
}

}  // namespace

Composition phi1(Parts j, Parts k, Parts l) {
  require_class(j, k, l, TripleClass::kT1, "phi1");
  return Composition(build_phi1(j, k, l).parts);
}

Composition phi2(Parts j, Parts k, Parts l) {
  require_class(j, k, l, TripleClass::kT2, "phi2");
  return Composition(build_phi2(j, k, l).parts);
}

Composition phi3(Parts j, Parts k, Parts l) {
  require_class(j, k, l, TripleClass::kT3, "phi3");
  return Composition(build_phi3(j, k, l).parts);
}

bool in_t41(Parts j, Parts k, Parts l) {
  require_t4_prime(j, k, l, "the T41/T42 split");
  return leading_even_count(l) <= trailing_even_count(u_rotation(k));
}

Composition phi41(Parts j, Parts k, Parts l) {
  if (!in_t41(j, k, l)) throw DomainError("phi41 is not defined on " + describe(j, k, l));
  return Composition(build_phi41(j, k, l).parts);
}

Composition phi42(Parts j, Parts k, Parts l) {
  if (in_t41(j, k, l)) throw DomainError("phi42 is not defined on " + describe(j, k, l));
  return Composition(build_phi42(j, k, l).parts);
}

Composition phi4(Parts j, Parts k, Parts l) { return Composition(build_phi4(j, k, l).parts); }

std::int64_t c1(Parts j, Parts k, Parts l) { return weight_ratio(phi1(j, k, l), j, k, l) + f_at(j, k, l); }
std::int64_t c2(Parts j, Parts k, Parts l) { return weight_ratio(phi2(j, k, l), j, k, l) + f_at(j, k, l); }
std::int64_t c3(Parts j, Parts k, Parts l) { return weight_ratio(phi3(j, k, l), j, k, l) + f_at(j, k, l); }

std::int64_t c4(Parts j, Parts k, Parts l) {
  require_class(j, k, l, TripleClass::kT4, "c4");
  const auto cmp = alpha_compare(k, l);
  std::int64_t c = weight_ratio(phi4(j, k, l), j, k, l) + g_coeff(j[0], k[0], l[0], cmp);
  if (cmp > 0) c += weight_ratio(phi4(j, l, k), j, k, l);
  return c;
}

std::optional<Triple> phi1_inverse(Parts image, int m) {
  if (!in_c(image, m)) return std::nullopt;
  const auto split = split_at_sums(image, 2 * m + 3, 4 * m + 4);
  if (!split) return std::nullopt;
  const auto [p, k, r] = pieces(image, *split);
  if (p.size() < 2 || r.empty() || r[0] != 2) return std::nullopt;
  Vec j = to_vec(p);
  if (p.front() == 2 && p.back() == 3) {
    j.back() = 2;
  } else if (p.front() == 3 && p.back() >= 3) {
    j.front() = 2;
  } else {
    return std::nullopt;
  }
  Vec l = to_vec(r);
  l.front() = 3;
  return checked(std::move(j), to_vec(k), std::move(l), m);
}

std::optional<Triple> phi2_inverse(Parts image, int m) {
  if (!in_c(image, m)) return std::nullopt;
  const auto split = split_at_sums(image, 2 * m + 2, 4 * m + 5);
  if (!split) return std::nullopt;
  const auto [j, q, r] = pieces(image, *split);
  if (q.size() < 2 || q.front() != 2) return std::nullopt;
  Vec k{q.back()};
  k.insert(k.end(), q.begin() + 1, q.end() - 1);
  Vec l{2};
  l.insert(l.end(), r.begin(), r.end());
  return checked(to_vec(j), std::move(k), std::move(l), m);
}

std::optional<Triple> phi3_inverse(Parts image, int m) {
  const auto found = unique_pieces(image, SLabel::kS3, m);
  if (!found) return std::nullopt;
  const auto [j, q, r] = *found;
  const auto fo = static_cast<std::size_t>(leading_even_count(r));
  Vec k{r[fo]};
  k.insert(k.end(), q.begin(), q.end());
  return checked(to_vec(j), std::move(k), erase_at(r, fo), m);
}

std::optional<Triple> phi41_inverse(Parts image, int m) {
  const auto found = unique_pieces(image, SLabel::kS41, m);
  if (!found) return std::nullopt;
  const auto [j, q, r] = *found;
  const auto lo = static_cast<std::size_t>(*last_odd(q) - 1);
  const Vec u = erase_at(q, lo);
  const Vec l = insert_at(r, static_cast<std::size_t>(trailing_even_count(q)), q[lo]);
  return checked(to_vec(j), to_vec(rotate_longest_odd_prefix(u)), l, m);
}

std::optional<Triple> phi42_inverse(Parts image, int m) {
  const auto found = unique_pieces(image, SLabel::kS42, m);
  if (!found) return std::nullopt;
  const auto [j, q, r] = *found;
  const auto fo = static_cast<std::size_t>(leading_even_count(r));
  const Vec u = insert_at(q, q.size() - fo, r[fo]);
  return checked(to_vec(j), to_vec(rotate_longest_odd_prefix(u)), erase_at(r, fo), m);
}

std::optional<int> bar_reading_q_lo(Parts image, int m) {
  int sum = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    sum += image[i];
    if (sum < 4 * m + 4) continue;
    for (std::size_t s = i + 1; s > 0; --s) {
      if (image[s - 1] % 2 != 0) return image[s - 1];
    }
    return std::nullopt;
  }
  return std::nullopt;
}

bool InjectionReport::verdict() const {
  return cross_duplicates == 0 &&
         std::all_of(maps.begin(), maps.end(), [](const MapCheck& check) { return check.passed(); });
}

namespace {

constexpr std::size_t kPhi1 = 0;
constexpr std::size_t kPhi2 = 1;
constexpr std::size_t kPhi3 = 2;
constexpr std::size_t kPhi41 = 3;
constexpr std::size_t kPhi42 = 4;
constexpr std::array<const char*, 5> kMapNames{"phi1", "phi2", "phi3", "phi41", "phi42"};
constexpr std::array<SLabel, 5> kMapTargets{SLabel::kS1, SLabel::kS2, SLabel::kS3, SLabel::kS41, SLabel::kS42};

struct ImageRecord {
  Vec parts;
  std::uint8_t map;
  std::string origin;
};

struct Partial {
  std::array<MapCheck, 5> maps;
  std::vector<ImageRecord> images;
  bool c3_at_least_two = true;
  std::optional<std::string> c3_witness;
  std::uint64_t bar_agree = 0;
  std::uint64_t bar_disagree = 0;
};

void note(MapCheck& check, std::uint64_t& counter, const std::string& what) {
  ++counter;
  if (check.witnesses.size() < kWitnessLimit) check.witnesses.push_back(check.name + ": " + what);
}

void record_coefficient(MapCheck& check, std::int64_t c) {
  check.min_coefficient = check.min_coefficient ? std::min(*check.min_coefficient, c) : c;
  check.max_coefficient = check.max_coefficient ? std::max(*check.max_coefficient, c) : c;
}

using Inverse = std::optional<Triple> (*)(Parts, int);
constexpr std::array<Inverse, 5> kInverses{phi1_inverse, phi2_inverse, phi3_inverse, phi41_inverse, phi42_inverse};

// Checks shared by all maps: image in A, in its S-set with the construction's
// split, same partition, and recovered by the inverse.
void check_image(Partial& out, std::size_t map, const Built& built, const Composition& j, const Composition& k,
                 const Composition& l, int m) {
  MapCheck& check = out.maps[map];
  ++check.domain_size;
  const std::string origin = describe(j, k, l) + " -> (" + Composition(built.parts).to_string() + ")";
  const Parts image = built.parts;
  if (!in_c(image, m) || !membership(image, BSet::kA, m)) note(check, check.outside_a, "image outside A at " + origin);
  if (in_c(image, m)) {
    const auto fs = s_factorizations(image, kMapTargets[map], m);
    if (fs.size() != 1 || fs.front() != built.split) {
      note(check, check.outside_s, "image not uniquely in " + to_string(kMapTargets[map]) + " at " + origin);
    }
  } else {
    note(check, check.outside_s, "image outside C_n at " + origin);
  }
  if (Partition(image) != Partition(joined(j, k, l))) note(check, check.partition_changed, "partition changed at " + origin);
  const auto back = kInverses[map](image, m);
  if (!back || !(*back == Triple{j, k, l})) note(check, check.round_trip_failures, "inverse fails at " + origin);
  out.images.push_back({built.parts, static_cast<std::uint8_t>(map), origin});
}

void process_triple(Partial& out, const Composition& j, const Composition& k, const Composition& l, int m) {
  const int j1 = j.part(1);
  const int k1 = k.part(1);
  switch (classify_triple(j, k, l)) {
    case TripleClass::kT1: {
      const Built built = build_phi1(j, k, l);
      check_image(out, kPhi1, built, j, k, l, m);
      const std::int64_t c = weight_ratio(built.parts, j, k, l) + f_at(j, k, l);
      record_coefficient(out.maps[kPhi1], c);
      const std::int64_t expected = j.part(-1) == 2 ? 6 : 4;
      if (c != expected) {
        note(out.maps[kPhi1], out.maps[kPhi1].coefficient_failures,
             "c1 = " + std::to_string(c) + " at " + describe(j, k, l));
      }
      break;
    }
    case TripleClass::kT2: {
      const Built built = build_phi2(j, k, l);
      check_image(out, kPhi2, built, j, k, l, m);
      const std::int64_t c = weight_ratio(built.parts, j, k, l) + f_at(j, k, l);
      record_coefficient(out.maps[kPhi2], c);
      if (c != std::int64_t{j1 - 1} * (2 * k1 - 5) - 1 || c < 2) {
        note(out.maps[kPhi2], out.maps[kPhi2].coefficient_failures,
             "c2 = " + std::to_string(c) + " at " + describe(j, k, l));
      }
      break;
    }
    case TripleClass::kT3: {
      const Built built = build_phi3(j, k, l);
      check_image(out, kPhi3, built, j, k, l, m);
      const std::int64_t c = weight_ratio(built.parts, j, k, l) + f_at(j, k, l);
      record_coefficient(out.maps[kPhi3], c);
      // The group net is c3 w'_J w'_K w'_L, so c3 >= 0 is what positivity needs.
      if (c != std::int64_t{j1 - 1} * (2 * k1 - 5) - 1 || c < 0) {
        note(out.maps[kPhi3], out.maps[kPhi3].coefficient_failures,
             "c3 = " + std::to_string(c) + " at " + describe(j, k, l));
      }
      if (c < 2 && out.c3_at_least_two) {
        out.c3_at_least_two = false;
        out.c3_witness = "c3 = " + std::to_string(c) + " at " + describe(j, k, l);
      }
      break;
    }
    default:
      break;
  }

  if (k1 != 2 || l.part(1) != 2) return;
  const bool t41 = in_t41(j, k, l);
  const std::size_t map = t41 ? kPhi41 : kPhi42;
  const Built built = t41 ? build_phi41(j, k, l) : build_phi42(j, k, l);
  check_image(out, map, built, j, k, l, m);
  if (t41) {
    const auto q = Parts(built.parts).subspan(built.split.p_end, built.split.q_end - built.split.p_end);
    const int q_lo = q[static_cast<std::size_t>(*last_odd(q) - 1)];
    if (bar_reading_q_lo(built.parts, m) == q_lo) {
      ++out.bar_agree;
    } else {
      ++out.bar_disagree;
    }
  }
  if (alpha_compare(k, l) >= 0) {
    const std::int64_t c = c4(j, k, l);
    record_coefficient(out.maps[map], c);
    if (c != 0) note(out.maps[map], out.maps[map].coefficient_failures, "c4 = " + std::to_string(c) + " at " + describe(j, k, l));
  }
}

void merge_check(MapCheck& into, const MapCheck& from) {
  into.domain_size += from.domain_size;
  into.duplicate_images += from.duplicate_images;
  into.outside_a += from.outside_a;
  into.outside_s += from.outside_s;
  into.partition_changed += from.partition_changed;
  into.round_trip_failures += from.round_trip_failures;
  into.coefficient_failures += from.coefficient_failures;
  if (from.min_coefficient) record_coefficient(into, *from.min_coefficient);
  if (from.max_coefficient) record_coefficient(into, *from.max_coefficient);
  for (const auto& w : from.witnesses) {
    if (into.witnesses.size() < kWitnessLimit) into.witnesses.push_back(w);
  }
}

}  // namespace

InjectionReport verify_injections(int m) {
  const TripleSpace space(m);
  Partial init;
  for (std::size_t i = 0; i < init.maps.size(); ++i) init.maps[i].name = kMapNames[i];
  Partial all = map_reduce(
      space.js.size(), std::move(init),
      [&](std::size_t ji) {
        Partial part;
        for (std::size_t i = 0; i < part.maps.size(); ++i) part.maps[i].name = kMapNames[i];
        for (const auto& k : space.ks) {
          for (const auto& l : space.ks) process_triple(part, space.js[ji], k, l, m);
        }
        return part;
      },
      [](Partial& acc, Partial part) {
        for (std::size_t i = 0; i < acc.maps.size(); ++i) merge_check(acc.maps[i], part.maps[i]);
        acc.images.insert(acc.images.end(), std::make_move_iterator(part.images.begin()),
                          std::make_move_iterator(part.images.end()));
        if (acc.c3_at_least_two && !part.c3_at_least_two) {
          acc.c3_at_least_two = false;
          acc.c3_witness = part.c3_witness;
        }
        acc.bar_agree += part.bar_agree;
        acc.bar_disagree += part.bar_disagree;
      });

  InjectionReport report;
  report.m = m;
  // Duplicate scan over all images; a tie within one map breaks injectivity
  // of that map, a tie across maps breaks disjointness of the images.
  std::stable_sort(all.images.begin(), all.images.end(),
                   [](const ImageRecord& a, const ImageRecord& b) { return a.parts < b.parts; });
  for (std::size_t i = 1; i < all.images.size(); ++i) {
    const auto& a = all.images[i - 1];
    const auto& b = all.images[i];
    if (a.parts != b.parts) continue;
    const std::string what = "(" + Composition(a.parts).to_string() + ") from " + a.origin + " and " + b.origin;
    if (a.map == b.map) {
      MapCheck& check = all.maps[a.map];
      note(check, check.duplicate_images, "shared image " + what);
    } else {
      ++report.cross_duplicates;
      if (report.witnesses.size() < kWitnessLimit) report.witnesses.push_back("image shared by two maps: " + what);
    }
  }
  report.maps.assign(all.maps.begin(), all.maps.end());
  report.c3_at_least_two = all.c3_at_least_two;
  report.c3_witness = all.c3_witness;
  report.bar_reading_agreements = all.bar_agree;
  report.bar_reading_disagreements = all.bar_disagree;
  for (const auto& check : report.maps) {
    for (const auto& w : check.witnesses) {
      if (report.witnesses.size() < 4 * kWitnessLimit) report.witnesses.push_back(w);
    }
  }
  return report;
}

DisjointnessReport verify_disjointness(int m, S2Variant variant) {
  if (m < 1) throw DomainError("m must be positive, got " + std::to_string(m));
  const auto shards = CompositionSpace::min2(spider_order(m)).shards(4 * worker_count());
  DisjointnessReport init;
  init.members.assign(std::size(kAllSLabels), 0);
  DisjointnessReport report = map_reduce(
      shards.size(), init,
      [&](std::size_t s) {
        DisjointnessReport part;
        part.members.assign(std::size(kAllSLabels), 0);
        auto witness = [&](const std::string& w) {
          if (part.witnesses.size() < kWitnessLimit) part.witnesses.push_back(w);
        };
        shards[s].for_each([&](Parts i) {
          ++part.scanned;
          std::vector<SLabel> hits;
          for (std::size_t x = 0; x < std::size(kAllSLabels); ++x) {
            const SLabel label = kAllSLabels[x];
            const auto fs = s_factorizations(i, label, m, variant);
            if (fs.empty()) continue;
            hits.push_back(label);
            ++part.members[x];
            if (fs.size() > 1) {
              ++part.ambiguous_factorizations;
              witness("(" + Composition(i).to_string() + ") factors two ways in " + to_string(label));
            }
            const int expected = label == SLabel::kS1 ? 1 : 0;
            if (surplus(i, 2 * m + 2) != expected) {
              ++part.separation_failures;
              witness("(" + Composition(i).to_string() + ") in " + to_string(label) + " has surplus " +
                      std::to_string(surplus(i, 2 * m + 2)) + " at 2m+2");
            }
          }
          if (hits.size() > 1) {
            ++part.overlaps;
            witness("(" + Composition(i).to_string() + ") lies in " + to_string(hits[0]) + " and " + to_string(hits[1]));
          }
        });
        return part;
      },
      [](DisjointnessReport& acc, const DisjointnessReport& part) {
        acc.scanned += part.scanned;
        for (std::size_t x = 0; x < acc.members.size(); ++x) acc.members[x] += part.members[x];
        acc.overlaps += part.overlaps;
        acc.separation_failures += part.separation_failures;
        acc.ambiguous_factorizations += part.ambiguous_factorizations;
        for (const auto& w : part.witnesses) {
          if (acc.witnesses.size() < kWitnessLimit) acc.witnesses.push_back(w);
        }
      });
  report.m = m;
  report.variant = variant;
  return report;
}

}  // namespace epos
