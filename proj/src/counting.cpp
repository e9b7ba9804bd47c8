#include "invseq/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace invseq {

namespace {

// Counts avoiders of p at every length <= n_max below the given prefix.
// counts[k] accumulates |{e in I_k(p) : e extends prefix}| for k in
// [prefix length, n_max]. The prefix itself must avoid p.
void count_avoiders_below(const VincularPattern& p, InversionSequence& e,
                          int n_max, std::vector<std::int64_t>& counts) {
  ++counts[static_cast<std::size_t>(e.size())];
  if (e.size() == n_max) return;
  int sites = e.size() + 1;
  for (int h = 0; h < sites; ++h) {
    e.push_back(h);
    if (!creates_occurrence_at_end(p, e)) {
      count_avoiders_below(p, e, n_max, counts);
    }
    e.pop_back();
  }
}

// Avoiding prefixes of length `depth`, counting avoiders of all shorter
// lengths along the way.
void collect_avoiding_prefixes(const VincularPattern& p, InversionSequence& e,
                               int depth, std::vector<std::int64_t>& counts,
                               std::vector<InversionSequence>& prefixes) {
  if (e.size() == depth) {
    prefixes.push_back(e);
    return;
  }
  ++counts[static_cast<std::size_t>(e.size())];
  int sites = e.size() + 1;
  for (int h = 0; h < sites; ++h) {
    e.push_back(h);
    if (!creates_occurrence_at_end(p, e)) {
      collect_avoiding_prefixes(p, e, depth, counts, prefixes);
    }
    e.pop_back();
  }
}

}  // namespace

std::string level_name(EquivalenceLevel level) {
  switch (level) {
    case EquivalenceLevel::kWilf: return "wilf";
    case EquivalenceLevel::kStrong: return "strong";
    case EquivalenceLevel::kSuperStrong: return "super_strong";
  }
  return "?";
}

EquivalenceLevel parse_level(std::string_view name) {
  if (name == "wilf") return EquivalenceLevel::kWilf;
  if (name == "strong") return EquivalenceLevel::kStrong;
  if (name == "super_strong" || name == "super-strong") {
    return EquivalenceLevel::kSuperStrong;
  }
  throw std::invalid_argument("unknown equivalence level: " +
                              std::string(name));
}

std::vector<std::int64_t> avoidance_series(const VincularPattern& p, int n_max,
                                           int jobs, int guard) {
  check_enumeration_guard(n_max, guard);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
  constexpr int kPrefixDepth = 5;
  InversionSequence e;
  if (jobs <= 1 || n_max <= kPrefixDepth + 1) {
    count_avoiders_below(p, e, n_max, counts);
    return counts;
  }
  std::vector<InversionSequence> prefixes;
  collect_avoiding_prefixes(p, e, kPrefixDepth, counts, prefixes);
  std::vector<std::vector<std::int64_t>> partial(
      prefixes.size(),
      std::vector<std::int64_t>(static_cast<std::size_t>(n_max) + 1, 0));
  run_tasks(jobs, prefixes.size(), [&](std::size_t i) {
    InversionSequence local = prefixes[i];
    count_avoiders_below(p, local, n_max, partial[i]);
  });
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += part[k];
  }
  return counts;
}

std::int64_t avoidance_count(const VincularPattern& p, int n, int jobs,
                             int guard) {
  return avoidance_series(p, n, jobs, guard)[static_cast<std::size_t>(n)];
}

OccurrenceDistribution distribution(const VincularPattern& p, int n, int jobs,
                                    int guard) {
  using Map = std::map<std::int64_t, std::int64_t>;
  Map counts = parallel_scan_sequences<Map>(
      n, jobs, Map{},
      [&](const InversionSequence& e, Map& acc) {
        ++acc[count_occurrences(p, e)];
      },
      [](Map& into, const Map& from) {
        for (const auto& [m, c] : from) into[m] += c;
      },
      guard);
  return OccurrenceDistribution{std::move(counts), n};
}

PositionClassTable position_classes(const VincularPattern& p, int n, int jobs,
                                    int guard) {
  using Map = std::map<std::string, std::int64_t>;
  Map classes = parallel_scan_sequences<Map>(
      n, jobs, Map{},
      [&](const InversionSequence& e, Map& acc) {
        ++acc[occurrences(p, e).str()];
      },
      [](Map& into, const Map& from) {
        for (const auto& [key, c] : from) into[key] += c;
      },
      guard);
  return PositionClassTable{std::move(classes), n};
}

std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>
joint_distribution(const VincularPattern& p, const VincularPattern& q, int n,
                   int jobs, int guard) {
  using Map = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;
  return parallel_scan_sequences<Map>(
      n, jobs, Map{},
      [&](const InversionSequence& e, Map& acc) {
        ++acc[{count_occurrences(p, e), count_occurrences(q, e)}];
      },
      [](Map& into, const Map& from) {
        for (const auto& [key, c] : from) into[key] += c;
      },
      guard);
}

namespace {

// One comparable fingerprint of the level statistic at a fixed n.
std::string statistic_key(const VincularPattern& p, int n,
                          EquivalenceLevel level, int jobs, int guard) {
  switch (level) {
    case EquivalenceLevel::kWilf:
      return std::to_string(avoidance_count(p, n, jobs, guard));
    case EquivalenceLevel::kStrong: {
      std::string key;
      for (const auto& [m, c] : distribution(p, n, jobs, guard).counts) {
        key += std::to_string(m) + ':' + std::to_string(c) + ';';
      }
      return key;
    }
    case EquivalenceLevel::kSuperStrong: {
      std::string key;
      for (const auto& [s, c] : position_classes(p, n, jobs, guard).classes) {
        key += s + ':' + std::to_string(c) + ';';
      }
      return key;
    }
  }
  return {};
}

}  // namespace

EquivalenceCheck check_equivalence(const VincularPattern& p,
                                   const VincularPattern& q, int n_max,
                                   EquivalenceLevel level, int jobs,
                                   int guard) {
  EquivalenceCheck out;
  out.level = level;
  out.n_max = n_max;
  out.equal_at.assign(static_cast<std::size_t>(n_max) + 1, true);
  for (int n = 1; n <= n_max; ++n) {
    bool equal = statistic_key(p, n, level, jobs, guard) ==
                 statistic_key(q, n, level, jobs, guard);
    out.equal_at[static_cast<std::size_t>(n)] = equal;
    if (!equal && out.equivalent) {
      out.equivalent = false;
      out.first_difference = n;
    }
  }
  return out;
}

Classification classify_all(int r, int n_max, EquivalenceLevel level, int jobs,
                            int guard) {
  std::vector<VincularPattern> patterns = all_patterns(r);
  Classification out;
  out.level = level;
  out.n_max = n_max;

  std::vector<std::vector<std::size_t>> groups = {
      std::vector<std::size_t>(patterns.size())};
  for (std::size_t i = 0; i < patterns.size(); ++i) groups[0][i] = i;

  for (int n = 1; n <= n_max; ++n) {
    bool any_open = false;
    std::vector<std::vector<std::size_t>> next;
    for (const auto& group : groups) {
      if (group.size() < 2) {
        next.push_back(group);
        continue;
      }
      any_open = true;
      std::map<std::string, std::vector<std::size_t>> split;
      for (std::size_t idx : group) {
        split[statistic_key(patterns[idx], n, level, jobs, guard)].push_back(
            idx);
      }
      std::vector<std::vector<std::size_t>> parts;
      parts.reserve(split.size());
      for (auto& [key, members] : split) parts.push_back(std::move(members));
      std::sort(parts.begin(), parts.end());
      for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
          for (std::size_t pi : parts[a]) {
            for (std::size_t qi : parts[b]) {
              auto [lo, hi] = std::minmax(pi, qi);
              out.witnesses.push_back({patterns[lo], patterns[hi], n});
            }
          }
        }
      }
      for (auto& part : parts) next.push_back(std::move(part));
    }
    groups = std::move(next);
    if (!any_open) break;
  }

  std::sort(groups.begin(), groups.end());
  for (const auto& group : groups) {
    std::vector<VincularPattern> cls;
    cls.reserve(group.size());
    for (std::size_t idx : group) cls.push_back(patterns[idx]);
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(),
            [](const SeparationWitness& x, const SeparationWitness& y) {
              return std::tie(x.n, x.p, x.q) < std::tie(y.n, y.p, y.q);
            });
  return out;
}

BigInt binomial(std::int64_t m, std::int64_t k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (m - k + i);
    r /= i;
  }
  return r;
}

BigInt marked_count(const VincularPattern& p, int n, std::int64_t k, int jobs,
                    int guard) {
  if (k < 0) throw std::invalid_argument("marked_count: k must be >= 0");
  return parallel_scan_sequences<BigInt>(
      n, jobs, BigInt(0),
      [&](const InversionSequence& e, BigInt& acc) {
        acc += binomial(static_cast<std::int64_t>(occurrences(p, e).size()), k);
      },
      [](BigInt& into, const BigInt& from) { into += from; }, guard);
}

BigInt marked_count_via_distribution(const VincularPattern& p, int n,
                                     std::int64_t k, int jobs, int guard) {
  if (k < 0) throw std::invalid_argument("marked_count: k must be >= 0");
  BigInt total = 0;
  for (const auto& [m, c] : distribution(p, n, jobs, guard).counts) {
    total += BigInt(c) * binomial(m, k);
  }
  return total;
}

namespace {

bool is_trailing_pair_shape(const VincularPattern& p) {
  return p.length() == 3 && p.blocks().size() == 1 &&
         p.blocks()[0].first == 2 && p.blocks()[0].last == 3;
}

void require_trailing_pair_shape(const VincularPattern& p) {
  if (!is_trailing_pair_shape(p)) {
    throw std::invalid_argument(
        "Em* machinery requires a length-3 pattern with its last two "
        "positions underlined, got " + p.str());
  }
}

bool order_matches(int x, int y, int a, int b) {
  return (x < y) == (a < b) && (x == y) == (a == b);
}

}  // namespace

std::vector<int> em_star(const VincularPattern& p,
                         const InversionSequence& e) {
  require_trailing_pair_shape(p);
  const auto& v = p.values();
  std::vector<int> out;
  for (int i = 2; i + 1 <= e.size(); ++i) {
    if (!order_matches(e.at(i), e.at(i + 1), v[1], v[2])) continue;
    for (int t = 1; t < i; ++t) {
      if (order_matches(e.at(t), e.at(i), v[0], v[1]) &&
          order_matches(e.at(t), e.at(i + 1), v[0], v[2])) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::uint32_t position_mask(const std::vector<int>& s, int n) {
  if (n > 31) throw std::invalid_argument("position_mask: n too large");
  std::uint32_t mask = 0;
  for (int i : s) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("position_mask: position " +
                                  std::to_string(i) + " outside [1," +
                                  std::to_string(n) + "]");
    }
    mask |= 1u << (i - 1);
  }
  return mask;
}

std::map<std::uint32_t, std::int64_t> em_star_census(const VincularPattern& p,
                                                     int n, int jobs,
                                                     int guard) {
  require_trailing_pair_shape(p);
  using Map = std::map<std::uint32_t, std::int64_t>;
  return parallel_scan_sequences<Map>(
      n, jobs, Map{},
      [&](const InversionSequence& e, Map& acc) {
        ++acc[position_mask(em_star(p, e), n)];
      },
      [](Map& into, const Map& from) {
        for (const auto& [mask, c] : from) into[mask] += c;
      },
      guard);
}

std::int64_t f_eq(const VincularPattern& p, int n, const std::vector<int>& s,
                  int jobs, int guard) {
  auto census = em_star_census(p, n, jobs, guard);
  auto it = census.find(position_mask(s, n));
  return it == census.end() ? 0 : it->second;
}

std::int64_t f_geq(const VincularPattern& p, int n, const std::vector<int>& s,
                   int jobs, int guard) {
  auto census = em_star_census(p, n, jobs, guard);
  std::uint32_t want = position_mask(s, n);
  std::int64_t total = 0;
  for (const auto& [mask, c] : census) {
    if ((mask & want) == want) total += c;
  }
  return total;
}

}  // namespace invseq
