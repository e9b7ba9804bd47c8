#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "invseq/core.hpp"
#include "invseq/enumerate.hpp"

// Counting and classification: avoidance counts, occurrence distributions,
// position-class statistics, the three generalized Wilf equivalences, and
// the marked-occurrence / inclusion-exclusion transforms.

namespace invseq {

using BigInt = boost::multiprecision::cpp_int;

/// counts[m] = |I_n(p,m)|, the sequences with exactly m occurrences.
/// Values sum to n!; counts[0] = |I_n(p)|.
struct OccurrenceDistribution {
  std::map<std::int64_t, std::int64_t> counts;
  int n = 0;
};

/// classes[S.str()] = |I_n(p,S)|, keyed by the canonical serialization of
/// the occurrence-position set. Values sum to n!; the "{}" key is |I_n(p)|.
struct PositionClassTable {
  std::map<std::string, std::int64_t> classes;
  int n = 0;
};

enum class EquivalenceLevel { kWilf, kStrong, kSuperStrong };

std::string level_name(EquivalenceLevel level);
EquivalenceLevel parse_level(std::string_view name);

/// |I_n(p)| for n = 0..n_max in one pruned depth-first pass: a prefix that
/// already contains p is never extended, so only avoiders are visited.
std::vector<std::int64_t> avoidance_series(const VincularPattern& p, int n_max,
                                           int jobs = 1,
                                           int guard = kDefaultEnumerationGuard);

std::int64_t avoidance_count(const VincularPattern& p, int n, int jobs = 1,
                             int guard = kDefaultEnumerationGuard);

OccurrenceDistribution distribution(const VincularPattern& p, int n,
                                    int jobs = 1,
                                    int guard = kDefaultEnumerationGuard);

PositionClassTable position_classes(const VincularPattern& p, int n,
                                    int jobs = 1,
                                    int guard = kDefaultEnumerationGuard);

/// Counts of e in I_n keyed by (oc(p,e), oc(q,e)).
std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>
joint_distribution(const VincularPattern& p, const VincularPattern& q, int n,
                   int jobs = 1, int guard = kDefaultEnumerationGuard);

struct EquivalenceCheck {
  EquivalenceLevel level = EquivalenceLevel::kWilf;
  int n_max = 0;
  std::vector<bool> equal_at;   // index n, size n_max + 1; equal_at[0] = true
  bool equivalent = true;       // conjunction over n <= n_max
  int first_difference = 0;     // smallest failing n, 0 when equivalent
};

EquivalenceCheck check_equivalence(const VincularPattern& p,
                                   const VincularPattern& q, int n_max,
                                   EquivalenceLevel level, int jobs = 1,
                                   int guard = kDefaultEnumerationGuard);

struct SeparationWitness {
  VincularPattern p;
  VincularPattern q;
  int n = 0;  // smallest n at which the level statistic differs
};

struct Classification {
  EquivalenceLevel level = EquivalenceLevel::kWilf;
  int n_max = 0;
  std::vector<std::vector<VincularPattern>> classes;
  std::vector<SeparationWitness> witnesses;
};

/// Partitions all_patterns(r) by equality of the level statistic for every
/// n <= n_max. The partition is refined level by level; groups that become
/// singletons drop out, so deep enumeration only runs for patterns that are
/// still candidates for equivalence.
Classification classify_all(int r, int n_max, EquivalenceLevel level,
                            int jobs = 1,
                            int guard = kDefaultEnumerationGuard);

BigInt binomial(std::int64_t m, std::int64_t k);

/// mu_n(p,k): pairs (e, M) with M a k-subset of the occurrences of p in e.
/// Computed directly from per-sequence occurrence sets.
BigInt marked_count(const VincularPattern& p, int n, std::int64_t k,
                    int jobs = 1, int guard = kDefaultEnumerationGuard);

/// Same quantity through the binomial transform of the occurrence-count
/// distribution: sum over m of |I_n(p,m)| * C(m,k).
BigInt marked_count_via_distribution(const VincularPattern& p, int n,
                                     std::int64_t k, int jobs = 1,
                                     int guard = kDefaultEnumerationGuard);

/// Em*(p,e) for a pattern of shape a(bc): the middle positions i such that
/// e_t e_i e_{i+1} is an occurrence for some t < i. Rejects other shapes.
std::vector<int> em_star(const VincularPattern& p, const InversionSequence& e);

/// Bitmask of a position set S within [n] (bit i-1 for position i).
std::uint32_t position_mask(const std::vector<int>& s, int n);

/// Census of Em* over I_n: mask of Em*(p,e) -> number of such e.
std::map<std::uint32_t, std::int64_t> em_star_census(
    const VincularPattern& p, int n, int jobs = 1,
    int guard = kDefaultEnumerationGuard);

/// f_=(S) = |{e : Em*(p,e) = S}| and f_>=(S) = |{e : Em*(p,e) ⊇ S}|.
std::int64_t f_eq(const VincularPattern& p, int n, const std::vector<int>& s,
                  int jobs = 1, int guard = kDefaultEnumerationGuard);
std::int64_t f_geq(const VincularPattern& p, int n, const std::vector<int>& s,
                   int jobs = 1, int guard = kDefaultEnumerationGuard);

}  // namespace invseq
