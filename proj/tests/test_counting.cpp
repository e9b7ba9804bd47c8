#include <set>
#include <stdexcept>

#include "doctest.h"
#include "invseq/counting.hpp"

using namespace invseq;

namespace {

VincularPattern pat(const char* text) { return VincularPattern::parse(text); }

InversionSequence seq(const char* text) {
  return InversionSequence::parse(text);
}

// Plain streaming count, kept deliberately free of the pruned DFS that
// avoidance_series uses.
std::int64_t streaming_avoider_count(const VincularPattern& p, int n) {
  std::int64_t count = 0;
  for_each_inversion_sequence(n, [&](const InversionSequence& e) {
    if (avoids(p, e)) ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("avoidance counts match the table rows") {
  CHECK(avoidance_count(pat("(01)0"), 10, 2) == 201608);
  CHECK(avoidance_count(pat("1(01)"), 4) == 23);
  for (const VincularPattern& p : all_patterns(3)) {
    CHECK(avoidance_count(p, 1) == 1);
  }
}

TEST_CASE("pruned avoidance agrees with plain streaming") {
  for (const char* text :
       {"(01)0", "2(10)", "201", "(100)", "1(01)", "(01)(01)"}) {
    VincularPattern p = pat(text);
    std::vector<std::int64_t> series = avoidance_series(p, 7);
    std::vector<std::int64_t> parallel = avoidance_series(p, 7, 4);
    for (int n = 0; n <= 7; ++n) {
      CHECK(series[n] == streaming_avoider_count(p, n));
      CHECK(series[n] == parallel[n]);
    }
  }
}

TEST_CASE("single-occurrence counts separate the near-equivalent pairs") {
  CHECK(distribution(pat("2(10)"), 7).counts[1] == 470);
  CHECK(distribution(pat("2(01)"), 7).counts[1] == 466);
  CHECK(distribution(pat("(10)0"), 6).counts[1] == 134);
  CHECK(distribution(pat("(10)1"), 6).counts[1] == 132);
  CHECK(distribution(pat("(01)0"), 5).counts[1] == 52);
  CHECK(distribution(pat("(01)1"), 5).counts[1] == 50);
}

TEST_CASE("parallel scans are deterministic") {
  VincularPattern p = pat("1(01)");
  CHECK(distribution(p, 6, 3).counts == distribution(p, 6, 1).counts);
  CHECK(position_classes(p, 6, 3).classes ==
        position_classes(p, 6, 1).classes);
  CHECK(joint_distribution(p, pat("1(10)"), 6, 3) ==
        joint_distribution(p, pat("1(10)"), 6, 1));
}

TEST_CASE("distribution and position classes total n!") {
  for (const VincularPattern& p : all_patterns(3)) {
    for (int n = 0; n <= 6; ++n) {
      OccurrenceDistribution dist = distribution(p, n);
      std::int64_t total = 0;
      for (const auto& [m, c] : dist.counts) total += c;
      CHECK(total == factorial(n));
      CHECK(dist.counts[0] == avoidance_count(p, n));

      PositionClassTable table = position_classes(p, n);
      total = 0;
      for (const auto& [s, c] : table.classes) total += c;
      CHECK(total == factorial(n));
      auto empty_class = table.classes.find("{}");
      std::int64_t avoiders =
          empty_class == table.classes.end() ? 0 : empty_class->second;
      CHECK(avoiders == avoidance_count(p, n));
    }
  }
  // Spot-check the same invariants at n = 7 and 8 on the tree classes.
  for (const char* text : {"(10)0", "(10)1", "(01)0", "(01)1"}) {
    for (int n = 7; n <= 8; ++n) {
      VincularPattern p = pat(text);
      std::int64_t total = 0;
      for (const auto& [m, c] : distribution(p, n, 2).counts) total += c;
      CHECK(total == factorial(n));
      total = 0;
      for (const auto& [s, c] : position_classes(p, n, 2).classes) total += c;
      CHECK(total == factorial(n));
    }
  }
}

TEST_CASE("position classes reproduce the worked example") {
  PositionClassTable table = position_classes(pat("1(01)"), 6);
  CHECK(table.classes["{{2,4,5},{3,4,5}}"] == 6);
  CHECK(table.classes["{{2,5,6},{4,5,6}}"] == 1);
  PositionClassTable other = position_classes(pat("1(10)"), 6);
  CHECK(other.classes["{{2,5,6},{4,5,6}}"] == 2);
}

TEST_CASE("joint distribution of 1(01) and 1(10) is asymmetric") {
  VincularPattern p = pat("1(01)");
  VincularPattern q = pat("1(10)");
  auto joint = joint_distribution(p, q, 6);
  CHECK(joint[{3, 0}] == 0);
  CHECK(joint[{0, 3}] == 1);

  // The (0,3) cell is the single sequence 011110.
  for_each_inversion_sequence(6, [&](const InversionSequence& e) {
    if (count_occurrences(p, e) == 0 && count_occurrences(q, e) == 3) {
      CHECK(e.str() == "011110");
    }
  });

  // Marginals match the plain distributions.
  std::map<std::int64_t, std::int64_t> marg_p, marg_q;
  for (const auto& [key, c] : joint) {
    marg_p[key.first] += c;
    marg_q[key.second] += c;
  }
  CHECK(marg_p == distribution(p, 6).counts);
  CHECK(marg_q == distribution(q, 6).counts);

  // Diagonal symmetry when both coordinates use the same pattern.
  auto self = joint_distribution(p, p, 5);
  for (const auto& [key, c] : self) CHECK(key.first == key.second);
}

TEST_CASE("check_equivalence levels") {
  auto wilf = check_equivalence(pat("(01)0"), pat("(01)1"), 8,
                                EquivalenceLevel::kWilf);
  CHECK(wilf.equivalent);
  for (int n = 1; n <= 8; ++n) CHECK(wilf.equal_at[n]);

  auto strong = check_equivalence(pat("1(01)"), pat("1(10)"), 7,
                                  EquivalenceLevel::kStrong);
  CHECK(strong.equivalent);

  auto super = check_equivalence(pat("1(01)"), pat("1(10)"), 7,
                                 EquivalenceLevel::kSuperStrong);
  CHECK_FALSE(super.equivalent);
  CHECK(super.first_difference == 6);

  auto self = check_equivalence(pat("201"), pat("201"), 6,
                                EquivalenceLevel::kSuperStrong);
  CHECK(self.equivalent);
}

TEST_CASE("level implications on all length-3 pairs") {
  // super-strong equality implies strong equality implies Wilf equality,
  // statistic by statistic.
  std::vector<VincularPattern> patterns = all_patterns(3);
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::int64_t> counts;
    std::vector<std::map<std::int64_t, std::int64_t>> dists;
    std::vector<std::map<std::string, std::int64_t>> tables;
    for (const VincularPattern& p : patterns) {
      counts.push_back(avoidance_count(p, n));
      dists.push_back(distribution(p, n).counts);
      tables.push_back(position_classes(p, n).classes);
    }
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      for (std::size_t j = i + 1; j < patterns.size(); ++j) {
        if (tables[i] == tables[j]) CHECK(dists[i] == dists[j]);
        if (dists[i] == dists[j]) CHECK(counts[i] == counts[j]);
      }
    }
  }
}

TEST_CASE("classification smoke test at r=2") {
  Classification c = classify_all(2, 6, EquivalenceLevel::kWilf);
  std::size_t covered = 0;
  for (const auto& cls : c.classes) covered += cls.size();
  CHECK(covered == all_patterns(2).size());
  // Every cross-class pair carries a witness.
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& w : c.witnesses) {
    CHECK(w.n <= 6);
    seen.insert({w.p.str(), w.q.str()});
  }
  for (std::size_t a = 0; a < c.classes.size(); ++a) {
    for (std::size_t b = a + 1; b < c.classes.size(); ++b) {
      for (const auto& p : c.classes[a]) {
        for (const auto& q : c.classes[b]) {
          bool found = seen.count({p.str(), q.str()}) ||
                       seen.count({q.str(), p.str()});
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("marked counts and the binomial transform") {
  for (const char* text : {"1(01)", "1(10)"}) {
    VincularPattern p = pat(text);
    CHECK(marked_count(p, 5, 0) == factorial(5));
    for (int n = 0; n <= 6; ++n) {
      for (std::int64_t k = 0; k <= 4; ++k) {
        CHECK(marked_count(p, n, k) ==
              marked_count_via_distribution(p, n, k));
      }
    }
  }
  // mu_7(1(01), k) = mu_7(1(10), k) for all k.
  for (std::int64_t k = 0; k <= 12; ++k) {
    CHECK(marked_count(pat("1(01)"), 7, k) == marked_count(pat("1(10)"), 7, k));
  }
  CHECK(marked_count(pat("201"), 5, 0) == factorial(5));
}

TEST_CASE("em_star middle positions") {
  CHECK(em_star(pat("1(01)"), seq("012101")) == std::vector<int>{5});
  CHECK(em_star(pat("1(01)"), seq("0123")).empty());
  CHECK(em_star(pat("1(10)"), seq("010110")) == std::vector<int>{5});
  CHECK_THROWS_AS(em_star(pat("(01)0"), seq("0123")), std::invalid_argument);
  CHECK_THROWS_AS(em_star(pat("101"), seq("0123")), std::invalid_argument);

  // Oracle: middle positions read off the occurrence sets directly.
  for (const char* text : {"1(01)", "1(10)", "0(12)"}) {
    VincularPattern p = pat(text);
    for (int n = 0; n <= 6; ++n) {
      for_each_inversion_sequence(n, [&](const InversionSequence& e) {
        std::set<int> expected;
        OccurrenceSet occ_set = occurrences(p, e);
        for (const PositionSet& occ : occ_set.sets()) {
          expected.insert(occ[1]);
        }
        std::vector<int> got = em_star(p, e);
        CHECK(got == std::vector<int>(expected.begin(), expected.end()));
      });
    }
  }
}

TEST_CASE("f_eq and f_geq with the inclusion-exclusion round trip") {
  VincularPattern p = pat("1(01)");
  CHECK(f_eq(p, 5, {}) == avoidance_count(p, 5));
  CHECK(f_geq(p, 5, {}) == factorial(5));
  CHECK(f_geq(p, 6, {}) == factorial(6));

  for (int n = 4; n <= 6; ++n) {
    auto census = em_star_census(p, n);
    std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t s = 0; s <= full; ++s) {
      // f_=(S) recovered from f_>= by alternating sums over supersets.
      std::int64_t direct = 0;
      if (auto it = census.find(s); it != census.end()) direct = it->second;
      std::int64_t pie = 0;
      for (std::uint32_t t = 0; t <= full; ++t) {
        if ((t & s) != s) continue;
        std::int64_t geq = 0;
        for (const auto& [mask, c] : census) {
          if ((mask & t) == t) geq += c;
        }
        int extra = __builtin_popcount(t & ~s);
        pie += (extra % 2 == 0 ? geq : -geq);
      }
      CHECK(direct == pie);
    }
  }
}

TEST_CASE("Em* equidistribution between 1(01) and 1(10)") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(em_star_census(pat("1(01)"), n) == em_star_census(pat("1(10)"), n));
  }
}
