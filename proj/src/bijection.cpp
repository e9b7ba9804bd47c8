#include "invseq/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "invseq/counting.hpp"
#include "invseq/enumerate.hpp"

namespace invseq {

InversionSequence phi(const InversionSequence& e) {
  std::vector<int> out = e.entries();
  std::vector<int> maxima = weak_lr_maxima(e);
  maxima.push_back(e.size() + 1);  // w_{t+1} := n+1
  int prev = 0;
  for (int w : maxima) {
    // Reverse positions prev+1 .. w-1 (the block between two maxima).
    std::reverse(out.begin() + prev, out.begin() + (w - 1));
    prev = w;
  }
  return InversionSequence(std::move(out));
}

VincularPattern reversed_consecutive(const VincularPattern& p) {
  if (!p.is_consecutive()) {
    throw std::invalid_argument("reversed_consecutive: pattern " + p.str() +
                                " is not consecutive");
  }
  std::vector<int> values(p.values().rbegin(), p.values().rend());
  return VincularPattern(std::move(values), {{1, p.length()}});
}

VincularPattern extend_pattern(const VincularPattern& p) {
  if (!p.is_consecutive()) {
    throw std::invalid_argument("extend_pattern: pattern " + p.str() +
                                " is not consecutive");
  }
  int d = *std::max_element(p.values().begin(), p.values().end());
  if (d + 1 > p.length()) {
    throw std::invalid_argument("extend_pattern: (d+1)-prefix of " + p.str() +
                                " is not a reduced word");
  }
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(p.length()) + 1);
  values.push_back(d + 1);
  values.insert(values.end(), p.values().begin(), p.values().end());
  return VincularPattern(std::move(values), {{2, p.length() + 1}});
}

ReversalTheoremReport verify_reversal_theorem(const VincularPattern& p,
                                              int n_max, int jobs) {
  ReversalTheoremReport report{extend_pattern(p),
                               extend_pattern(reversed_consecutive(p)),
                               true,
                               true,
                               {},
                               {}};
  report.avoid_extended.assign(static_cast<std::size_t>(n_max) + 1, 0);
  report.avoid_extended_reverse.assign(static_cast<std::size_t>(n_max) + 1, 0);
  report.avoid_extended[0] = 1;
  report.avoid_extended_reverse[0] = 1;

  struct Acc {
    std::int64_t avoid_fwd = 0;
    std::int64_t avoid_rev = 0;
    bool transported = true;
  };
  for (int n = 1; n <= n_max; ++n) {
    Acc acc = parallel_scan_sequences<Acc>(
        n, jobs, Acc{},
        [&](const InversionSequence& e, Acc& a) {
          bool fwd = contains(report.extended, e);
          bool rev = contains(report.extended_reverse, phi(e));
          if (fwd != rev) a.transported = false;
          if (!fwd) ++a.avoid_fwd;
          if (!contains(report.extended_reverse, e)) ++a.avoid_rev;
        },
        [](Acc& into, const Acc& from) {
          into.avoid_fwd += from.avoid_fwd;
          into.avoid_rev += from.avoid_rev;
          into.transported = into.transported && from.transported;
        });
    report.avoid_extended[static_cast<std::size_t>(n)] = acc.avoid_fwd;
    report.avoid_extended_reverse[static_cast<std::size_t>(n)] = acc.avoid_rev;
    report.transport_holds = report.transport_holds && acc.transported;
    report.counts_equal =
        report.counts_equal && acc.avoid_fwd == acc.avoid_rev;
  }
  return report;
}

std::vector<int> rho(const std::vector<int>& s, int n) {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int i : sorted) {
    if (i < 1 || i >= n) {
      throw std::invalid_argument("rho: position " + std::to_string(i) +
                                  " outside [1," + std::to_string(n - 1) +
                                  "]");
    }
  }
  std::vector<int> map(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) map[static_cast<std::size_t>(i)] = i;
  std::size_t a = 0;
  while (a < sorted.size()) {
    std::size_t b = a;
    while (b + 1 < sorted.size() && sorted[b + 1] == sorted[b] + 1) ++b;
    int start = sorted[a];                  // i_j
    int len = sorted[b] - sorted[a] + 1;    // l_j
    for (int i = start; i <= start + len; ++i) {
      map[static_cast<std::size_t>(i)] = 2 * start + len - i;
    }
    a = b + 1;
  }
  return map;
}

MarkedSequence MarkedSequence::checked(InversionSequence e,
                                       std::vector<PositionSet> marks,
                                       const VincularPattern& p) {
  OccurrenceSet occ = occurrences(p, e);
  for (auto& mark : marks) {
    std::sort(mark.begin(), mark.end());
    if (!occ.contains(mark)) {
      OccurrenceSet bad({mark});
      throw std::invalid_argument("mark " + bad.str() +
                                  " is not an occurrence of " + p.str() +
                                  " in " + e.str());
    }
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  return MarkedSequence{std::move(e), std::move(marks)};
}

namespace {

const VincularPattern& marked_pair_pattern(bool ascending_block) {
  static const VincularPattern one_01 = VincularPattern::parse("1(01)");
  static const VincularPattern one_10 = VincularPattern::parse("1(10)");
  return ascending_block ? one_01 : one_10;
}

const VincularPattern& marked_pair_other(const VincularPattern& source) {
  if (source == marked_pair_pattern(true)) return marked_pair_pattern(false);
  if (source == marked_pair_pattern(false)) return marked_pair_pattern(true);
  throw std::invalid_argument(
      "the marked-occurrence bijection is defined for 1(01) and 1(10), got " +
      source.str());
}

}  // namespace

MarkedSequence marked_map(const MarkedSequence& input,
                          const VincularPattern& source) {
  const VincularPattern& target = marked_pair_other(source);
  MarkedSequence in = MarkedSequence::checked(input.sequence, input.marks,
                                              source);
  int n = in.sequence.size();

  std::vector<int> middles;
  middles.reserve(in.marks.size());
  for (const auto& mark : in.marks) middles.push_back(mark[1]);
  std::vector<int> map = rho(middles, n);

  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    entries[static_cast<std::size_t>(i - 1)] =
        in.sequence.at(map[static_cast<std::size_t>(i)]);
  }

  std::vector<PositionSet> marks;
  marks.reserve(in.marks.size());
  for (const auto& mark : in.marks) {
    marks.push_back({map[static_cast<std::size_t>(mark[0])],
                     map[static_cast<std::size_t>(mark[2])],
                     map[static_cast<std::size_t>(mark[1])]});
  }
  return MarkedSequence::checked(InversionSequence(std::move(entries)),
                                 std::move(marks), target);
}

InversionSequence em_star_map(const InversionSequence& e,
                              const std::vector<int>& s,
                              const VincularPattern& source) {
  marked_pair_other(source);  // restrict to the 1(01)/1(10) pair
  std::vector<int> have = em_star(source, e);
  for (int i : s) {
    if (!std::binary_search(have.begin(), have.end(), i)) {
      throw std::invalid_argument("em_star_map: position " +
                                  std::to_string(i) + " is not in Em*(" +
                                  source.str() + ", " + e.str() + ")");
    }
  }
  int n = e.size();
  std::vector<int> map = rho(s, n);
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    entries[static_cast<std::size_t>(i - 1)] =
        e.at(map[static_cast<std::size_t>(i)]);
  }
  return InversionSequence(std::move(entries));
}

}  // namespace invseq
