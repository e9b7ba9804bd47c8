#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Core data model: inversion sequences, vincular patterns, and occurrence
// enumeration. Positions are 1-based everywhere, including serialized forms.

namespace invseq {

/// Sequence e_1...e_n with 0 <= e_i < i. The empty sequence is valid.
class InversionSequence {
 public:
  InversionSequence() = default;
  explicit InversionSequence(std::vector<int> entries);

  /// Accepts "0013204" (digit per entry) or "0,0,1,3,2,0,4".
  static InversionSequence parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// 1-based access; at(i) = e_i.
  int at(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }

  const std::vector<int>& entries() const { return entries_; }

  /// Appends h as e_{n+1}; requires 0 <= h <= n.
  void push_back(int h);
  void pop_back();

  /// Returns e with h appended.
  InversionSequence appended(int h) const;

  /// Digit string when all entries <= 9, comma-separated otherwise.
  std::string str() const;

  auto operator<=>(const InversionSequence&) const = default;

 private:
  std::vector<int> entries_;
};

/// Closed position interval [first,last], 1-based, with last >= first + 1.
struct Block {
  int first = 0;
  int last = 0;
  auto operator<=>(const Block&) const = default;
};

/// Maximal run of pattern positions required to sit at adjacent host
/// positions: an underline block, or a single free position.
struct Segment {
  int start = 0;  // 1-based pattern position
  int len = 0;
  auto operator<=>(const Segment&) const = default;
};

/// Reduced word p_1...p_r over {0,...,r-1} with disjoint underline blocks.
class VincularPattern {
 public:
  VincularPattern(std::vector<int> values, std::vector<Block> blocks);

  /// Grammar: pattern := item+ ; item := digit | '(' digit digit+ ')'.
  static VincularPattern parse(std::string_view text);

  int length() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<Segment>& segments() const { return segments_; }

  bool is_classical() const { return blocks_.empty(); }
  bool is_consecutive() const {
    return blocks_.size() == 1 && blocks_[0].first == 1 &&
           blocks_[0].last == length();
  }
  bool is_hybrid() const { return !is_classical() && !is_consecutive(); }

  /// Canonical text form; round-trips with parse.
  std::string str() const;

  auto operator<=>(const VincularPattern&) const = default;

 private:
  std::vector<int> values_;
  std::vector<Block> blocks_;   // sorted by first
  std::vector<Segment> segments_;
};

/// Replaces every instance of the i-th smallest entry with i-1.
/// Idempotent; rejects the empty word.
std::vector<int> reduce(const std::vector<int>& word);

/// True iff word is its own reduction.
bool is_reduced(const std::vector<int>& word);

/// Sorted 1-based host positions of one occurrence.
using PositionSet = std::vector<int>;

/// The set of position sets indexing occurrences of a pattern in a sequence.
class OccurrenceSet {
 public:
  OccurrenceSet() = default;
  explicit OccurrenceSet(std::vector<PositionSet> sets);

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(const PositionSet& positions) const;
  const std::vector<PositionSet>& sets() const { return sets_; }

  /// Canonical serialization "{{1,2,6},{2,4,5}}" (sets sorted lex), "{}"
  /// when empty. Used as the map key for position-class statistics.
  std::string str() const;

  auto operator<=>(const OccurrenceSet&) const = default;

 private:
  std::vector<PositionSet> sets_;  // each ascending; sorted lexicographically
};

OccurrenceSet occurrences(const VincularPattern& p, const InversionSequence& e);
std::int64_t count_occurrences(const VincularPattern& p,
                               const InversionSequence& e);
bool contains(const VincularPattern& p, const InversionSequence& e);
bool avoids(const VincularPattern& p, const InversionSequence& e);

/// True iff some occurrence of p in e has its largest position equal to
/// e's last position. Drives pruned depth-first avoider counting: a prefix
/// that already contains p never needs re-scanning.
bool creates_occurrence_at_end(const VincularPattern& p,
                               const InversionSequence& e);

/// W(e) = { j : e_i <= e_j for all i < j }, ascending. 1 ∈ W(e) for n >= 1.
std::vector<int> weak_lr_maxima(const InversionSequence& e);

/// Des(e) = { i in [n-1] : e_i > e_{i+1} }, ascending.
std::vector<int> descents(const InversionSequence& e);

/// Asc(e) = { i in [n-1] : e_i < e_{i+1} }, ascending.
std::vector<int> ascents(const InversionSequence& e);

inline constexpr int kMaxPatternLength = 5;

/// Every reduced word of length r crossed with every valid set of disjoint
/// underline blocks, in canonical order (word lex, then block list lex).
/// r=3 yields 52 patterns: 13 classical, 13 consecutive, 26 hybrid.
std::vector<VincularPattern> all_patterns(int r, int guard = kMaxPatternLength);

}  // namespace invseq
