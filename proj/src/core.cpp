#include "invseq/core.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace invseq {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

InversionSequence::InversionSequence(std::vector<int> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] > static_cast<int>(i)) {
      fail("invalid inversion sequence: entry e_" + std::to_string(i + 1) +
           " = " + std::to_string(entries_[i]) + " out of range [0," +
           std::to_string(i) + "]");
    }
  }
}

InversionSequence InversionSequence::parse(std::string_view text) {
  std::vector<int> entries;
  if (text.find(',') != std::string_view::npos) {
    std::string buf(text);
    std::istringstream in(buf);
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        fail("invalid sequence literal: '" + std::string(text) + "'");
      }
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) fail("invalid sequence literal: '" + std::string(text) + "'");
      entries.push_back(value);
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') fail("invalid sequence literal: '" + std::string(text) + "'");
      entries.push_back(c - '0');
    }
  }
  return InversionSequence(std::move(entries));
}

void InversionSequence::push_back(int h) {
  if (h < 0 || h > size()) {
    fail("push_back: site " + std::to_string(h) + " out of range [0," +
         std::to_string(size()) + "]");
  }
  entries_.push_back(h);
}

void InversionSequence::pop_back() { entries_.pop_back(); }

InversionSequence InversionSequence::appended(int h) const {
  InversionSequence out = *this;
  out.push_back(h);
  return out;
}

std::string InversionSequence::str() const {
  bool digits = std::all_of(entries_.begin(), entries_.end(),
                            [](int v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + entries_[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
  }
  return out;
}

std::vector<int> reduce(const std::vector<int>& word) {
  if (word.empty()) fail("reduce: empty word");
  std::map<int, int> rank;
  for (int v : word) rank[v] = 0;
  int next = 0;
  for (auto& [value, r] : rank) r = next++;
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word) out.push_back(rank[v]);
  return out;
}

bool is_reduced(const std::vector<int>& word) {
  return !word.empty() && reduce(word) == word;
}

namespace {

std::vector<Segment> make_segments(int r, const std::vector<Block>& blocks) {
  std::vector<Segment> segs;
  int pos = 1;
  std::size_t bi = 0;
  while (pos <= r) {
    if (bi < blocks.size() && blocks[bi].first == pos) {
      segs.push_back({pos, blocks[bi].last - blocks[bi].first + 1});
      pos = blocks[bi].last + 1;
      ++bi;
    } else {
      segs.push_back({pos, 1});
      ++pos;
    }
  }
  return segs;
}

}  // namespace

VincularPattern::VincularPattern(std::vector<int> values,
                                 std::vector<Block> blocks)
    : values_(std::move(values)), blocks_(std::move(blocks)) {
  if (values_.empty()) fail("pattern: empty word");
  if (!is_reduced(values_)) fail("pattern: word is not reduced");
  std::sort(blocks_.begin(), blocks_.end());
  int prev_end = 0;
  for (const Block& b : blocks_) {
    if (b.last < b.first + 1) fail("pattern: underline block of length < 2");
    if (b.first < 1 || b.last > length()) fail("pattern: block out of range");
    if (b.first <= prev_end) fail("pattern: overlapping blocks");
    prev_end = b.last;
  }
  segments_ = make_segments(length(), blocks_);
}

VincularPattern VincularPattern::parse(std::string_view text) {
  std::vector<int> values;
  std::vector<Block> blocks;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      values.push_back(c - '0');
      ++i;
    } else if (c == '(') {
      int first = static_cast<int>(values.size()) + 1;
      ++i;
      while (i < text.size() && text[i] != ')') {
        if (text[i] < '0' || text[i] > '9') {
          fail("pattern: stray character '" + std::string(1, text[i]) + "'");
        }
        values.push_back(text[i] - '0');
        ++i;
      }
      if (i == text.size()) fail("pattern: unterminated block");
      ++i;  // ')'
      int last = static_cast<int>(values.size());
      if (last < first + 1) fail("pattern: underline block of length < 2");
      blocks.push_back({first, last});
    } else {
      fail("pattern: stray character '" + std::string(1, c) + "'");
    }
  }
  return VincularPattern(std::move(values), std::move(blocks));
}

std::string VincularPattern::str() const {
  std::string out;
  std::size_t bi = 0;
  for (int pos = 1; pos <= length(); ++pos) {
    if (bi < blocks_.size() && blocks_[bi].first == pos) out += '(';
    out += static_cast<char>('0' + values_[static_cast<std::size_t>(pos - 1)]);
    if (bi < blocks_.size() && blocks_[bi].last == pos) {
      out += ')';
      ++bi;
    }
  }
  return out;
}

OccurrenceSet::OccurrenceSet(std::vector<PositionSet> sets)
    : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool OccurrenceSet::contains(const PositionSet& positions) const {
  return std::binary_search(sets_.begin(), sets_.end(), positions);
}

std::string OccurrenceSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (std::size_t j = 0; j < sets_[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(sets_[i][j]);
    }
    out += '}';
  }
  out += '}';
  return out;
}

namespace {

// Backtracking search over segment placements. Each underline block slides
// as one window; free positions are singleton segments chosen over
// increasing indices. Every entry of a newly placed segment is compared
// against everything already placed, so order-inconsistent prefixes are cut
// immediately. A full placement is an occurrence exactly when all pairwise
// comparisons between host entries match those between pattern values
// (that is equivalent to the induced word reducing to the pattern).
//
// With m segments the search tries O(n^m) placements: n for a consecutive
// pattern, n^2 for a one-block hybrid of length 3, n^3 for a classical
// pattern of length 3, less in practice through the pruning.
//
// When pin_last is set, the final segment is forced to end at position n,
// which enumerates exactly the occurrences whose largest position is n.
//
// visit receives the sorted positions; returning false stops the search.
class OccurrenceScan {
 public:
  using Visit = bool (*)(void*, const PositionSet&);

  OccurrenceScan(const VincularPattern& p, const InversionSequence& e,
                 bool pin_last, Visit visit, void* ctx)
      : pattern_(p), seq_(e), pin_last_(pin_last), visit_(visit), ctx_(ctx) {
    const auto& segs = p.segments();
    suffix_len_.resize(segs.size() + 1, 0);
    for (std::size_t j = segs.size(); j-- > 0;) {
      suffix_len_[j] = suffix_len_[j + 1] + segs[j].len;
    }
    positions_.resize(static_cast<std::size_t>(p.length()));
  }

  bool run() {
    if (pattern_.length() > seq_.size()) return true;
    return place(0, 1, 0);
  }

 private:
  bool consistent(int host_pos, int pat_idx, int placed) const {
    const auto& v = pattern_.values();
    int x = seq_.at(host_pos);
    for (int q = 0; q < placed; ++q) {
      int y = seq_.at(positions_[static_cast<std::size_t>(q)]);
      int a = v[static_cast<std::size_t>(pat_idx)];
      int b = v[static_cast<std::size_t>(q)];
      if ((x < y) != (a < b) || (x == y) != (a == b)) return false;
    }
    return true;
  }

  // j: segment index; min_start: smallest allowed host start; placed: number
  // of pattern positions already assigned.
  bool place(std::size_t j, int min_start, int placed) {
    const auto& segs = pattern_.segments();
    if (j == segs.size()) return visit_(ctx_, positions_);
    int len = segs[j].len;
    int lo = min_start;
    int hi = seq_.size() - suffix_len_[j] + 1;
    if (pin_last_ && j + 1 == segs.size()) lo = std::max(lo, hi);
    for (int s = lo; s <= hi; ++s) {
      bool ok = true;
      for (int t = 0; t < len && ok; ++t) {
        // Record each position as soon as it passes so that later entries
        // of the same segment are compared against it.
        ok = consistent(s + t, placed + t, placed + t);
        if (ok) positions_[static_cast<std::size_t>(placed + t)] = s + t;
      }
      if (ok) {
        if (!place(j + 1, s + len, placed + len)) return false;
      }
    }
    return true;
  }

  const VincularPattern& pattern_;
  const InversionSequence& seq_;
  bool pin_last_;
  Visit visit_;
  void* ctx_;
  std::vector<int> suffix_len_;
  PositionSet positions_;
};

}  // namespace

OccurrenceSet occurrences(const VincularPattern& p,
                          const InversionSequence& e) {
  std::vector<PositionSet> found;
  OccurrenceScan scan(
      p, e, /*pin_last=*/false,
      [](void* ctx, const PositionSet& pos) {
        static_cast<std::vector<PositionSet>*>(ctx)->push_back(pos);
        return true;
      },
      &found);
  scan.run();
  return OccurrenceSet(std::move(found));
}

std::int64_t count_occurrences(const VincularPattern& p,
                               const InversionSequence& e) {
  std::int64_t count = 0;
  OccurrenceScan scan(
      p, e, /*pin_last=*/false,
      [](void* ctx, const PositionSet&) {
        ++*static_cast<std::int64_t*>(ctx);
        return true;
      },
      &count);
  scan.run();
  return count;
}

bool contains(const VincularPattern& p, const InversionSequence& e) {
  OccurrenceScan scan(
      p, e, /*pin_last=*/false,
      [](void*, const PositionSet&) { return false; }, nullptr);
  return !scan.run();
}

bool avoids(const VincularPattern& p, const InversionSequence& e) {
  return !contains(p, e);
}

bool creates_occurrence_at_end(const VincularPattern& p,
                               const InversionSequence& e) {
  OccurrenceScan scan(
      p, e, /*pin_last=*/true,
      [](void*, const PositionSet&) { return false; }, nullptr);
  return !scan.run();
}

std::vector<int> weak_lr_maxima(const InversionSequence& e) {
  std::vector<int> out;
  int best = -1;
  for (int j = 1; j <= e.size(); ++j) {
    if (e.at(j) >= best) {
      best = e.at(j);
      out.push_back(j);
    }
  }
  return out;
}

std::vector<int> descents(const InversionSequence& e) {
  std::vector<int> out;
  for (int i = 1; i < e.size(); ++i) {
    if (e.at(i) > e.at(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> ascents(const InversionSequence& e) {
  std::vector<int> out;
  for (int i = 1; i < e.size(); ++i) {
    if (e.at(i) < e.at(i + 1)) out.push_back(i);
  }
  return out;
}

namespace {

void block_configs(int r, int from, std::vector<Block>& current,
                   std::vector<std::vector<Block>>& out) {
  out.push_back(current);
  for (int first = from; first + 1 <= r; ++first) {
    for (int last = first + 1; last <= r; ++last) {
      current.push_back({first, last});
      block_configs(r, last + 1, current, out);
      current.pop_back();
    }
  }
}

void reduced_words(int r, std::vector<int>& word,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(word.size()) == r) {
    if (is_reduced(word)) out.push_back(word);
    return;
  }
  for (int v = 0; v < r; ++v) {
    word.push_back(v);
    reduced_words(r, word, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<VincularPattern> all_patterns(int r, int guard) {
  if (r < 2) fail("all_patterns: r must be at least 2");
  if (r > guard) {
    fail("all_patterns: r = " + std::to_string(r) + " exceeds guard " +
         std::to_string(guard));
  }
  std::vector<std::vector<int>> words;
  std::vector<int> word;
  reduced_words(r, word, words);

  std::vector<std::vector<Block>> configs;
  std::vector<Block> current;
  block_configs(r, 1, current, configs);
  std::sort(configs.begin(), configs.end());

  std::vector<VincularPattern> out;
  out.reserve(words.size() * configs.size());
  for (const auto& w : words) {
    for (const auto& cfg : configs) {
      out.emplace_back(w, cfg);
    }
  }
  return out;
}

}  // namespace invseq
