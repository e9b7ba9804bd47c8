#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "invseq/core.hpp"
#include "invseq/counting.hpp"

// Cross-checking of computed counting sequences against OEIS b-files. A
// bundled snapshot makes everything work offline; live fetching is opt-in
// and caches into the snapshot directory.

namespace invseq {

struct SequenceRecord {
  std::string oeis_id;
  long first_index = 0;  // b-file index of terms[0]
  std::vector<BigInt> terms;
  enum class Source { kSnapshot, kLive } source = Source::kSnapshot;

  bool has_index(long idx) const {
    return idx >= first_index &&
           idx < first_index + static_cast<long>(terms.size());
  }
  const BigInt& term_at_index(long idx) const;
};

/// Parses b-file text: lines of "index value", '#' comments ignored,
/// indices must be consecutive. Throws on malformed input.
SequenceRecord parse_bfile(const std::string& oeis_id,
                           const std::string& text);

/// INVSEQ_OEIS_CACHE if set, otherwise the bundled data/oeis directory.
std::filesystem::path default_snapshot_dir();

class OeisClient {
 public:
  struct Options {
    std::filesystem::path snapshot_dir;
    bool live = false;
    std::string base_url = "https://oeis.org";
  };

  explicit OeisClient(Options options);

  /// Snapshot lookup, falling back to a live b-file fetch (with caching)
  /// when enabled. Guarantees at least min_terms terms.
  SequenceRecord lookup(const std::string& oeis_id, int min_terms);

  /// b-file index corresponding to n = 1, from the snapshot manifest.
  long n1_index(const std::string& oeis_id) const;

  /// Terms for n = 1..count, aligned through the manifest offset.
  std::vector<BigInt> aligned_terms(const std::string& oeis_id, int count);

  struct CrosscheckResult {
    bool ok = true;
    int first_mismatch_n = 0;  // 0 when ok
    BigInt expected;           // OEIS value at the first mismatch
    std::int64_t computed = 0;
  };

  /// Compares avoidance_count(p, n) with the aligned OEIS terms for
  /// 1 <= n <= n_max.
  CrosscheckResult crosscheck(const VincularPattern& p,
                              const std::string& oeis_id, int n_max,
                              int jobs = 1);

 private:
  std::filesystem::path bfile_path(const std::string& oeis_id) const;
  SequenceRecord fetch_live(const std::string& oeis_id);

  Options options_;
  std::map<std::string, long> manifest_;
  std::mutex cache_mutex_;
};

}  // namespace invseq
