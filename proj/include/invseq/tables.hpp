#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "invseq/core.hpp"

// Golden copies of the two summary tables (equivalence classes of length-3
// patterns with their counting sequences), loaded from data/golden.

namespace invseq {

struct TableRow {
  std::vector<std::string> patterns;  // canonical strings, '~'-joined on disk
  std::string oeis;                   // "A......" or "New"
  std::string counted_by;
  std::vector<std::int64_t> values;   // |I_n(p)| for n = 1..10
};

/// INVSEQ_DATA_DIR if set, otherwise the bundled data directory.
std::filesystem::path default_data_dir();

/// Reads table 1 (all nine equivalence-class rows) or table 2 (the seven
/// hybrid rows with OEIS entries) from `dir`/golden/table<which>.csv.
std::vector<TableRow> load_golden_table(int which,
                                        const std::filesystem::path& dir);

/// Writes rows back in the golden CSV format.
void write_golden_table(const std::vector<TableRow>& rows,
                        const std::filesystem::path& csv_path);

}  // namespace invseq
