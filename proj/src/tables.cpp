#include "invseq/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace invseq {

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("INVSEQ_DATA_DIR")) {
    return std::filesystem::path(env);
  }
#ifdef INVSEQ_SOURCE_DATA_DIR
  return std::filesystem::path(INVSEQ_SOURCE_DATA_DIR);
#else
  return std::filesystem::path("data");
#endif
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

std::vector<TableRow> load_golden_table(int which,
                                        const std::filesystem::path& dir) {
  if (which != 1 && which != 2) {
    throw std::invalid_argument("table number must be 1 or 2");
  }
  std::filesystem::path path =
      dir / "golden" / ("table" + std::to_string(which) + ".csv");
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open golden table " + path.string());
  }
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = split(line, ';');
    if (fields.size() != 4) {
      throw std::runtime_error("malformed golden row: '" + line + "'");
    }
    TableRow row;
    for (const std::string& text : split(fields[0], '~')) {
      // Canonicalize through the parser so malformed rows fail loudly.
      row.patterns.push_back(VincularPattern::parse(text).str());
    }
    row.oeis = fields[1];
    row.counted_by = fields[2];
    for (const std::string& v : split(fields[3], ',')) {
      row.values.push_back(std::stoll(v));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::runtime_error("golden table " + path.string() + " is empty");
  }
  return rows;
}

void write_golden_table(const std::vector<TableRow>& rows,
                        const std::filesystem::path& csv_path) {
  std::ofstream out(csv_path);
  if (!out) {
    throw std::runtime_error("cannot write golden table " + csv_path.string());
  }
  out << "# patterns;oeis;counted_by;values(n=1..)\n";
  for (const TableRow& row : rows) {
    for (std::size_t i = 0; i < row.patterns.size(); ++i) {
      out << (i ? "~" : "") << row.patterns[i];
    }
    out << ';' << row.oeis << ';' << row.counted_by << ';';
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      out << (i ? "," : "") << row.values[i];
    }
    out << '\n';
  }
}

}  // namespace invseq
