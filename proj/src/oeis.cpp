#include "invseq/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef INVSEQ_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"

#include "json.hpp"

namespace invseq {

namespace {

void validate_id(const std::string& oeis_id) {
  bool ok = oeis_id.size() == 7 && oeis_id[0] == 'A';
  for (std::size_t i = 1; ok && i < oeis_id.size(); ++i) {
    ok = std::isdigit(static_cast<unsigned char>(oeis_id[i])) != 0;
  }
  if (!ok) {
    throw std::invalid_argument("malformed OEIS id: '" + oeis_id +
                                "' (expected A followed by 6 digits)");
  }
}

}  // namespace

const BigInt& SequenceRecord::term_at_index(long idx) const {
  if (!has_index(idx)) {
    throw std::out_of_range(oeis_id + ": no term at b-file index " +
                            std::to_string(idx) + " (have " +
                            std::to_string(first_index) + ".." +
                            std::to_string(first_index +
                                           static_cast<long>(terms.size()) -
                                           1) +
                            ")");
  }
  return terms[static_cast<std::size_t>(idx - first_index)];
}

SequenceRecord parse_bfile(const std::string& oeis_id,
                           const std::string& text) {
  SequenceRecord record;
  record.oeis_id = oeis_id;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  long expected_index = 0;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    long index = 0;
    std::string value;
    if (!(fields >> index >> value)) {
      throw std::runtime_error(oeis_id + ": malformed b-file line: '" + line +
                               "'");
    }
    std::string rest;
    if (fields >> rest) {
      throw std::runtime_error(oeis_id + ": malformed b-file line: '" + line +
                               "'");
    }
    BigInt term;
    try {
      term = BigInt(value);
    } catch (const std::exception&) {
      throw std::runtime_error(oeis_id + ": malformed b-file value: '" +
                               value + "'");
    }
    if (first) {
      record.first_index = index;
      first = false;
    } else if (index != expected_index) {
      throw std::runtime_error(oeis_id + ": non-consecutive b-file index " +
                               std::to_string(index));
    }
    expected_index = index + 1;
    record.terms.push_back(std::move(term));
  }
  if (record.terms.empty()) {
    throw std::runtime_error(oeis_id + ": empty b-file");
  }
  return record;
}

std::filesystem::path default_snapshot_dir() {
  if (const char* env = std::getenv("INVSEQ_OEIS_CACHE")) {
    return std::filesystem::path(env);
  }
#ifdef INVSEQ_SOURCE_DATA_DIR
  return std::filesystem::path(INVSEQ_SOURCE_DATA_DIR) / "oeis";
#else
  return std::filesystem::path("data") / "oeis";
#endif
}

OeisClient::OeisClient(Options options) : options_(std::move(options)) {
  std::filesystem::path manifest_path = options_.snapshot_dir / "offsets.json";
  std::ifstream in(manifest_path);
  if (in) {
    nlohmann::json doc = nlohmann::json::parse(in);
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      manifest_[it.key()] = it.value().get<long>();
    }
  }
}

std::filesystem::path OeisClient::bfile_path(const std::string& oeis_id) const {
  return options_.snapshot_dir / ("b" + oeis_id.substr(1) + ".txt");
}

SequenceRecord OeisClient::lookup(const std::string& oeis_id, int min_terms) {
  validate_id(oeis_id);
  std::filesystem::path path = bfile_path(oeis_id);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    SequenceRecord record = parse_bfile(oeis_id, buf.str());
    if (static_cast<int>(record.terms.size()) >= min_terms) return record;
    if (!options_.live) {
      throw std::runtime_error(oeis_id + ": snapshot has only " +
                               std::to_string(record.terms.size()) +
                               " terms, need " + std::to_string(min_terms) +
                               " (live fetch disabled)");
    }
  } else if (!options_.live) {
    throw std::runtime_error("unknown OEIS id " + oeis_id +
                             ": not in snapshot " +
                             options_.snapshot_dir.string() +
                             " and live fetch disabled");
  }
  SequenceRecord record = fetch_live(oeis_id);
  if (static_cast<int>(record.terms.size()) < min_terms) {
    throw std::runtime_error(oeis_id + ": b-file has only " +
                             std::to_string(record.terms.size()) +
                             " terms, need " + std::to_string(min_terms));
  }
  return record;
}

SequenceRecord OeisClient::fetch_live(const std::string& oeis_id) {
  std::string target = "/" + oeis_id + "/b" + oeis_id.substr(1) + ".txt";
  httplib::Client client(options_.base_url);
  client.set_follow_location(true);
  httplib::Result res = client.Get(target);
  if (!res || res->status != 200) {
    throw std::runtime_error("live fetch of " + oeis_id + " failed: " +
                             (res ? "HTTP " + std::to_string(res->status)
                                  : httplib::to_string(res.error())));
  }
  SequenceRecord record = parse_bfile(oeis_id, res->body);
  record.source = SequenceRecord::Source::kLive;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    std::filesystem::create_directories(options_.snapshot_dir);
    std::ofstream out(bfile_path(oeis_id));
    out << res->body;
  }
  return record;
}

long OeisClient::n1_index(const std::string& oeis_id) const {
  auto it = manifest_.find(oeis_id);
  if (it == manifest_.end()) {
    throw std::runtime_error("no offset for " + oeis_id +
                             " in snapshot manifest");
  }
  return it->second;
}

std::vector<BigInt> OeisClient::aligned_terms(const std::string& oeis_id,
                                              int count) {
  long n1 = n1_index(oeis_id);
  SequenceRecord record = lookup(oeis_id, count);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int n = 1; n <= count; ++n) {
    out.push_back(record.term_at_index(n1 + n - 1));
  }
  return out;
}

OeisClient::CrosscheckResult OeisClient::crosscheck(const VincularPattern& p,
                                                    const std::string& oeis_id,
                                                    int n_max, int jobs) {
  std::vector<BigInt> expected = aligned_terms(oeis_id, n_max);
  std::vector<std::int64_t> computed = avoidance_series(p, n_max, jobs);
  CrosscheckResult result;
  for (int n = 1; n <= n_max; ++n) {
    if (expected[static_cast<std::size_t>(n - 1)] !=
        computed[static_cast<std::size_t>(n)]) {
      result.ok = false;
      result.first_mismatch_n = n;
      result.expected = expected[static_cast<std::size_t>(n - 1)];
      result.computed = computed[static_cast<std::size_t>(n)];
      return result;
    }
  }
  return result;
}

}  // namespace invseq
