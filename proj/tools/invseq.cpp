// invseq: command-line surface over the inversion-sequence pattern library.
//
// Exit codes: 0 = all checks pass, 1 = mathematical mismatch,
// 2 = usage or guard error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "invseq/bijection.hpp"
#include "invseq/counting.hpp"
#include "invseq/core.hpp"
#include "invseq/enumerate.hpp"
#include "invseq/gentree.hpp"
#include "invseq/gfseries.hpp"
#include "invseq/oeis.hpp"
#include "invseq/tables.hpp"

using json = nlohmann::ordered_json;
using namespace invseq;

namespace {

struct RunConfig {
  int jobs = default_jobs();
  std::string format = "text";
  std::string out_path;
  std::string data_dir;
  bool guard_override = false;
  bool live = false;

  int guard(int requested) const {
    return guard_override ? std::max(requested, kDefaultEnumerationGuard)
                          : kDefaultEnumerationGuard;
  }
  std::filesystem::path data() const {
    return data_dir.empty() ? default_data_dir()
                            : std::filesystem::path(data_dir);
  }
};

void emit(const RunConfig& cfg, const std::string& text, const json& doc,
          const std::string& csv = {}) {
  std::string payload = text;
  if (cfg.format == "json") {
    payload = doc.dump(2) + "\n";
  } else if (cfg.format == "csv" && !csv.empty()) {
    payload = csv;
  }
  std::cout << payload;
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    out << payload;
  }
}

std::string join_values(const std::vector<std::int64_t>& values, int from) {
  std::string out;
  for (std::size_t i = static_cast<std::size_t>(from); i < values.size();
       ++i) {
    if (i > static_cast<std::size_t>(from)) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

// ---------------------------------------------------------------- count --

int cmd_count(const RunConfig& cfg, const std::string& pattern, int n_max) {
  VincularPattern p = VincularPattern::parse(pattern);
  std::vector<std::int64_t> series =
      avoidance_series(p, n_max, cfg.jobs, cfg.guard(n_max));
  std::ostringstream text;
  text << "|I_n(" << p.str() << ")| for n=1.." << n_max << ": "
       << join_values(series, 1) << "\n";
  json doc{{"pattern", p.str()}, {"n_max", n_max}};
  doc["counts"] = std::vector<std::int64_t>(series.begin() + 1, series.end());
  std::string csv = "n,count\n";
  for (int i = 1; i <= n_max; ++i) {
    csv += std::to_string(i) + "," +
           std::to_string(series[static_cast<std::size_t>(i)]) + "\n";
  }
  emit(cfg, text.str(), doc, csv);
  return 0;
}

// --------------------------------------------------------- distribution --

int cmd_distribution(const RunConfig& cfg, const std::string& pattern, int n) {
  VincularPattern p = VincularPattern::parse(pattern);
  OccurrenceDistribution dist = distribution(p, n, cfg.jobs, cfg.guard(n));
  std::ostringstream text;
  text << "occurrences of " << p.str() << " over I_" << n << ":\n";
  json counts = json::object();
  std::string csv = "m,count\n";
  for (const auto& [m, c] : dist.counts) {
    text << "  m=" << m << ": " << c << "\n";
    counts[std::to_string(m)] = c;
    csv += std::to_string(m) + "," + std::to_string(c) + "\n";
  }
  emit(cfg, text.str(),
       json{{"pattern", p.str()}, {"n", n}, {"counts", counts}}, csv);
  return 0;
}

// ------------------------------------------------------------ positions --

int cmd_positions(const RunConfig& cfg, const std::string& pattern, int n,
                  const std::string& set_key) {
  VincularPattern p = VincularPattern::parse(pattern);
  PositionClassTable table = position_classes(p, n, cfg.jobs, cfg.guard(n));
  std::ostringstream text;
  json classes = json::object();
  if (!set_key.empty()) {
    std::string key = set_key;
    key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
    std::int64_t count = 0;
    if (auto it = table.classes.find(key); it != table.classes.end()) {
      count = it->second;
    }
    text << "|I_" << n << "(" << p.str() << ", " << key << ")| = " << count
         << "\n";
    classes[key] = count;
  } else {
    text << "position classes of " << p.str() << " over I_" << n << ":\n";
    for (const auto& [key, c] : table.classes) {
      text << "  " << key << ": " << c << "\n";
      classes[key] = c;
    }
  }
  std::string csv = "positions,count\n";
  for (const auto& [key, c] : classes.items()) {
    csv += "\"" + key + "\"," + c.dump() + "\n";
  }
  emit(cfg, text.str(),
       json{{"pattern", p.str()}, {"n", n}, {"classes", classes}}, csv);
  return 0;
}

// ------------------------------------------------------------------ phi --

int cmd_phi(const RunConfig& cfg, const std::string& sequence) {
  InversionSequence e = InversionSequence::parse(sequence);
  InversionSequence image = phi(e);
  std::ostringstream text;
  text << image.str() << "\n";
  emit(cfg, text.str(),
       json{{"input", e.str()},
            {"image", image.str()},
            {"weak_maxima", weak_lr_maxima(e)}});
  return 0;
}

// ----------------------------------------------------------- verify-thm --

int cmd_verify_thm(const RunConfig& cfg, const std::string& pattern,
                   int n_max) {
  VincularPattern p = VincularPattern::parse(pattern);
  ReversalTheoremReport report = verify_reversal_theorem(p, n_max, cfg.jobs);
  bool ok = report.transport_holds && report.counts_equal;
  std::ostringstream text;
  text << report.extended.str() << " vs " << report.extended_reverse.str()
       << " for n<=" << n_max << "\n"
       << "  avoiders " << report.extended.str() << ": "
       << join_values(report.avoid_extended, 1) << "\n"
       << "  avoiders " << report.extended_reverse.str() << ": "
       << join_values(report.avoid_extended_reverse, 1) << "\n"
       << "  containment transport under phi: "
       << (report.transport_holds ? "holds" : "VIOLATED") << "\n"
       << "  equal avoidance counts: " << (report.counts_equal ? "yes" : "NO")
       << "\n";
  emit(cfg, text.str(),
       json{{"extended", report.extended.str()},
            {"extended_reverse", report.extended_reverse.str()},
            {"transport_holds", report.transport_holds},
            {"counts_equal", report.counts_equal},
            {"avoid_extended",
             std::vector<std::int64_t>(report.avoid_extended.begin() + 1,
                                       report.avoid_extended.end())},
            {"avoid_extended_reverse",
             std::vector<std::int64_t>(
                 report.avoid_extended_reverse.begin() + 1,
                 report.avoid_extended_reverse.end())}});
  return ok ? 0 : 1;
}

// ----------------------------------------------------------------- tree --

int cmd_tree(const RunConfig& cfg, const std::string& rule_name, int levels,
             const std::string& verify_class, int n_max) {
  if (!verify_class.empty()) {
    TreeClass cls = parse_tree_class(verify_class);
    RuleVerification v = verify_rule(cls, rule_for(cls), n_max);
    std::ostringstream text;
    text << "rule " << class_name(cls) << " vs class Inv(" <<
        class_pattern(cls).str() << ") up to n=" << n_max << ": "
         << (v.ok ? "consistent" : "MISMATCH: " + v.message) << "\n";
    emit(cfg, text.str(),
         json{{"class", class_name(cls)},
              {"n_max", n_max},
              {"ok", v.ok},
              {"message", v.message},
              {"witness", v.witness ? json(v.witness->str()) : json()}});
    return v.ok ? 0 : 1;
  }
  SuccessionRule rule = builtin_rule(rule_name);
  std::vector<BigInt> counts = level_counts(rule, levels);
  std::ostringstream text;
  text << "levels 0.." << levels << " of " << rule.name << ":";
  json jcounts = json::array();
  for (const BigInt& c : counts) {
    text << ' ' << c;
    jcounts.push_back(c.str());
  }
  text << "\n";
  json doc{{"rule", rule.name}, {"levels", levels}, {"counts", jcounts}};
  json jprofiles = json::array();
  for (int level = 0; level <= levels; ++level) {
    json entry = json::object();
    for (const auto& [label, count] : level_profile(rule, level).counts) {
      entry["(" + std::to_string(label.a) + "," + std::to_string(label.b) +
            ")"] = count.str();
    }
    jprofiles.push_back(entry);
  }
  doc["profiles"] = jprofiles;
  emit(cfg, text.str(), doc);
  return 0;
}

// ------------------------------------------------------------------- gf --

int cmd_gf(const RunConfig& cfg, int terms, bool bivariate) {
  std::vector<BigInt> a = a_series(terms);
  std::ostringstream text;
  text << "A(z) coefficients for n=0.." << terms << ":";
  json jterms = json::array();
  for (const BigInt& c : a) {
    text << ' ' << c;
    jterms.push_back(c.str());
  }
  text << "\n";
  json doc{{"terms", jterms}};
  if (bivariate) {
    BivariateSeries g = g_expand(terms, terms + 2);
    json rows = json::object();
    text << "G(u,z) by powers of u:\n";
    for (int k = 1; k <= g.u_cap(); ++k) {
      std::ostringstream row;
      json jrow = json::object();
      bool any = false;
      for (int n = 0; n <= g.z_cap(); ++n) {
        if (g.coeff(k, n) == 0) continue;
        if (any) row << " + ";
        row << g.coeff(k, n) << "*z^" << n;
        jrow[std::to_string(n)] = g.coeff(k, n).str();
        any = true;
      }
      if (!any) continue;
      text << "  u^" << k << ": " << row.str() << "\n";
      rows[std::to_string(k)] = jrow;
    }
    doc["bivariate"] = rows;
  }
  emit(cfg, text.str(), doc);
  return 0;
}

// ---------------------------------------------------------- oeis-verify --

int cmd_oeis_verify(const RunConfig& cfg, const std::string& pattern,
                    const std::string& id, int n_max) {
  OeisClient client({cfg.data() / "oeis", cfg.live});
  std::vector<std::pair<std::string, std::string>> pairings;
  if (!pattern.empty() && !id.empty()) {
    pairings.emplace_back(pattern, id);
  } else {
    for (int which : {1, 2}) {
      for (const TableRow& row : load_golden_table(which, cfg.data())) {
        if (row.oeis == "New") continue;
        for (const std::string& p : row.patterns) {
          pairings.emplace_back(p, row.oeis);
        }
      }
    }
  }
  std::ostringstream text;
  json checks = json::array();
  bool all_ok = true;
  for (const auto& [ptext, pid] : pairings) {
    VincularPattern p = VincularPattern::parse(ptext);
    OeisClient::CrosscheckResult r = client.crosscheck(p, pid, n_max, cfg.jobs);
    all_ok = all_ok && r.ok;
    text << p.str() << " vs " << pid << " (n<=" << n_max << "): ";
    if (r.ok) {
      text << "match\n";
    } else {
      text << "MISMATCH at n=" << r.first_mismatch_n << " (oeis "
           << r.expected << ", computed " << r.computed << ")\n";
    }
    checks.push_back(json{{"pattern", p.str()},
                          {"id", pid},
                          {"ok", r.ok},
                          {"first_mismatch_n", r.first_mismatch_n}});
  }
  emit(cfg, text.str(), json{{"n_max", n_max}, {"checks", checks}});
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- table --

int cmd_table(const RunConfig& cfg, int which, int n_max, bool regen) {
  if (regen && n_max < 10) {
    throw std::invalid_argument(
        "--regen-golden needs --nmax >= 10 to keep the stored rows complete");
  }
  std::vector<TableRow> rows = load_golden_table(which, cfg.data());
  OeisClient client({cfg.data() / "oeis", cfg.live});
  std::ostringstream text;
  json jrows = json::array();
  bool all_ok = true;

  for (TableRow& row : rows) {
    std::vector<std::vector<std::int64_t>> computed;
    for (const std::string& ptext : row.patterns) {
      VincularPattern p = VincularPattern::parse(ptext);
      computed.push_back(
          avoidance_series(p, n_max, cfg.jobs, cfg.guard(n_max)));
    }
    bool row_ok = true;
    for (const auto& series : computed) {
      for (int n = 1; n <= n_max; ++n) {
        std::int64_t golden = n <= static_cast<int>(row.values.size())
                                  ? row.values[static_cast<std::size_t>(n - 1)]
                                  : -1;
        if (golden >= 0 && series[static_cast<std::size_t>(n)] != golden) {
          row_ok = false;
        }
      }
    }
    std::string oeis_verdict = "-";
    if (row.oeis != "New") {
      OeisClient::CrosscheckResult r = client.crosscheck(
          VincularPattern::parse(row.patterns.front()), row.oeis,
          std::min(n_max, 9), cfg.jobs);
      oeis_verdict = r.ok ? "match" : "mismatch";
      row_ok = row_ok && r.ok;
    }
    all_ok = all_ok && row_ok;

    std::string patterns;
    for (std::size_t i = 0; i < row.patterns.size(); ++i) {
      patterns += (i ? "~" : "") + row.patterns[i];
    }
    text << patterns << " | " << row.counted_by << " | " << row.oeis << " ("
         << oeis_verdict << ") | " << join_values(computed.front(), 1)
         << (row_ok ? "" : "  <-- MISMATCH") << "\n";
    jrows.push_back(json{{"patterns", row.patterns},
                         {"counted_by", row.counted_by},
                         {"oeis", row.oeis},
                         {"oeis_verdict", oeis_verdict},
                         {"values", std::vector<std::int64_t>(
                                        computed.front().begin() + 1,
                                        computed.front().end())},
                         {"ok", row_ok}});
    if (regen) {
      row.values.assign(computed.front().begin() + 1, computed.front().end());
    }
  }
  if (regen) {
    std::filesystem::path path =
        cfg.data() / "golden" / ("table" + std::to_string(which) + ".csv");
    write_golden_table(rows, path);
    text << "golden file regenerated: " << path.string() << "\n";
  }
  std::string csv;
  for (const auto& jrow : jrows) {
    std::string patterns;
    for (const auto& p : jrow["patterns"]) {
      patterns += (patterns.empty() ? "" : "~") + p.get<std::string>();
    }
    csv += patterns + ";" + jrow["oeis"].get<std::string>() + ";" +
           jrow["counted_by"].get<std::string>() + ";";
    bool first = true;
    for (const auto& v : jrow["values"]) {
      csv += (first ? "" : ",") + v.dump();
      first = false;
    }
    csv += "\n";
  }
  emit(cfg, text.str(),
       json{{"table", which}, {"n_max", n_max}, {"rows", jrows},
            {"ok", all_ok}},
       csv);
  return all_ok ? 0 : 1;
}

// ------------------------------------------------------------- classify --

int cmd_classify(const RunConfig& cfg, const std::string& level_text,
                 int n_max) {
  EquivalenceLevel level = parse_level(level_text);
  Classification c = classify_all(3, n_max, level, cfg.jobs, cfg.guard(n_max));
  std::ostringstream text;
  text << c.classes.size() << " " << level_name(level)
       << " equivalence classes of the 52 length-3 patterns (n<=" << n_max
       << "):\n";
  json jclasses = json::array();
  for (const auto& cls : c.classes) {
    json jcls = json::array();
    text << "  ";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      text << (i ? " ~ " : "") << cls[i].str();
      jcls.push_back(cls[i].str());
    }
    text << "\n";
    jclasses.push_back(jcls);
  }
  json jwitnesses = json::array();
  int max_witness = 0;
  for (const SeparationWitness& w : c.witnesses) {
    jwitnesses.push_back(json::array({w.p.str(), w.q.str(), w.n}));
    max_witness = std::max(max_witness, w.n);
  }
  text << "separating witnesses recorded for every split pair (max n = "
       << max_witness << ")\n";
  std::string csv = "class\n";
  for (const auto& cls : c.classes) {
    std::string members;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      members += (i ? "~" : "") + cls[i].str();
    }
    csv += members + "\n";
  }
  emit(cfg, text.str(),
       json{{"level", level_name(level)},
            {"n_max", n_max},
            {"classes", jclasses},
            {"witnesses", jwitnesses}},
       csv);
  return 0;
}

// ------------------------------------------------------ counterexamples --

int cmd_counterexamples(const RunConfig& cfg) {
  struct Check {
    std::string name;
    bool ok;
  };
  std::vector<Check> checks;
  auto pat = [](const char* t) { return VincularPattern::parse(t); };

  checks.push_back({"2(10)/2(01) at n=7, m=1: 470 vs 466",
                    distribution(pat("2(10)"), 7, cfg.jobs).counts[1] == 470 &&
                        distribution(pat("2(01)"), 7, cfg.jobs).counts[1] ==
                            466});
  checks.push_back({"(10)0/(10)1 at n=6, m=1: 134 vs 132",
                    distribution(pat("(10)0"), 6, cfg.jobs).counts[1] == 134 &&
                        distribution(pat("(10)1"), 6, cfg.jobs).counts[1] ==
                            132});
  checks.push_back({"(01)0/(01)1 at n=5, m=1: 52 vs 50",
                    distribution(pat("(01)0"), 5, cfg.jobs).counts[1] == 52 &&
                        distribution(pat("(01)1"), 5, cfg.jobs).counts[1] ==
                            50});

  auto members = [&](const VincularPattern& p, const std::string& key) {
    std::vector<std::string> out;
    for_each_inversion_sequence(6, [&](const InversionSequence& e) {
      if (occurrences(p, e).str() == key) out.push_back(e.str());
    });
    return out;
  };
  checks.push_back(
      {"I_6(1(01),{{2,4,5},{3,4,5}}) = {011010,...,011015}",
       members(pat("1(01)"), "{{2,4,5},{3,4,5}}") ==
           std::vector<std::string>{"011010", "011011", "011012", "011013",
                                    "011014", "011015"}});
  checks.push_back({"I_6(1(01),{{2,5,6},{4,5,6}}) = {012101}",
                    members(pat("1(01)"), "{{2,5,6},{4,5,6}}") ==
                        std::vector<std::string>{"012101"}});
  checks.push_back({"I_6(1(10),{{2,5,6},{4,5,6}}) = {010110,012110}",
                    members(pat("1(10)"), "{{2,5,6},{4,5,6}}") ==
                        std::vector<std::string>{"010110", "012110"}});

  auto joint = joint_distribution(pat("1(01)"), pat("1(10)"), 6, cfg.jobs);
  std::vector<std::string> swapped;
  for_each_inversion_sequence(6, [&](const InversionSequence& e) {
    if (count_occurrences(pat("1(01)"), e) == 0 &&
        count_occurrences(pat("1(10)"), e) == 3) {
      swapped.push_back(e.str());
    }
  });
  checks.push_back({"I_6(1(01),3) ∩ I_6(1(10),0) = {}", joint[{3, 0}] == 0});
  checks.push_back({"I_6(1(01),0) ∩ I_6(1(10),3) = {011110}",
                    joint[{0, 3}] == 1 &&
                        swapped == std::vector<std::string>{"011110"}});

  std::ostringstream text;
  json jchecks = json::array();
  bool all_ok = true;
  for (const Check& c : checks) {
    text << (c.ok ? "PASS  " : "FAIL  ") << c.name << "\n";
    jchecks.push_back(json{{"name", c.name}, {"ok", c.ok}});
    all_ok = all_ok && c.ok;
  }
  emit(cfg, text.str(), json{{"checks", jchecks}, {"ok", all_ok}});
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vincular pattern statistics in inversion sequences"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--jobs", cfg.jobs, "worker threads for enumeration scans");
  app.add_option("--format", cfg.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out_path, "also write the output to a file");
  app.add_option("--data-dir", cfg.data_dir,
                 "data directory (golden tables, OEIS snapshot)");
  app.add_flag("--guard-override", cfg.guard_override,
               "lift the n<=12 enumeration guard");
  app.add_flag("--live", cfg.live, "allow live OEIS fetches (default offline)");
  app.add_flag("--offline", [](std::int64_t) {},
               "force offline OEIS lookups (the default)");

  std::string pattern, sequence, id, set_key, rule = "inv", verify_class;
  std::string level = "wilf";
  int n = 6, n_max = 9, levels = 10, terms = 10, which = 1;
  bool bivariate = false, regen = false;

  CLI::App* count = app.add_subcommand("count", "avoidance counts |I_n(p)|");
  count->add_option("--pattern,-p", pattern)->required();
  count->add_option("--nmax", n_max, "compute n = 1..nmax");

  CLI::App* dist = app.add_subcommand("distribution",
                                      "occurrence-count distribution");
  dist->add_option("--pattern,-p", pattern)->required();
  dist->add_option("--n", n)->required();

  CLI::App* pos = app.add_subcommand("positions",
                                     "occurrence-position classes");
  pos->add_option("--pattern,-p", pattern)->required();
  pos->add_option("--n", n)->required();
  pos->add_option("--set", set_key, "single class key, e.g. {{2,4,5},{3,4,5}}");

  CLI::App* phi_cmd = app.add_subcommand("phi",
                                         "block-reversal involution image");
  phi_cmd->add_option("sequence", sequence)->required();

  CLI::App* thm = app.add_subcommand(
      "verify-thm", "reversal theorem for (d+1)-extended consecutive p");
  thm->add_option("--pattern,-p", pattern, "consecutive pattern, e.g. (01)")
      ->required();
  thm->add_option("--nmax", n_max);

  CLI::App* tree = app.add_subcommand("tree", "generating-tree engine");
  tree->add_option("--rule", rule, "inv, 10-0, 10-1, 01-0 or 01-1");
  tree->add_option("--levels", levels);
  tree->add_option("--verify", verify_class,
                   "check a class against its rule exhaustively");
  tree->add_option("--nmax", n_max, "depth for --verify");

  CLI::App* gf = app.add_subcommand("gf",
                                    "kernel-method series for (10)0 avoiders");
  gf->add_option("--terms", terms);
  gf->add_flag("--bivariate", bivariate, "print the u-stratified expansion");

  CLI::App* oeis = app.add_subcommand("oeis-verify",
                                      "cross-check counts against OEIS");
  oeis->add_option("--pattern,-p", pattern);
  oeis->add_option("--id", id);
  oeis->add_option("--nmax", n_max);

  CLI::App* table = app.add_subcommand("table", "reproduce a summary table");
  table->add_option("--which", which)->check(CLI::IsMember({1, 2}));
  table->add_option("--nmax", n_max);
  table->add_flag("--regen-golden", regen,
                  "rewrite the golden CSV from recomputed values");

  CLI::App* classify = app.add_subcommand("classify",
                                          "equivalence classification");
  classify->add_option("--level", level)
      ->check(CLI::IsMember({"wilf", "strong", "super_strong"}));
  CLI::Option* classify_nmax = classify->add_option(
      "--nmax", n_max, "defaults to 10 for wilf, 8 for the finer levels");

  app.add_subcommand("counterexamples",
                     "recompute the five inequivalence witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  }
  if (std::getenv("INVSEQ_OEIS_LIVE") != nullptr) cfg.live = true;

  try {
    if (count->parsed()) return cmd_count(cfg, pattern, n_max);
    if (dist->parsed()) return cmd_distribution(cfg, pattern, n);
    if (pos->parsed()) return cmd_positions(cfg, pattern, n, set_key);
    if (phi_cmd->parsed()) return cmd_phi(cfg, sequence);
    if (thm->parsed()) return cmd_verify_thm(cfg, pattern, n_max);
    if (tree->parsed())
      return cmd_tree(cfg, rule, levels, verify_class, n_max);
    if (gf->parsed()) return cmd_gf(cfg, terms, bivariate);
    if (oeis->parsed()) return cmd_oeis_verify(cfg, pattern, id, n_max);
    if (table->parsed()) return cmd_table(cfg, which, n_max, regen);
    if (classify->parsed()) {
      if (classify_nmax->count() == 0) n_max = level == "wilf" ? 10 : 8;
      return cmd_classify(cfg, level, n_max);
    }
    return cmd_counterexamples(cfg);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
