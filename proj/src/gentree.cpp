#include "invseq/gentree.hpp"

#include <algorithm>
#include <stdexcept>

namespace invseq {

namespace {

const VincularPattern& pattern_10_0() {
  static const VincularPattern p = VincularPattern::parse("(10)0");
  return p;
}
const VincularPattern& pattern_10_1() {
  static const VincularPattern p = VincularPattern::parse("(10)1");
  return p;
}
const VincularPattern& pattern_01_0() {
  static const VincularPattern p = VincularPattern::parse("(01)0");
  return p;
}
const VincularPattern& pattern_01_1() {
  static const VincularPattern p = VincularPattern::parse("(01)1");
  return p;
}

bool is_descent_class(TreeClass cls) {
  return cls == TreeClass::k10_0 || cls == TreeClass::k10_1;
}

}  // namespace

const VincularPattern& class_pattern(TreeClass cls) {
  switch (cls) {
    case TreeClass::k10_0: return pattern_10_0();
    case TreeClass::k10_1: return pattern_10_1();
    case TreeClass::k01_0: return pattern_01_0();
    case TreeClass::k01_1: return pattern_01_1();
  }
  throw std::logic_error("bad TreeClass");
}

std::string class_name(TreeClass cls) {
  switch (cls) {
    case TreeClass::k10_0: return "10-0";
    case TreeClass::k10_1: return "10-1";
    case TreeClass::k01_0: return "01-0";
    case TreeClass::k01_1: return "01-1";
  }
  return "?";
}

TreeClass parse_tree_class(std::string_view name) {
  if (name == "10-0" || name == "(10)0") return TreeClass::k10_0;
  if (name == "10-1" || name == "(10)1") return TreeClass::k10_1;
  if (name == "01-0" || name == "(01)0") return TreeClass::k01_0;
  if (name == "01-1" || name == "(01)1") return TreeClass::k01_1;
  throw std::invalid_argument("unknown tree class: " + std::string(name));
}

std::vector<int> active_sites(TreeClass cls, const InversionSequence& e) {
  if (contains(class_pattern(cls), e)) {
    throw std::invalid_argument("active_sites: sequence " + e.str() +
                                " contains " + class_pattern(cls).str());
  }
  int n = e.size();
  std::vector<bool> inactive(static_cast<std::size_t>(n) + 1, false);
  bool descent = is_descent_class(cls);
  const std::vector<int> marks = descent ? descents(e) : ascents(e);
  // (10)0 and (01)1 ban the value e_{i+1}; (10)1 and (01)0 ban e_i.
  bool ban_second = cls == TreeClass::k10_0 || cls == TreeClass::k01_1;
  for (int i : marks) {
    int banned = ban_second ? e.at(i + 1) : e.at(i);
    inactive[static_cast<std::size_t>(banned)] = true;
  }
  std::vector<int> out;
  for (int h = 0; h <= n; ++h) {
    if (!inactive[static_cast<std::size_t>(h)]) out.push_back(h);
  }
  return out;
}

Label label_of(TreeClass cls, const InversionSequence& e) {
  std::vector<int> sites = active_sites(cls, e);
  int last = e.empty() ? 0 : e.at(e.size());  // convention e_0 = 0
  Label label;
  for (int h : sites) {
    if (is_descent_class(cls)) {
      h >= last ? ++label.a : ++label.b;
    } else {
      h > last ? ++label.a : ++label.b;
    }
  }
  return label;
}

SuccessionRule builtin_rule(std::string_view name) {
  if (name == "inv") {
    return SuccessionRule{
        "inv", {1, 0}, [](Label l) {
          return std::vector<Label>(static_cast<std::size_t>(l.a),
                                    Label{l.a + 1, 0});
        }};
  }
  if (name == "10-0" || name == "10-1") {
    return SuccessionRule{
        std::string(name), {1, 0}, [](Label l) {
          std::vector<Label> kids;
          kids.reserve(static_cast<std::size_t>(l.a + l.b));
          for (int i = 1; i <= l.a; ++i) kids.push_back({l.a + 2 - i, l.b - 1 + i});
          for (int i = 1; i <= l.b; ++i) kids.push_back({l.a + l.b + 1 - i, i - 1});
          return kids;
        }};
  }
  if (name == "01-0" || name == "01-1") {
    return SuccessionRule{
        std::string(name), {0, 1}, [](Label l) {
          std::vector<Label> kids;
          kids.reserve(static_cast<std::size_t>(l.a + l.b));
          for (int i = 1; i <= l.a; ++i) kids.push_back({l.a + 1 - i, l.b - 1 + i});
          for (int i = 1; i <= l.b; ++i) kids.push_back({l.a + l.b + 1 - i, i});
          return kids;
        }};
  }
  throw std::invalid_argument("unknown succession rule: " + std::string(name));
}

SuccessionRule rule_for(TreeClass cls) { return builtin_rule(class_name(cls)); }

LevelProfile level_profile(const SuccessionRule& rule, int level) {
  LevelProfile profile;
  profile.counts[rule.root] = 1;
  for (int depth = 0; depth < level; ++depth) {
    std::map<Label, BigInt> next;
    for (const auto& [label, count] : profile.counts) {
      for (const Label& child : rule.produce(label)) next[child] += count;
    }
    profile.counts = std::move(next);
  }
  profile.level = level;
  return profile;
}

std::vector<BigInt> level_counts(const SuccessionRule& rule, int n_max) {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  LevelProfile profile;
  profile.counts[rule.root] = 1;
  for (int level = 0; level <= n_max; ++level) {
    BigInt total = 0;
    for (const auto& [label, count] : profile.counts) total += count;
    out.push_back(total);
    if (level == n_max) break;
    std::map<Label, BigInt> next;
    for (const auto& [label, count] : profile.counts) {
      for (const Label& child : rule.produce(label)) next[child] += count;
    }
    profile.counts = std::move(next);
  }
  return out;
}

namespace {

bool verify_rec(TreeClass cls, const SuccessionRule& rule,
                InversionSequence& e, int n_max, RuleVerification& report) {
  if (e.size() == n_max) return true;
  std::vector<int> sites = active_sites(cls, e);
  std::vector<Label> expected = rule.produce(label_of(cls, e));
  std::vector<Label> actual;
  actual.reserve(sites.size());
  for (int h : sites) {
    e.push_back(h);
    actual.push_back(label_of(cls, e));
    e.pop_back();
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual) {
    report.ok = false;
    report.witness = e;
    report.message = "child label multiset of " +
                     (e.empty() ? std::string("the empty sequence") : e.str()) +
                     " disagrees with rule " + rule.name;
    return false;
  }
  for (int h : sites) {
    e.push_back(h);
    bool good = verify_rec(cls, rule, e, n_max, report);
    e.pop_back();
    if (!good) return false;
  }
  return true;
}

}  // namespace

RuleVerification verify_rule(TreeClass cls, const SuccessionRule& rule,
                             int n_max) {
  RuleVerification report;
  InversionSequence empty;
  if (label_of(cls, empty) != rule.root) {
    report.ok = false;
    report.witness = empty;
    report.message = "root label of class " + class_name(cls) +
                     " does not match rule " + rule.name;
    return report;
  }
  InversionSequence e;
  verify_rec(cls, rule, e, n_max, report);
  report.levels_checked = n_max;
  return report;
}

}  // namespace invseq
