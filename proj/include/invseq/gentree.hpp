#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invseq/core.hpp"
#include "invseq/counting.hpp"

// Generating trees for the four avoidance classes (10)0, (10)1, (01)0 and
// (01)1, grown by insertions on the right. Levels are counted through label
// multisets, never by expanding individual tree nodes.

namespace invseq {

/// The avoidance classes whose active sites are controlled by descents or
/// ascents of the sequence.
enum class TreeClass { k10_0, k10_1, k01_0, k01_1 };

const VincularPattern& class_pattern(TreeClass cls);
std::string class_name(TreeClass cls);  // "10-0", "10-1", "01-0", "01-1"
TreeClass parse_tree_class(std::string_view name);

/// Sites h in {0,...,n} with e·h still in the class. Computed from the
/// descent/ascent sets; equals { h : e·h avoids the pattern }.
/// Rejects e that contains the class pattern.
std::vector<int> active_sites(TreeClass cls, const InversionSequence& e);

/// Tree label (a,b); a+b is the number of active sites.
struct Label {
  int a = 0;
  int b = 0;
  auto operator<=>(const Label&) const = default;
};

/// (|A_>=|, |B_<|) for the descent classes, (|A_>|, |B_<=|) for the ascent
/// classes, splitting the active sites around e_n (with e_0 = 0).
Label label_of(TreeClass cls, const InversionSequence& e);

struct SuccessionRule {
  std::string name;
  Label root;
  std::function<std::vector<Label>(Label)> produce;
};

/// Built-in rules: "inv", "10-0", "10-1", "01-0", "01-1".
/// "10-0" and "10-1" share one production, as do "01-0" and "01-1".
SuccessionRule builtin_rule(std::string_view name);

SuccessionRule rule_for(TreeClass cls);

/// Multiset of labels at one tree level.
struct LevelProfile {
  std::map<Label, BigInt> counts;
  int level = 0;
};

LevelProfile level_profile(const SuccessionRule& rule, int level);

/// Number of vertices at levels 0..n_max, by iterating label profiles.
std::vector<BigInt> level_counts(const SuccessionRule& rule, int n_max);

struct RuleVerification {
  bool ok = true;
  int levels_checked = 0;
  std::optional<InversionSequence> witness;
  std::string message;
};

/// Exhaustive consistency check: for every avoider e with |e| < n_max, the
/// multiset of child labels along e's active sites must equal the rule's
/// production applied to e's label (child order is presentational only).
RuleVerification verify_rule(TreeClass cls, const SuccessionRule& rule,
                             int n_max);

}  // namespace invseq
