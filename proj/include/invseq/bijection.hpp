#pragma once

#include <cstdint>
#include <vector>

#include "invseq/core.hpp"

// Explicit maps: the block-reversal involution phi on weak left-to-right
// maxima, the position involution rho_S, the marked-occurrence bijection
// between 1(01) and 1(10), and a verifier for the reversal theorem on
// (d+1)-prefixed consecutive patterns.

namespace invseq {

/// Reverses the entries of e strictly between consecutive weak left-to-right
/// maxima (and after the last one). An involution on I_n preserving W(e).
InversionSequence phi(const InversionSequence& e);

/// Word reversal of a consecutive pattern; the underline stays full-width.
VincularPattern reversed_consecutive(const VincularPattern& p);

/// For consecutive p with largest value d, the hybrid pattern (d+1) followed
/// by p's block. Requires d + 1 <= length(p) so the result stays reduced.
VincularPattern extend_pattern(const VincularPattern& p);

struct ReversalTheoremReport {
  VincularPattern extended;          // (d+1)(p_1...p_r)
  VincularPattern extended_reverse;  // (d+1)(p_r...p_1)
  bool transport_holds = true;  // e contains one iff phi(e) contains the other
  bool counts_equal = true;
  std::vector<std::int64_t> avoid_extended;          // index n, 0..n_max
  std::vector<std::int64_t> avoid_extended_reverse;  // index n, 0..n_max
};

/// Exhaustively checks, for every e in I_n with n <= n_max, that e contains
/// extend_pattern(p) iff phi(e) contains extend_pattern(reverse(p)), and
/// tallies both avoidance counts (which must agree).
ReversalTheoremReport verify_reversal_theorem(const VincularPattern& p,
                                              int n_max, int jobs = 1);

/// The involution of [n] that reverses B_j ∪ {i_j + l_j} for each maximal
/// consecutive block B_j = {i_j, ..., i_j + l_j - 1} of S, and fixes the
/// rest. Requires S ⊆ [n-1]. Returned as a 1-based table: result[i] is the
/// image of i, result[0] unused.
std::vector<int> rho(const std::vector<int>& s, int n);

/// An inversion sequence with marked occurrences of a fixed pattern.
struct MarkedSequence {
  InversionSequence sequence;
  std::vector<PositionSet> marks;  // sorted triples, list sorted

  /// Validates that every mark is an occurrence of p in e.
  static MarkedSequence checked(InversionSequence e,
                                std::vector<PositionSet> marks,
                                const VincularPattern& p);

  auto operator<=>(const MarkedSequence&) const = default;
};

/// The marked-occurrence bijection: given (e, M) with M marking occurrences
/// of `source` (one of 1(01), 1(10)), rearranges e through rho over the
/// marked middle positions and transports the marks, yielding marked
/// occurrences of the other pattern. Applying it again with the swapped
/// source recovers the input.
MarkedSequence marked_map(const MarkedSequence& input,
                          const VincularPattern& source);

/// Position rearrangement e'_i = e_{rho_S(i)}; requires Em*(source, e) ⊇ S
/// for source in {1(01), 1(10)}. Self-inverse with the swapped source.
InversionSequence em_star_map(const InversionSequence& e,
                              const std::vector<int>& s,
                              const VincularPattern& source);

}  // namespace invseq
