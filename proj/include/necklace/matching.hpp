#pragma once

#include <string>
#include <utility>
#include <vector>

#include "necklace/word.hpp"

namespace necklace {

enum class UnmatchedKind { none, ones, zeros };

/// Fixed point of the cyclic 0-1 matching of a word: every 0 immediately
/// followed (cyclically, skipping matched letters) by an unmatched 1 is
/// paired with it, until no such step applies.  The surviving unmatched
/// letters are homogeneous: all 1s or all 0s.
struct Matching {
  Word word;
  std::vector<std::pair<int, int>> pairs;  // (zero_pos, one_pos), by zero_pos
  std::vector<int> unmatched;              // ascending positions
  UnmatchedKind unmatched_kind = UnmatchedKind::none;
};

/// Two-pass bracket scan (0 opens, 1 closes) over the doubled word; equals
/// the iterative-removal fixed point for every removal order.
Matching cyclic_match(const Word& w);

/// True when no two pairs cross as chords of the cycle and no two unmatched
/// positions straddle a pair.
bool is_noncrossing(const Matching& m);

/// Word line plus a bracket line: '(' under a pair's 0, ')' under its 1,
/// '.' under unmatched letters.
std::string render(const Matching& m);

}  // namespace necklace
