#pragma once

#include <optional>
#include <vector>

#include "necklace/word.hpp"

namespace necklace {

/// One symmetric chain: elements run from top (largest rank) to bottom, one
/// rank per step, with rank(top) + rank(bottom) == n.
///
/// Chains produced by chain_of() and the decomposition builder satisfy:
/// elements[k] is the class of top's canonical word with the first k
/// positions of flip_schedule turned from 1 to 0.  flip_schedule is the
/// top's unmatched-1 positions in decreasing order; for chains assembled
/// from foreign element lists it is informational only.
struct Chain {
  Necklace top;
  std::vector<Necklace> elements;
  std::vector<int> flip_schedule;
};

struct ChainLocation {
  Chain chain;
  int depth;  // index of the queried element, 0 = top
};

struct PartnerResult {
  Necklace partner;
  int rank_delta;  // number of unmatched 0s flipped; 0 iff fully matched
};

/// Descent step on a class with more 1s than 0s: flip the rightmost
/// unmatched 1 of the canonical form, then re-canonicalize.  Injective on
/// each rank.  Throws std::domain_error when rank * 2 <= n.
Necklace phi_upper(const Necklace& v);

/// Mirror image of a class with at most as many 1s as 0s: flip every
/// unmatched 0 to 1.  The partner sits exactly as far above the middle rank
/// as u sits below it.  Throws std::domain_error when rank * 2 > n.
PartnerResult symmetric_partner(const Necklace& u);

/// The chain generated by a top: the top followed by the classes obtained
/// by flipping its unmatched 1s right to left.
Chain chain_from_top(const Necklace& top);

/// The unique chain through u, located by climbing phi_upper preimages to
/// the top and regenerating.  Throws std::logic_error if u does not appear
/// in the regenerated chain, which would falsify the decomposition theorem.
ChainLocation chain_of(const Necklace& u);

/// Full descent map: phi_upper above the middle rank, the chain successor
/// at or below it; absent exactly at chain bottoms.
std::optional<Necklace> phi(const Necklace& u);

/// Inverse of phi: the chain predecessor; absent exactly at chain tops.
std::optional<Necklace> phi_inverse(const Necklace& u);

}  // namespace necklace
