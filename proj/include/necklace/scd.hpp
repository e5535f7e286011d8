#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "necklace/chains.hpp"
#include "necklace/poset.hpp"
#include "necklace/word.hpp"

namespace necklace {

struct ChainSlot {
  int chain_id = 0;
  int depth = 0;
};

/// A decomposition of all length-n necklaces into symmetric chains.
struct Scd {
  int n = 0;
  std::vector<Chain> chains;
  std::map<Necklace, ChainSlot> index;
};

/// Builds the decomposition: tops are the classes of rank >= n/2 that are
/// not phi_upper images, each generating its chain by the flip schedule.
/// Chains are ordered by top rank descending, then canonical word under
/// 1 before 0.  Throws std::out_of_range for n outside [1, limit] and
/// std::logic_error if the chains fail to partition the necklaces, which
/// would falsify the decomposition theorem.
Scd build_scd(int n, int limit = kMaxEnumerationLength);

/// Assembles a decomposition from externally produced chains (parsed JSON,
/// mirrored chains, test fixtures).  Chain order is kept as given; on
/// duplicate elements the first occurrence wins the index slot, leaving
/// verify_scd to report the defect.
Scd scd_from_chains(int n, std::vector<Chain> chains);

struct VerificationReport {
  int n = 0;
  bool partition_ok = false;
  bool symmetry_ok = false;
  bool saturation_ok = false;
  bool injectivity_ok = false;
  bool counts_ok = false;
  std::vector<std::string> failures;

  bool all_ok() const {
    return partition_ok && symmetry_ok && saturation_ok && injectivity_ok &&
           counts_ok;
  }
};

/// Checks, against independently computed ground truth:
///   partition    every necklace of length n in exactly one chain
///   symmetry     rank(top) + rank(bottom) == n per chain
///   saturation   consecutive chain elements are cover relations; by the
///                poset oracle's tables when n <= oracle_limit, otherwise
///                by rank step plus the quotient-order test
///   injectivity  phi is injective on every rank
///   counts       chains with top rank k number rank_size(k) -
///                rank_size(k+1) for k > n/2, and the chain total equals
///                the middle rank size
/// Judges chain structure only, so decompositions not generated by
/// build_scd (for example mirrored ones) verify on equal terms.
VerificationReport verify_scd(const Scd& s, int oracle_limit = kDefaultOracleLimit);

/// Stable schema:
/// {"n": int, "chain_count": int, "chains": [{"top": word, "top_rank": int,
///  "bottom_rank": int, "elements": [word, ...]}]}
nlohmann::json scd_to_json(const Scd& s);

/// Inverse of scd_to_json.  Throws std::invalid_argument on a document
/// that does not follow the schema.
Scd scd_from_json(const nlohmann::json& j);

/// One chain per cluster, cover edges downward, deterministic order.
std::string scd_dot(const Scd& s);

}  // namespace necklace
