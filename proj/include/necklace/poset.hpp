#pragma once

#include <map>
#include <string>
#include <vector>

#include "necklace/word.hpp"

namespace necklace {

/// Soft bound for the exhaustive poset tables; callers may raise it up to
/// the hard cap below.
inline constexpr int kDefaultOracleLimit = 14;
/// Hard cap: the dense tables grow quadratically in the necklace count.
inline constexpr int kOracleHardCap = 20;

/// Quotient order on rotation classes: u <= v iff some rotation of u has its
/// 1-support contained in the 1-support of v's stored word.  Rotating u
/// alone suffices.  Throws std::domain_error on a length mismatch.
///
/// This and the tables below are the verification oracle: they are computed
/// by plain bit twiddling on every rotation, sharing nothing with the
/// Booth-based canonicalization path they are used to check.
bool necklace_leq(const Necklace& u, const Necklace& v);

/// Dense order and cover tables for all necklaces of length n.
struct QuotientPoset {
  int n = 0;
  std::vector<Necklace> elements;  // rank ascending, then canonical word
  std::vector<int> rank_sizes;     // rank_sizes[k] = #elements of rank k

  bool leq(const Necklace& u, const Necklace& v) const;
  /// v covers u: u < v with rank(v) == rank(u) + 1.  Ranks strictly grow
  /// along <, so these are exactly the Hasse edges.
  bool covers(const Necklace& u, const Necklace& v) const;

  int index_of(const Necklace& u) const;  // -1 when absent

private:
  friend QuotientPoset build_poset(int, int);
  std::vector<std::vector<bool>> leq_;
  std::map<Necklace, int> index_;
};

/// Enumerates classes by scanning all 2^n words for maximal bit-rotations
/// and fills the order tables.  Throws std::out_of_range unless
/// 1 <= n <= min(limit, kOracleHardCap).
QuotientPoset build_poset(int n, int limit = kDefaultOracleLimit);

struct RankProfileReport {
  int n = 0;
  std::vector<long long> sizes;
  bool symmetric = false;
  bool unimodal = false;
  bool matches_formula = false;  // per-rank Burnside counts
  std::vector<std::string> findings;

  bool all_ok() const { return symmetric && unimodal && matches_formula; }
};

/// Rank sizes by exhaustive scan, checked for symmetry, unimodality, and
/// agreement with the cycle-counting formula.  n capped at kOracleHardCap.
RankProfileReport check_rank_profile(int n);

/// (1/n) * sum over d | n of totient(d) * 2^(n/d).
unsigned long long necklace_count(int n);

/// (1/n) * sum over d | gcd(n,k) of totient(d) * C(n/d, k/d), with
/// gcd(n,0) = n.
unsigned long long necklace_rank_count(int n, int k);

}  // namespace necklace
