#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "necklace/chains.hpp"
#include "necklace/word.hpp"

namespace necklace {

/// Number of 1s minus number of 0s.
inline int weight(const Necklace& w) { return 2 * w.rank() - w.size(); }

/// Lowering operator: identical to the descent map phi.
inline std::optional<Necklace> lowering(const Necklace& w) { return phi(w); }

/// Raising operator: identical to phi_inverse.
inline std::optional<Necklace> raising(const Necklace& w) {
  return phi_inverse(w);
}

/// Local highest-weight test, with no chain reconstruction: the weight is
/// nonnegative and no single 0 of the canonical form can be flipped to 1 so
/// that one descent step from the flipped class lands back on w.  Agrees
/// with raising(w) being absent; the test suite compares the two.
bool is_highest_weight(const Necklace& w);

struct CrystalNode {
  Necklace necklace;
  int weight = 0;
  bool is_highest = false;  // raising absent
  bool is_lowest = false;   // lowering absent
};

/// A full raising/lowering orbit, head first.
struct CrystalString {
  CrystalNode head;
  std::vector<Necklace> elements;  // head.necklace first, lowest last
  int head_weight = 0;             // elements.size() == head_weight + 1
};

/// The string through w: its chain, annotated with crystal data.
CrystalString string_of(const Necklace& w);

/// Canonical form of the reversed complement.  An involution on necklaces
/// that negates weight and carries chains onto chains of a (generally
/// different) valid symmetric chain decomposition.
Necklace involution(const Necklace& w);

/// Nodes ordered by rank descending then canonical word under 1 before 0;
/// edges point along the lowering operator.
struct CrystalGraph {
  int n = 0;
  std::vector<CrystalNode> nodes;
  std::vector<std::pair<int, int>> edges;  // indices into nodes
};

CrystalGraph crystal_graph(int n, int limit = kMaxEnumerationLength);

/// DOT rendering: nodes labeled "word (wt=k)", doubled circles on highest-
/// weight nodes, directed lowering edges.
std::string crystal_dot(const CrystalGraph& g);

}  // namespace necklace
