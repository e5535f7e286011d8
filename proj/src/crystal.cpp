#include "necklace/crystal.hpp"

#include <algorithm>
#include <map>

#include "necklace/scd.hpp"

namespace necklace {

bool is_highest_weight(const Necklace& v) {
  if (2 * v.rank() < v.size()) return false;

  // Probe every class one rank up that is a single flip away.  The guard
  // above keeps the flipped rank strictly over n/2, so phi_upper applies.
  const std::string base = v.word().str();
  for (size_t p = 0; p < base.size(); ++p) {
    if (base[p] == '1') continue;
    std::string opened = base;
    opened[p] = '1';
    if (phi_upper(Necklace{Word(opened)}) == v) return false;
  }
  return true;
}

CrystalString string_of(const Necklace& w) {
  ChainLocation loc = chain_of(w);
  const Necklace& top = loc.chain.top;
  CrystalNode head{top, weight(top), true, loc.chain.elements.size() == 1};
  const int head_weight = head.weight;
  return CrystalString{std::move(head), std::move(loc.chain.elements),
                       head_weight};
}

Necklace involution(const Necklace& w) {
  return Necklace{complement_reverse(w.word())};
}

CrystalGraph crystal_graph(int n, int limit) {
  const Scd scd = build_scd(n, limit);

  CrystalGraph g;
  g.n = n;
  for (const Chain& c : scd.chains)
    for (size_t d = 0; d < c.elements.size(); ++d)
      g.nodes.push_back(CrystalNode{c.elements[d], weight(c.elements[d]),
                                    d == 0, d + 1 == c.elements.size()});
  std::sort(g.nodes.begin(), g.nodes.end(),
            [](const CrystalNode& a, const CrystalNode& b) {
              if (a.necklace.rank() != b.necklace.rank())
                return a.necklace.rank() > b.necklace.rank();
              return lyndon_less(a.necklace.word(), b.necklace.word());
            });

  std::map<Necklace, int> node_at;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    node_at.emplace(g.nodes[i].necklace, static_cast<int>(i));
  for (const CrystalNode& node : g.nodes) {
    const ChainSlot slot = scd.index.at(node.necklace);
    const Chain& c = scd.chains[static_cast<size_t>(slot.chain_id)];
    const size_t next = static_cast<size_t>(slot.depth) + 1;
    if (next < c.elements.size())
      g.edges.emplace_back(node_at.at(node.necklace),
                           node_at.at(c.elements[next]));
  }
  return g;
}

std::string crystal_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n  rankdir=TB;\n  node [shape=circle];\n";
  for (const CrystalNode& node : g.nodes) {
    out += "  \"" + node.necklace.word().str() + "\" [label=\"" +
           node.necklace.word().str() + " (wt=" + std::to_string(node.weight) +
           ")\"";
    if (node.is_highest) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (const auto& [from, to] : g.edges)
    out += "  \"" + g.nodes[static_cast<size_t>(from)].necklace.word().str() +
           "\" -> \"" + g.nodes[static_cast<size_t>(to)].necklace.word().str() +
           "\";\n";
  out += "}\n";
  return out;
}

}  // namespace necklace
