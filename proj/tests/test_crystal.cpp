#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "necklace/crystal.hpp"
#include "necklace/poset.hpp"
#include "necklace/scd.hpp"

using namespace necklace;

TEST_SUITE_BEGIN("crystal");

TEST_CASE("weight is ones minus zeros") {
  CHECK(weight(Necklace{Word("111010")}) == 2);
  CHECK(weight(Necklace{Word("101010")}) == 0);
  CHECK(weight(Necklace{Word("0000")}) == -4);
  CHECK(weight(Necklace{Word("1111")}) == 4);
  CHECK(weight(Necklace{Word("1")}) == 1);
}

TEST_CASE("raising and lowering are the descent map and its inverse") {
  const Necklace u{Word("111010")};
  CHECK(lowering(u) == phi(u));
  CHECK(raising(u) == phi_inverse(u));
  CHECK(lowering(u)->word().str() == "110010");
  CHECK(raising(Necklace{Word("11100010110")})->word().str() == "11110010110");
}

TEST_CASE("local highest-weight test") {
  CHECK(is_highest_weight(Necklace{Word("1111001110001110")}));
  CHECK(is_highest_weight(Necklace{Word("111010")}));
  CHECK(is_highest_weight(Necklace{Word("101010")}));
  CHECK(is_highest_weight(Necklace{Word("1")}));
  CHECK(is_highest_weight(Necklace{Word("1010")}));

  // Heads whose matchings carry a wrapping pair with its 0 outside the
  // terminal 0-run; a shortcut keyed to boundary runs misjudges these.
  CHECK(is_highest_weight(Necklace{Word("110110010")}));
  CHECK(is_highest_weight(Necklace{Word("1100110010")}));
  // Head where a wrapping pair's 0 flips to a still-canonical word that
  // nevertheless descends elsewhere (to 1110110010, not back).
  CHECK(is_highest_weight(Necklace{Word("1110111000")}));

  // raising(11100010110) = 11110010110.
  CHECK_FALSE(is_highest_weight(Necklace{Word("11100010110")}));
  // raising(11110100) = 11110110.
  CHECK_FALSE(is_highest_weight(Necklace{Word("11110100")}));
  CHECK_FALSE(is_highest_weight(Necklace{Word("111100")}));
  // Mid-chain in the unique n=2 chain 11 > 10 > 00.
  CHECK_FALSE(is_highest_weight(Necklace{Word("10")}));
  // Negative weight is never highest.
  CHECK_FALSE(is_highest_weight(Necklace{Word("0000")}));
  CHECK_FALSE(is_highest_weight(Necklace{Word("0")}));
  CHECK_FALSE(is_highest_weight(Necklace{Word("1000")}));
}

TEST_CASE("local test agrees with the raising operator") {
  for (int n = 1; n <= 12; ++n)
    for (const Necklace& u : enumerate_necklaces(n))
      CHECK(is_highest_weight(u) == !raising(u).has_value());
}

TEST_CASE("strings annotate chains") {
  SUBCASE("full string, n = 4") {
    const CrystalString s = string_of(Necklace{Word("1000")});
    CHECK(s.head.necklace.word().str() == "1111");
    CHECK(s.head.weight == 4);
    CHECK(s.head.is_highest);
    CHECK_FALSE(s.head.is_lowest);
    CHECK(s.head_weight == 4);
    REQUIRE(s.elements.size() == 5);
    CHECK(s.elements.front() == s.head.necklace);
    CHECK(s.elements.back().word().str() == "0000");
  }
  SUBCASE("singleton string") {
    const CrystalString s = string_of(Necklace{Word("101010")});
    CHECK(s.head_weight == 0);
    CHECK(s.elements.size() == 1);
    CHECK(s.head.is_highest);
    CHECK(s.head.is_lowest);
  }
  SUBCASE("length and weight ladder everywhere") {
    for (int n = 1; n <= 12; ++n)
      for (const Necklace& u : enumerate_necklaces(n)) {
        const CrystalString s = string_of(u);
        CHECK(s.head_weight == weight(s.head.necklace));
        CHECK(s.head_weight >= 0);
        REQUIRE(s.elements.size() ==
                static_cast<size_t>(s.head_weight) + 1);
        for (size_t i = 0; i < s.elements.size(); ++i)
          CHECK(weight(s.elements[i]) ==
                s.head_weight - 2 * static_cast<int>(i));
        CHECK(weight(s.elements.back()) == -s.head_weight);
      }
  }
}

TEST_CASE("involution basics") {
  CHECK(involution(Necklace{Word("111010")}).word().str() == "101000");
  CHECK(involution(Necklace{Word("0000")}).word().str() == "1111");
  for (int n = 1; n <= 12; ++n)
    for (const Necklace& u : enumerate_necklaces(n)) {
      const Necklace v = involution(u);
      CHECK(weight(v) == -weight(u));
      CHECK(involution(v) == u);
    }
}

TEST_CASE("involution reverses the quotient order") {
  for (int n = 1; n <= 8; ++n)
    for (const Necklace& u : enumerate_necklaces(n))
      for (const Necklace& v : enumerate_necklaces(n))
        CHECK(necklace_leq(u, v) == necklace_leq(involution(v), involution(u)));
}

TEST_CASE("involution carries the decomposition onto a valid one") {
  for (int n = 1; n <= 10; ++n) {
    const Scd s = build_scd(n);
    std::vector<Chain> mirrored;
    for (const Chain& c : s.chains) {
      std::vector<Necklace> elements;
      for (auto it = c.elements.rbegin(); it != c.elements.rend(); ++it)
        elements.push_back(involution(*it));
      mirrored.push_back(Chain{elements.front(), std::move(elements), {}});
    }
    const VerificationReport r = verify_scd(scd_from_chains(n, mirrored));
    CHECK(r.all_ok());
  }
}

TEST_CASE("crystal graph shape") {
  const CrystalGraph g6 = crystal_graph(6);
  CHECK(g6.n == 6);
  CHECK(g6.nodes.size() == 14);
  CHECK(g6.edges.size() == 10);

  const CrystalGraph g4 = crystal_graph(4);
  REQUIRE(g4.nodes.size() == 6);
  CHECK(g4.edges.size() == 4);
  const char* order[] = {"1111", "1110", "1100", "1010", "1000", "0000"};
  for (size_t i = 0; i < 6; ++i)
    CHECK(g4.nodes[i].necklace.word().str() == order[i]);

  const CrystalGraph g1 = crystal_graph(1);
  CHECK(g1.nodes.size() == 2);
  CHECK(g1.edges.size() == 1);
}

TEST_CASE("crystal graph flags and edges follow the operators") {
  for (int n = 1; n <= 10; ++n) {
    const CrystalGraph g = crystal_graph(n);
    CHECK(g.edges.size() == g.nodes.size() - build_scd(n).chains.size());

    std::set<int> has_out, has_in;
    for (const auto& [from, to] : g.edges) {
      const CrystalNode& a = g.nodes[static_cast<size_t>(from)];
      const CrystalNode& b = g.nodes[static_cast<size_t>(to)];
      REQUIRE(lowering(a.necklace).has_value());
      CHECK(*lowering(a.necklace) == b.necklace);
      CHECK(raising(b.necklace) == a.necklace);
      CHECK(has_out.insert(from).second);  // one outgoing edge at most
      CHECK(has_in.insert(to).second);     // one incoming edge at most
    }
    for (size_t i = 0; i < g.nodes.size(); ++i) {
      const CrystalNode& node = g.nodes[i];
      CHECK(node.weight == weight(node.necklace));
      CHECK(node.is_highest == is_highest_weight(node.necklace));
      CHECK(node.is_highest == !raising(node.necklace).has_value());
      CHECK(node.is_lowest == !lowering(node.necklace).has_value());
      CHECK(node.is_lowest == (has_out.count(static_cast<int>(i)) == 0));
      CHECK(node.is_highest == (has_in.count(static_cast<int>(i)) == 0));
    }
  }
}

TEST_CASE("crystal DOT output") {
  const std::string dot = crystal_dot(crystal_graph(4));
  CHECK(dot.find("digraph crystal {") != std::string::npos);
  CHECK(dot.find("\"1111\" [label=\"1111 (wt=4)\", shape=doublecircle];") !=
        std::string::npos);
  CHECK(dot.find("\"1010\" [label=\"1010 (wt=0)\", shape=doublecircle];") !=
        std::string::npos);
  CHECK(dot.find("\"1110\" [label=\"1110 (wt=2)\"];") != std::string::npos);
  CHECK(dot.find("\"1111\" -> \"1110\";") != std::string::npos);
  CHECK(dot.find("\"0000\" ->") == std::string::npos);
}

TEST_SUITE_END();
