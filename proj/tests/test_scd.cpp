#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "necklace/scd.hpp"

using namespace necklace;

namespace {

std::vector<std::string> chain_words(const Chain& c) {
  std::vector<std::string> out;
  for (const Necklace& e : c.elements) out.push_back(e.word().str());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("scd");

TEST_CASE("decomposition for n = 4") {
  const Scd s = build_scd(4);
  CHECK(s.n == 4);
  REQUIRE(s.chains.size() == 2);
  CHECK(chain_words(s.chains[0]) ==
        std::vector<std::string>{"1111", "1110", "1100", "1000", "0000"});
  CHECK(chain_words(s.chains[1]) == std::vector<std::string>{"1010"});

  const ChainSlot slot = s.index.at(Necklace{Word("1100")});
  CHECK(slot.chain_id == 0);
  CHECK(slot.depth == 2);
  const ChainSlot singleton = s.index.at(Necklace{Word("1010")});
  CHECK(singleton.chain_id == 1);
  CHECK(singleton.depth == 0);
}

TEST_CASE("decomposition for n = 6") {
  const Scd s = build_scd(6);
  REQUIRE(s.chains.size() == 4);
  CHECK(chain_words(s.chains[0]) ==
        std::vector<std::string>{"111111", "111110", "111100", "111000",
                                 "110000", "100000", "000000"});
  CHECK(chain_words(s.chains[1]) ==
        std::vector<std::string>{"111010", "110010", "101000"});
  CHECK(chain_words(s.chains[2]) ==
        std::vector<std::string>{"110110", "110100", "100100"});
  CHECK(chain_words(s.chains[3]) == std::vector<std::string>{"101010"});
}

TEST_CASE("decomposition for n = 1") {
  const Scd s = build_scd(1);
  REQUIRE(s.chains.size() == 1);
  CHECK(chain_words(s.chains[0]) == std::vector<std::string>{"1", "0"});
}

TEST_CASE("index locates every element") {
  for (int n : {3, 6, 9}) {
    const Scd s = build_scd(n);
    size_t total = 0;
    for (size_t c = 0; c < s.chains.size(); ++c) {
      for (size_t d = 0; d < s.chains[c].elements.size(); ++d) {
        const ChainSlot slot = s.index.at(s.chains[c].elements[d]);
        CHECK(slot.chain_id == static_cast<int>(c));
        CHECK(slot.depth == static_cast<int>(d));
        ++total;
      }
    }
    CHECK(s.index.size() == total);
  }
}

TEST_CASE("verification passes for generated decompositions") {
  for (int n = 1; n <= 10; ++n) {
    const VerificationReport r = verify_scd(build_scd(n));
    CHECK(r.all_ok());
    CHECK(r.failures.empty());
  }
  CHECK(verify_scd(build_scd(12)).all_ok());

  SUBCASE("also without the dense oracle tables") {
    const VerificationReport r = verify_scd(build_scd(8), 0);
    CHECK(r.all_ok());
  }
}

TEST_CASE("verification rejects a broken partition") {
  const Scd good = build_scd(6);

  SUBCASE("dropped chain") {
    std::vector<Chain> chains(good.chains.begin(), good.chains.end() - 1);
    const VerificationReport r = verify_scd(scd_from_chains(6, chains));
    CHECK_FALSE(r.partition_ok);
    CHECK_FALSE(r.all_ok());
    REQUIRE(!r.failures.empty());
    CHECK(r.failures.front().find("101010") != std::string::npos);
  }
  SUBCASE("element moved between chains") {
    // Moving 100100 under the singleton keeps every class covered once,
    // so the partition holds; both touched chains lose their symmetry and
    // the new step 101010 -> 100100 is not even comparable.
    std::vector<Chain> chains = good.chains;
    chains[3].elements.push_back(chains[2].elements.back());
    chains[2].elements.pop_back();
    const VerificationReport r = verify_scd(scd_from_chains(6, chains));
    CHECK(r.partition_ok);
    CHECK_FALSE(r.symmetry_ok);
    CHECK_FALSE(r.saturation_ok);
    CHECK_FALSE(r.all_ok());
  }
  SUBCASE("duplicated element") {
    std::vector<Chain> chains = good.chains;
    chains[3].elements.push_back(chains[2].elements.back());
    const VerificationReport r = verify_scd(scd_from_chains(6, chains));
    CHECK_FALSE(r.partition_ok);
    CHECK_FALSE(r.all_ok());
  }
}

TEST_CASE("verification rejects non-cover steps") {
  Scd s = build_scd(6);
  std::vector<Chain> chains = s.chains;
  std::swap(chains[0].elements[3], chains[0].elements[4]);  // 111000 <-> 110000
  const Scd bad = scd_from_chains(6, chains);

  const VerificationReport with_oracle = verify_scd(bad);
  CHECK(with_oracle.partition_ok);
  CHECK(with_oracle.symmetry_ok);
  CHECK_FALSE(with_oracle.saturation_ok);
  CHECK_FALSE(with_oracle.all_ok());

  const VerificationReport without_oracle = verify_scd(bad, 0);
  CHECK_FALSE(without_oracle.saturation_ok);
}

TEST_CASE("verification reports foreign word lengths") {
  const Chain alien{Necklace{Word("11")}, {Necklace{Word("11")}}, {}};
  const VerificationReport r = verify_scd(scd_from_chains(4, {alien}));
  CHECK_FALSE(r.partition_ok);
  CHECK_FALSE(r.all_ok());
  bool mentioned = false;
  for (const std::string& f : r.failures)
    if (f.find("length") != std::string::npos) mentioned = true;
  CHECK(mentioned);
}

TEST_CASE("JSON round trip") {
  const Scd s = build_scd(6);
  const nlohmann::json j = scd_to_json(s);
  CHECK(j.at("n") == 6);
  CHECK(j.at("chain_count") == 4);
  REQUIRE(j.at("chains").size() == 4);
  CHECK(j.at("chains")[0].at("top") == "111111");
  CHECK(j.at("chains")[0].at("top_rank") == 6);
  CHECK(j.at("chains")[0].at("bottom_rank") == 0);
  CHECK(j.at("chains")[1].at("elements") ==
        nlohmann::json({"111010", "110010", "101000"}));

  const Scd back = scd_from_json(j);
  CHECK(back.n == s.n);
  REQUIRE(back.chains.size() == s.chains.size());
  for (size_t c = 0; c < s.chains.size(); ++c) {
    CHECK(chain_words(back.chains[c]) == chain_words(s.chains[c]));
    CHECK(back.chains[c].flip_schedule == s.chains[c].flip_schedule);
  }
  CHECK(verify_scd(back).all_ok());
  CHECK(scd_to_json(back) == j);
  CHECK(scd_to_json(back).dump() == j.dump());
}

TEST_CASE("JSON parsing rejects malformed documents") {
  CHECK_THROWS_AS(scd_from_json(nlohmann::json::object()),
                  std::invalid_argument);
  CHECK_THROWS_AS(scd_from_json(nlohmann::json::parse(
                      R"({"n": "six", "chain_count": 0, "chains": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      scd_from_json(nlohmann::json::parse(
          R"({"n": 2, "chain_count": 2, "chains": [
               {"top": "11", "top_rank": 2, "bottom_rank": 0,
                "elements": ["11", "10", "00"]}]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      scd_from_json(nlohmann::json::parse(
          R"({"n": 2, "chain_count": 1, "chains": [
               {"top": "11", "top_rank": 2, "bottom_rank": 0,
                "elements": ["10", "00"]}]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      scd_from_json(nlohmann::json::parse(
          R"({"n": 2, "chain_count": 1, "chains": [
               {"top": "1x", "top_rank": 2, "bottom_rank": 0,
                "elements": ["1x"]}]})")),
      std::invalid_argument);

  SUBCASE("length mismatches parse but fail verification") {
    const Scd foreign = scd_from_json(nlohmann::json::parse(
        R"({"n": 4, "chain_count": 1, "chains": [
             {"top": "11", "top_rank": 2, "bottom_rank": 0,
              "elements": ["11", "10", "00"]}]})"));
    CHECK_FALSE(verify_scd(foreign).all_ok());
  }
}

TEST_CASE("building is deterministic") {
  CHECK(scd_to_json(build_scd(8)).dump() == scd_to_json(build_scd(8)).dump());
  CHECK(scd_to_json(build_scd(11)).dump() ==
        scd_to_json(build_scd(11)).dump());
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(build_scd(0), std::out_of_range);
  CHECK_THROWS_AS(build_scd(25), std::out_of_range);
  CHECK_THROWS_AS(build_scd(9, 8), std::out_of_range);
}

TEST_CASE("DOT output") {
  const std::string dot = scd_dot(build_scd(4));
  CHECK(dot.find("digraph scd {") != std::string::npos);
  CHECK(dot.find("subgraph cluster_0") != std::string::npos);
  CHECK(dot.find("subgraph cluster_1") != std::string::npos);
  CHECK(dot.find("\"1111\" -> \"1110\" -> \"1100\" -> \"1000\" -> \"0000\";") !=
        std::string::npos);
  CHECK(dot.find("\"1010\";") != std::string::npos);
  CHECK(dot.find("label=\"ranks 4..0\";") != std::string::npos);
  CHECK(dot.find("label=\"ranks 2..2\";") != std::string::npos);
}

TEST_SUITE_END();
