#include "necklace/scd.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "necklace/matching.hpp"

namespace necklace {

namespace {

Scd assemble(int n, std::vector<Chain> chains) {
  Scd scd;
  scd.n = n;
  scd.chains = std::move(chains);
  for (size_t c = 0; c < scd.chains.size(); ++c)
    for (size_t d = 0; d < scd.chains[c].elements.size(); ++d)
      scd.index.emplace(scd.chains[c].elements[d],
                        ChainSlot{static_cast<int>(c), static_cast<int>(d)});
  return scd;
}

}  // namespace

Scd build_scd(int n, int limit) {
  const std::vector<Necklace> all = enumerate_necklaces(n, limit);

  std::set<Necklace> images;
  for (const Necklace& v : all)
    if (2 * v.rank() > n) images.insert(phi_upper(v));

  std::vector<Chain> chains;
  for (const Necklace& v : all)
    if (2 * v.rank() >= n && !images.count(v))
      chains.push_back(chain_from_top(v));

  std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
    if (a.top.rank() != b.top.rank()) return a.top.rank() > b.top.rank();
    return lyndon_less(a.top.word(), b.top.word());
  });

  Scd scd = assemble(n, std::move(chains));
  size_t covered = 0;
  for (const Chain& c : scd.chains) covered += c.elements.size();
  if (covered != all.size() || scd.index.size() != all.size())
    throw std::logic_error("generated chains fail to partition the necklaces");
  return scd;
}

Scd scd_from_chains(int n, std::vector<Chain> chains) {
  return assemble(n, std::move(chains));
}

VerificationReport verify_scd(const Scd& s, int oracle_limit) {
  VerificationReport report;
  report.n = s.n;
  auto fail = [&report](std::string msg) {
    report.failures.push_back(std::move(msg));
  };

  const std::vector<Necklace> all = enumerate_necklaces(s.n);

  // Partition: every necklace in exactly one chain.  Foreign chains may
  // carry words of the wrong length; report those instead of indexing
  // rank tables with them.
  report.partition_ok = true;
  std::map<Necklace, int> seen;
  bool lengths_ok = true;
  for (const Chain& c : s.chains)
    for (const Necklace& e : c.elements) {
      if (e.size() != s.n) {
        lengths_ok = false;
        report.partition_ok = false;
        fail("necklace " + e.word().str() + " has length " +
             std::to_string(e.size()) + ", not " + std::to_string(s.n));
        continue;
      }
      ++seen[e];
    }
  for (const Necklace& e : all)
    if (!seen.count(e)) {
      report.partition_ok = false;
      fail("missing necklace " + e.word().str());
    }
  for (const auto& [e, times] : seen)
    if (times != 1 || !std::binary_search(all.begin(), all.end(), e)) {
      report.partition_ok = false;
      fail("necklace " + e.word().str() + " covered " + std::to_string(times) +
           " time(s)");
    }

  // Symmetry of every chain around the middle rank.
  report.symmetry_ok = true;
  for (const Chain& c : s.chains) {
    if (c.elements.empty() || !(c.elements.front() == c.top)) {
      report.symmetry_ok = false;
      fail("chain top mismatch");
      continue;
    }
    if (c.top.rank() + c.elements.back().rank() != s.n) {
      report.symmetry_ok = false;
      fail("chain from " + c.top.word().str() + " spans ranks " +
           std::to_string(c.top.rank()) + ".." +
           std::to_string(c.elements.back().rank()));
    }
  }

  // Saturation: each consecutive pair is a cover relation.  Full oracle
  // tables up to the limit, rank step plus order test beyond it.
  report.saturation_ok = true;
  const bool exhaustive = s.n <= std::min(oracle_limit, kOracleHardCap);
  const QuotientPoset poset =
      exhaustive ? build_poset(s.n, oracle_limit) : QuotientPoset{};
  for (const Chain& c : s.chains)
    for (size_t k = 0; lengths_ok && k + 1 < c.elements.size(); ++k) {
      const Necklace& upper = c.elements[k];
      const Necklace& lower = c.elements[k + 1];
      const bool covers = exhaustive
                              ? poset.covers(lower, upper)
                              : lower.rank() + 1 == upper.rank() &&
                                    necklace_leq(lower, upper);
      if (!covers) {
        report.saturation_ok = false;
        fail("chain step " + upper.word().str() + " -> " + lower.word().str() +
             " is not a cover");
      }
    }

  // Injectivity of phi on every rank.
  report.injectivity_ok = true;
  std::map<Necklace, Necklace> image_source;
  for (const Necklace& u : all) {
    const std::optional<Necklace> image = phi(u);
    if (!image) continue;
    const auto [at, fresh] = image_source.emplace(*image, u);
    if (!fresh) {
      report.injectivity_ok = false;
      fail("phi maps both " + at->second.word().str() + " and " +
           u.word().str() + " to " + image->word().str());
    }
  }

  // Chain counts against the rank profile.
  report.counts_ok = true;
  std::vector<long long> rank_size(static_cast<size_t>(s.n) + 2, 0);
  for (const Necklace& e : all) ++rank_size[static_cast<size_t>(e.rank())];
  std::vector<long long> tops(static_cast<size_t>(s.n) + 1, 0);
  for (const Chain& c : s.chains)
    if (c.top.size() == s.n) ++tops[static_cast<size_t>(c.top.rank())];
  for (int k = 0; k <= s.n; ++k) {
    if (2 * k <= s.n) {
      if (tops[static_cast<size_t>(k)] != 0 && 2 * k < s.n) {
        report.counts_ok = false;
        fail("chain top below the middle rank at rank " + std::to_string(k));
      }
      continue;
    }
    const long long expected = rank_size[static_cast<size_t>(k)] -
                               rank_size[static_cast<size_t>(k) + 1];
    if (tops[static_cast<size_t>(k)] != expected) {
      report.counts_ok = false;
      fail("rank " + std::to_string(k) + " has " +
           std::to_string(tops[static_cast<size_t>(k)]) +
           " chain tops, expected " + std::to_string(expected));
    }
  }
  if (static_cast<long long>(s.chains.size()) !=
      rank_size[static_cast<size_t>(s.n / 2)]) {
    report.counts_ok = false;
    fail("chain total " + std::to_string(s.chains.size()) +
         " differs from the middle rank size " +
         std::to_string(rank_size[static_cast<size_t>(s.n / 2)]));
  }
  return report;
}

nlohmann::json scd_to_json(const Scd& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["chain_count"] = s.chains.size();
  j["chains"] = nlohmann::json::array();
  for (const Chain& c : s.chains) {
    nlohmann::json jc;
    jc["top"] = c.top.word().str();
    jc["top_rank"] = c.top.rank();
    jc["bottom_rank"] = c.elements.back().rank();
    jc["elements"] = nlohmann::json::array();
    for (const Necklace& e : c.elements) jc["elements"].push_back(e.word().str());
    j["chains"].push_back(std::move(jc));
  }
  return j;
}

Scd scd_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Chain> chains;
    for (const nlohmann::json& jc : j.at("chains")) {
      Chain c{Necklace{Word(jc.at("top").get<std::string>())}, {}, {}};
      for (const nlohmann::json& je : jc.at("elements"))
        c.elements.push_back(Necklace{Word(je.get<std::string>())});
      if (c.elements.empty() || !(c.elements.front() == c.top))
        throw std::invalid_argument("chain top disagrees with its elements");
      const Matching m = cyclic_match(c.top.word());
      c.flip_schedule.assign(m.unmatched.rbegin(), m.unmatched.rend());
      chains.push_back(std::move(c));
    }
    if (j.at("chain_count").get<size_t>() != chains.size())
      throw std::invalid_argument("chain_count disagrees with chains");
    return scd_from_chains(n, std::move(chains));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed decomposition JSON: ") +
                                e.what());
  }
}

std::string scd_dot(const Scd& s) {
  std::string out = "digraph scd {\n  rankdir=TB;\n  node [shape=box];\n";
  for (size_t c = 0; c < s.chains.size(); ++c) {
    const Chain& chain = s.chains[c];
    out += "  subgraph cluster_" + std::to_string(c) + " {\n";
    out += "    label=\"ranks " + std::to_string(chain.top.rank()) + ".." +
           std::to_string(chain.elements.back().rank()) + "\";\n";
    if (chain.elements.size() == 1) {
      out += "    \"" + chain.top.word().str() + "\";\n";
    } else {
      out += "   ";
      for (size_t k = 0; k < chain.elements.size(); ++k) {
        if (k > 0) out += " ->";
        out += " \"" + chain.elements[k].word().str() + "\"";
      }
      out += ";\n";
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace necklace
