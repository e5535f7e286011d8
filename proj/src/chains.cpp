#include "necklace/chains.hpp"

#include <algorithm>
#include <stdexcept>

#include "necklace/matching.hpp"

namespace necklace {

namespace {

Word flipped(const Word& w, int p, char to) {
  std::string s = w.str();
  s[static_cast<size_t>(p)] = to;
  return Word(s);
}

// The unique class one rank up whose phi_upper image is u, if any.  Every
// candidate has strictly more 1s than 0s whenever 2 * (u.rank() + 1) > n,
// which is the only regime this is called in.
std::optional<Necklace> phi_upper_preimage(const Necklace& u) {
  const Word& c = u.word();
  for (int p = 0; p < c.size(); ++p) {
    if (c.one_at(p)) continue;
    const Necklace candidate{flipped(c, p, '1')};
    if (phi_upper(candidate) == u) return candidate;
  }
  return std::nullopt;
}

}  // namespace

Necklace phi_upper(const Necklace& v) {
  if (2 * v.rank() <= v.size())
    throw std::domain_error("phi_upper needs rank > n/2 (more 1s than 0s)");
  const Matching m = cyclic_match(v.word());
  // Homogeneity: with more 1s than 0s the unmatched letters are all 1s and
  // there is at least one.
  const int q = m.unmatched.back();
  return Necklace{flipped(v.word(), q, '0')};
}

PartnerResult symmetric_partner(const Necklace& u) {
  if (2 * u.rank() > u.size())
    throw std::domain_error("symmetric_partner needs rank <= n/2");
  const Matching m = cyclic_match(u.word());
  std::string s = u.word().str();
  for (int p : m.unmatched) s[static_cast<size_t>(p)] = '1';
  return PartnerResult{Necklace{Word(s)},
                       static_cast<int>(m.unmatched.size())};
}

Chain chain_from_top(const Necklace& top) {
  const Matching m = cyclic_match(top.word());
  std::vector<int> schedule(m.unmatched.rbegin(), m.unmatched.rend());

  Chain chain{top, {top}, schedule};
  std::string s = top.word().str();
  for (int p : schedule) {
    s[static_cast<size_t>(p)] = '0';
    chain.elements.push_back(Necklace{Word(s)});
  }
  return chain;
}

ChainLocation chain_of(const Necklace& u) {
  Necklace current =
      2 * u.rank() > u.size() ? u : symmetric_partner(u).partner;
  while (auto up = phi_upper_preimage(current)) current = *up;

  Chain chain = chain_from_top(current);
  const auto at = std::find(chain.elements.begin(), chain.elements.end(), u);
  if (at == chain.elements.end())
    throw std::logic_error("element missing from its regenerated chain: " +
                           u.word().str());
  const int depth = static_cast<int>(at - chain.elements.begin());
  return ChainLocation{std::move(chain), depth};
}

std::optional<Necklace> phi(const Necklace& u) {
  if (2 * u.rank() > u.size()) return phi_upper(u);
  const ChainLocation loc = chain_of(u);
  const size_t next = static_cast<size_t>(loc.depth) + 1;
  if (next < loc.chain.elements.size()) return loc.chain.elements[next];
  return std::nullopt;
}

std::optional<Necklace> phi_inverse(const Necklace& u) {
  // At or above the middle rank the predecessor is a phi_upper preimage.
  if (2 * (u.rank() + 1) > u.size()) return phi_upper_preimage(u);
  const ChainLocation loc = chain_of(u);
  if (loc.depth == 0) return std::nullopt;
  return loc.chain.elements[static_cast<size_t>(loc.depth) - 1];
}

}  // namespace necklace
