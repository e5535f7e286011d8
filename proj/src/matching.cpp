#include "necklace/matching.hpp"

#include <cassert>

namespace necklace {

Matching cyclic_match(const Word& w) {
  const int n = w.size();
  std::vector<int> partner(static_cast<size_t>(n), -1);
  std::vector<int> open;
  open.reserve(static_cast<size_t>(n));

  // Linear pass: afterwards every unmatched 1 precedes every unmatched 0.
  for (int p = 0; p < n; ++p) {
    if (!w.one_at(p)) {
      open.push_back(p);
    } else if (!open.empty()) {
      const int z = open.back();
      open.pop_back();
      partner[static_cast<size_t>(z)] = p;
      partner[static_cast<size_t>(p)] = z;
    }
  }
  // Wrap-around pass: the leading unmatched 1s consume the trailing 0s.
  for (int p = 0; p < n && !open.empty(); ++p) {
    if (w.one_at(p) && partner[static_cast<size_t>(p)] == -1) {
      const int z = open.back();
      open.pop_back();
      partner[static_cast<size_t>(z)] = p;
      partner[static_cast<size_t>(p)] = z;
    }
  }

  Matching m{w, {}, {}, UnmatchedKind::none};
  for (int p = 0; p < n; ++p) {
    if (partner[static_cast<size_t>(p)] == -1)
      m.unmatched.push_back(p);
    else if (!w.one_at(p))
      m.pairs.emplace_back(p, partner[static_cast<size_t>(p)]);
  }
  if (!m.unmatched.empty()) {
    m.unmatched_kind =
        w.one_at(m.unmatched.front()) ? UnmatchedKind::ones : UnmatchedKind::zeros;
#ifndef NDEBUG
    for (int p : m.unmatched)
      assert(w.one_at(p) == (m.unmatched_kind == UnmatchedKind::ones));
#endif
  }
  return m;
}

namespace {

// x lies strictly inside the arc from a forward to b.
inline bool inside_arc(int a, int b, int x, int n) {
  const int dx = ((x - a) % n + n) % n;
  const int db = ((b - a) % n + n) % n;
  return dx > 0 && dx < db;
}

// Chords {a1,b1} and {a2,b2} of the cycle cross iff exactly one endpoint of
// the second lies strictly inside the arc a1 -> b1.
inline bool chords_cross(int a1, int b1, int a2, int b2, int n) {
  return inside_arc(a1, b1, a2, n) != inside_arc(a1, b1, b2, n);
}

}  // namespace

bool is_noncrossing(const Matching& m) {
  const int n = m.word.size();
  for (size_t i = 0; i < m.pairs.size(); ++i)
    for (size_t j = i + 1; j < m.pairs.size(); ++j)
      if (chords_cross(m.pairs[i].first, m.pairs[i].second, m.pairs[j].first,
                       m.pairs[j].second, n))
        return false;
  for (size_t i = 0; i < m.unmatched.size(); ++i)
    for (size_t j = i + 1; j < m.unmatched.size(); ++j)
      for (const auto& [z, o] : m.pairs)
        if (chords_cross(z, o, m.unmatched[i], m.unmatched[j], n))
          return false;
  return true;
}

std::string render(const Matching& m) {
  std::string brackets(static_cast<size_t>(m.word.size()), '.');
  for (const auto& [z, o] : m.pairs) {
    brackets[static_cast<size_t>(z)] = '(';
    brackets[static_cast<size_t>(o)] = ')';
  }
  return m.word.str() + "\n" + brackets;
}

}  // namespace necklace
