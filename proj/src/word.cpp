#include "necklace/word.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace necklace {

namespace {

// '1' sorts before '0'.
inline int letter_key(char c) { return c == '0' ? 1 : 0; }

// Booth's algorithm on the doubled word: index of the lexicographically
// smallest rotation under the 1-before-0 order.  O(n) time.
int least_rotation_start(const std::string& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> fail(2 * static_cast<size_t>(n), -1);
  int k = 0;
  for (int j = 1; j < 2 * n; ++j) {
    const char sj = s[static_cast<size_t>(j % n)];
    int i = fail[static_cast<size_t>(j - k - 1)];
    while (i != -1 && sj != s[static_cast<size_t>((k + i + 1) % n)]) {
      if (letter_key(sj) < letter_key(s[static_cast<size_t>((k + i + 1) % n)]))
        k = j - i - 1;
      i = fail[i];
    }
    if (i == -1 && sj != s[static_cast<size_t>((k + i + 1) % n)]) {
      if (letter_key(sj) < letter_key(s[static_cast<size_t>(k % n)])) k = j;
      fail[static_cast<size_t>(j - k)] = -1;
    } else {
      fail[static_cast<size_t>(j - k)] = i + 1;
    }
  }
  return k % n;
}

// Smallest d dividing n such that rotating by d fixes the word.
int rotation_period(const std::string& s) {
  const int n = static_cast<int>(s.size());
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool fixed = true;
    for (int p = 0; p < n && fixed; ++p)
      fixed = s[static_cast<size_t>(p)] == s[static_cast<size_t>((p + d) % n)];
    if (fixed) return d;
  }
  return n;
}

}  // namespace

Word::Word(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) throw std::invalid_argument("word must be nonempty");
  for (char c : letters_)
    if (c != '0' && c != '1')
      throw std::invalid_argument("word letters must be 0 or 1");
}

int Word::ones() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), '1'));
}

bool lyndon_less(const Word& a, const Word& b) {
  const int n = std::min(a.size(), b.size());
  for (int p = 0; p < n; ++p) {
    const int ka = letter_key(a[p]);
    const int kb = letter_key(b[p]);
    if (ka != kb) return ka < kb;
  }
  return a.size() < b.size();
}

Word rotate(const Word& w, long long i) {
  const int n = w.size();
  const int shift = static_cast<int>(((i % n) + n) % n);
  std::string out(static_cast<size_t>(n), '0');
  for (int p = 0; p < n; ++p)
    out[static_cast<size_t>((p + shift) % n)] = w[p];
  return Word(out);
}

CanonicalForm canonical_rotation(const Word& w) {
  const int n = w.size();
  const int start = least_rotation_start(w.str());
  std::string c(static_cast<size_t>(n), '0');
  for (int p = 0; p < n; ++p)
    c[static_cast<size_t>(p)] = w[(start + p) % n];
  // The witnessing starts are exactly start mod d plus multiples of the
  // rotation period d of the canonical word; the smallest offset follows.
  const int d = rotation_period(c);
  const int offset = (d - start % d) % d;
  return CanonicalForm{Word(c), offset};
}

Word complement_reverse(const Word& w) {
  const int n = w.size();
  std::string out(static_cast<size_t>(n), '0');
  for (int p = 0; p < n; ++p)
    out[static_cast<size_t>(n - 1 - p)] = w.one_at(p) ? '0' : '1';
  return Word(out);
}

Necklace::Necklace(Word canonical, CanonicalTag)
    : canonical_(std::move(canonical)), rank_(canonical_.ones()) {}

Word Necklace::canonical_word_of(const Word& w) {
  return canonical_rotation(w).word;
}

Necklace Necklace::from_canonical(Word w) {
#ifndef NDEBUG
  // Minimality check by plain rotation scan, deliberately not Booth.
  const int n = w.size();
  for (int s = 1; s < n; ++s) {
    for (int p = 0; p < n; ++p) {
      const int kr = letter_key(w[(s + p) % n]);
      const int kw = letter_key(w[p]);
      if (kr != kw) {
        assert(kr > kw && "from_canonical given a non-canonical word");
        break;
      }
    }
  }
#endif
  return Necklace(std::move(w), CanonicalTag{});
}

bool operator<(const Necklace& a, const Necklace& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return lyndon_less(a.word(), b.word());
}

std::vector<Necklace> enumerate_necklaces(int n, int limit) {
  if (n < 1 || n > limit)
    throw std::out_of_range("enumeration length must be in [1, " +
                            std::to_string(limit) + "]");
  std::vector<Necklace> out;
  std::string buf(static_cast<size_t>(n), '0');
  const unsigned long long total = 1ULL << n;
  for (unsigned long long x = 0; x < total; ++x) {
    for (int p = 0; p < n; ++p)
      buf[static_cast<size_t>(p)] = (x >> (n - 1 - p)) & 1 ? '1' : '0';
    const Word w(buf);
    if (canonical_rotation(w).word == w) out.push_back(Necklace::from_canonical(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace necklace
