#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace necklace {

/// Largest word length accepted by the exhaustive enumeration helpers.
inline constexpr int kMaxEnumerationLength = 24;

/// A fixed binary word over {0,1}, positions 0..size()-1.
///
/// Every operation in this library that compares rotations does so under the
/// letter order 1 before 0, so the canonical rotation of a word is the one
/// with as many leading 1s as possible.
class Word {
public:
  /// Throws std::invalid_argument for an empty string or a letter
  /// outside {0,1}.
  explicit Word(std::string_view letters);

  int size() const { return static_cast<int>(letters_.size()); }
  char operator[](int p) const { return letters_[static_cast<size_t>(p)]; }
  bool one_at(int p) const { return (*this)[p] == '1'; }

  /// Number of 1 letters.
  int ones() const;

  const std::string& str() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::string letters_;
};

/// Lexicographic comparison with 1 ordered before 0.
bool lyndon_less(const Word& a, const Word& b);

/// Cyclic rotation: position p of the result holds the letter of w at
/// position (p - i) mod n.  i may be negative; it is taken mod n.
Word rotate(const Word& w, long long i);

struct CanonicalForm {
  Word word;   // lexicographically smallest rotation under 1 before 0
  int offset;  // smallest i in [0,n) with rotate(original, i) == word
};

/// Booth's least-rotation scan under the 1-before-0 order.  For periodic
/// words the smallest witnessing offset is reported.
CanonicalForm canonical_rotation(const Word& w);

/// Reverse the word and swap 0 <-> 1.  An involution on words.
Word complement_reverse(const Word& w);

/// A rotation class of binary words, stored by its canonical rotation.
class Necklace {
public:
  explicit Necklace(const Word& w)
      : Necklace(canonical_word_of(w), CanonicalTag{}) {}

  /// Wraps a word that is already its own canonical rotation; the caller
  /// vouches for that (checked in debug builds only).  Lets independent
  /// canonicalization schemes produce Necklace values without routing
  /// through canonical_rotation().
  static Necklace from_canonical(Word w);

  const Word& word() const { return canonical_; }
  int size() const { return canonical_.size(); }
  int rank() const { return rank_; }

  friend bool operator==(const Necklace& a, const Necklace& b) {
    return a.canonical_ == b.canonical_;
  }
  /// Orders by (size, rank, canonical word under 1 before 0); matches the
  /// enumeration order below.
  friend bool operator<(const Necklace& a, const Necklace& b);

private:
  struct CanonicalTag {};
  Necklace(Word canonical, CanonicalTag);
  static Word canonical_word_of(const Word& w);

  Word canonical_;
  int rank_;
};

/// All necklaces of length n, ordered by rank ascending then canonical word
/// under 1 before 0.  Throws std::out_of_range unless 1 <= n <= limit.
std::vector<Necklace> enumerate_necklaces(int n, int limit = kMaxEnumerationLength);

}  // namespace necklace
