#include "necklace/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace necklace {

namespace {

// Bit n-1-p of the mask holds position p, so larger masks are smaller words
// under the 1-before-0 order.
uint32_t word_to_mask(const Word& w) {
  uint32_t m = 0;
  for (int p = 0; p < w.size(); ++p)
    if (w.one_at(p)) m |= 1u << (w.size() - 1 - p);
  return m;
}

std::string mask_to_string(uint32_t m, int n) {
  std::string s(static_cast<size_t>(n), '0');
  for (int p = 0; p < n; ++p)
    if (m >> (n - 1 - p) & 1u) s[static_cast<size_t>(p)] = '1';
  return s;
}

// Rotation by i positions in word space is a cyclic right shift in mask
// space.
inline uint32_t rotate_mask(uint32_t m, int i, int n) {
  if (i == 0) return m;
  const uint32_t all = (1u << n) - 1;
  return (m >> i | m << (n - i)) & all;
}

inline uint32_t max_rotation(uint32_t m, int n) {
  uint32_t best = m;
  for (int i = 1; i < n; ++i) best = std::max(best, rotate_mask(m, i, n));
  return best;
}

unsigned long long totient(int d) {
  unsigned long long result = 1;
  for (int p = 2; p * p <= d; ++p)
    if (d % p == 0) {
      unsigned long long part = 1;
      while (d % p == 0) {
        part *= static_cast<unsigned>(p);
        d /= p;
      }
      result *= part - part / static_cast<unsigned>(p);
    }
  if (d > 1) result *= static_cast<unsigned>(d - 1);
  return result;
}

// Exact at every step of the multiplicative formula.
unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return r;
}

}  // namespace

bool necklace_leq(const Necklace& u, const Necklace& v) {
  if (u.size() != v.size())
    throw std::domain_error("necklace_leq needs equal lengths");
  const int n = u.size();
  const uint32_t um = word_to_mask(u.word());
  const uint32_t vm = word_to_mask(v.word());
  for (int i = 0; i < n; ++i)
    if ((rotate_mask(um, i, n) & ~vm) == 0) return true;
  return false;
}

bool QuotientPoset::leq(const Necklace& u, const Necklace& v) const {
  const int i = index_of(u);
  const int j = index_of(v);
  if (i < 0 || j < 0) throw std::out_of_range("necklace not in poset");
  return leq_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

bool QuotientPoset::covers(const Necklace& u, const Necklace& v) const {
  return v.rank() == u.rank() + 1 && leq(u, v);
}

int QuotientPoset::index_of(const Necklace& u) const {
  const auto it = index_.find(u);
  return it == index_.end() ? -1 : it->second;
}

QuotientPoset build_poset(int n, int limit) {
  const int cap = std::min(limit, kOracleHardCap);
  if (n < 1 || n > cap)
    throw std::out_of_range("poset length must be in [1, " +
                            std::to_string(cap) + "]");

  QuotientPoset poset;
  poset.n = n;
  for (uint32_t m = 0; m < (1u << n); ++m)
    if (m == max_rotation(m, n))
      poset.elements.push_back(
          Necklace::from_canonical(Word(mask_to_string(m, n))));
  std::sort(poset.elements.begin(), poset.elements.end());

  const size_t count = poset.elements.size();
  for (size_t i = 0; i < count; ++i)
    poset.index_.emplace(poset.elements[i], static_cast<int>(i));

  poset.rank_sizes.assign(static_cast<size_t>(n) + 1, 0);
  for (const Necklace& e : poset.elements)
    ++poset.rank_sizes[static_cast<size_t>(e.rank())];

  poset.leq_.assign(count, std::vector<bool>(count, false));
  for (size_t i = 0; i < count; ++i)
    for (size_t j = 0; j < count; ++j)
      if (poset.elements[i].rank() <= poset.elements[j].rank())
        poset.leq_[i][j] = necklace_leq(poset.elements[i], poset.elements[j]);
  return poset;
}

unsigned long long necklace_count(int n) {
  unsigned long long total = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) total += totient(d) * (1ULL << (n / d));
  return total / static_cast<unsigned>(n);
}

unsigned long long necklace_rank_count(int n, int k) {
  const int g = k == 0 ? n : std::gcd(n, k);
  unsigned long long total = 0;
  for (int d = 1; d <= g; ++d)
    if (g % d == 0) total += totient(d) * binomial(n / d, k / d);
  return total / static_cast<unsigned>(n);
}

RankProfileReport check_rank_profile(int n) {
  if (n < 1 || n > kOracleHardCap)
    throw std::out_of_range("rank profile length must be in [1, " +
                            std::to_string(kOracleHardCap) + "]");
  RankProfileReport report;
  report.n = n;
  report.sizes.assign(static_cast<size_t>(n) + 1, 0);
  for (uint32_t m = 0; m < (1u << n); ++m)
    if (m == max_rotation(m, n))
      ++report.sizes[static_cast<size_t>(__builtin_popcount(m))];

  report.symmetric = true;
  for (int k = 0; k <= n; ++k)
    if (report.sizes[static_cast<size_t>(k)] !=
        report.sizes[static_cast<size_t>(n - k)]) {
      report.symmetric = false;
      report.findings.push_back("asymmetric at rank " + std::to_string(k));
    }

  report.unimodal = true;
  for (int k = 0; k + 1 <= n; ++k) {
    const bool rising_half = k + 1 <= n - (k + 1);
    const long long a = report.sizes[static_cast<size_t>(k)];
    const long long b = report.sizes[static_cast<size_t>(k + 1)];
    if ((rising_half && a > b) || (!rising_half && a < b)) {
      report.unimodal = false;
      report.findings.push_back("not unimodal at rank " + std::to_string(k + 1));
    }
  }

  report.matches_formula = true;
  for (int k = 0; k <= n; ++k)
    if (static_cast<unsigned long long>(
            report.sizes[static_cast<size_t>(k)]) != necklace_rank_count(n, k)) {
      report.matches_formula = false;
      report.findings.push_back("rank " + std::to_string(k) +
                                " disagrees with the counting formula");
    }
  return report;
}

}  // namespace necklace
