#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fsg {

/// Bijection on {1..n}; m_[i] = image of i, m_[0] unused. Dense ranking via
/// the Lehmer code: rank 0 is the identity, rank n!-1 the reversal, and the
/// rank order equals lexicographic order of one-line notation.
class Permutation {
 public:
  static Permutation identity(int n);
  static Permutation from_one_line(const std::vector<int>& images);

  int n() const { return static_cast<int>(m_.size()) - 1; }
  int of(int i) const { return m_[static_cast<size_t>(i)]; }
  Permutation inverse() const;
  /// Result of exchanging the images of positions a and b.
  Permutation swapped_positions(int a, int b) const;

  const std::vector<uint8_t>& raw() const { return m_; }
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& other) const { return m_ < other.m_; }

 private:
  std::vector<uint8_t> m_;
};

uint64_t factorial(int n);
uint64_t perm_rank(const Permutation& p);
Permutation perm_unrank(int n, uint64_t rank);
/// +1 for even permutations, -1 for odd; computed from the cycle structure.
int perm_sign(const Permutation& p);
std::string to_one_line(const Permutation& p);
std::vector<int> one_line_vector(const Permutation& p);

/// Rank of the permutation stored in buf[1..n] (buf[0] ignored).
uint64_t rank_of_buffer(const uint8_t* buf, int n);

}  // namespace fsg
