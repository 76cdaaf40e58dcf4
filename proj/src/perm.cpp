#include "fsg/perm.hpp"

#include <array>
#include <bit>

#include "fsg/errors.hpp"

namespace fsg {

namespace {

constexpr int kMaxPermOrder = 20;  // 20! still fits in uint64_t

const std::array<uint64_t, kMaxPermOrder + 1>& factorial_table() {
  static const auto table = [] {
    std::array<uint64_t, kMaxPermOrder + 1> t{};
    t[0] = 1;
    for (int i = 1; i <= kMaxPermOrder; ++i) t[i] = t[i - 1] * static_cast<uint64_t>(i);
    return t;
  }();
  return table;
}

}  // namespace

uint64_t factorial(int n) {
  if (n < 0 || n > kMaxPermOrder) throw parameter_error("factorial argument out of range: " + std::to_string(n));
  return factorial_table()[n];
}

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxPermOrder) throw parameter_error("permutation order must be in 1..20");
  Permutation p;
  p.m_.resize(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) p.m_[i] = static_cast<uint8_t>(i);
  p.m_[0] = 0;
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxPermOrder) throw parameter_error("permutation order must be in 1..20");
  uint64_t seen = 0;
  Permutation p;
  p.m_.assign(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int v = images[static_cast<size_t>(i) - 1];
    if (v < 1 || v > n || (seen >> v) & 1) {
      throw parameter_error("not a permutation of 1.." + std::to_string(n));
    }
    seen |= uint64_t{1} << v;
    p.m_[i] = static_cast<uint8_t>(v);
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.m_.assign(m_.size(), 0);
  for (int i = 1; i <= n(); ++i) q.m_[m_[i]] = static_cast<uint8_t>(i);
  return q;
}

Permutation Permutation::swapped_positions(int a, int b) const {
  if (a < 1 || a > n() || b < 1 || b > n()) throw parameter_error("swap position out of range");
  Permutation q = *this;
  std::swap(q.m_[a], q.m_[b]);
  return q;
}

uint64_t rank_of_buffer(const uint8_t* buf, int n) {
  const auto& fact = factorial_table();
  uint64_t rank = 0;
  uint64_t seen = 0;
  for (int i = 1; i <= n; ++i) {
    int v = buf[i];
    uint64_t low = (uint64_t{1} << v) - 1;
    uint64_t smaller_unused = static_cast<uint64_t>(v - 1) - static_cast<uint64_t>(std::popcount(seen & low));
    rank += smaller_unused * fact[n - i];
    seen |= uint64_t{1} << v;
  }
  return rank;
}

uint64_t perm_rank(const Permutation& p) { return rank_of_buffer(p.raw().data(), p.n()); }

Permutation perm_unrank(int n, uint64_t rank) {
  if (n < 1 || n > kMaxPermOrder) throw parameter_error("permutation order must be in 1..20");
  if (rank >= factorial(n)) throw parameter_error("rank out of range for order " + std::to_string(n));
  const auto& fact = factorial_table();
  std::vector<uint8_t> unused;
  unused.reserve(n);
  for (int v = 1; v <= n; ++v) unused.push_back(static_cast<uint8_t>(v));
  std::vector<int> images;
  images.reserve(n);
  for (int i = 1; i <= n; ++i) {
    uint64_t f = fact[n - i];
    uint64_t digit = rank / f;
    rank %= f;
    images.push_back(unused[digit]);
    unused.erase(unused.begin() + static_cast<long>(digit));
  }
  return Permutation::from_one_line(images);
}

int perm_sign(const Permutation& p) {
  uint64_t visited = 0;
  int even_cycles_parity = 0;
  for (int i = 1; i <= p.n(); ++i) {
    if ((visited >> i) & 1) continue;
    int length = 0;
    for (int j = i; !((visited >> j) & 1); j = p.of(j)) {
      visited |= uint64_t{1} << j;
      ++length;
    }
    if (length % 2 == 0) even_cycles_parity ^= 1;
  }
  return even_cycles_parity ? -1 : 1;
}

std::string to_one_line(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p.of(i));
  }
  return out;
}

std::vector<int> one_line_vector(const Permutation& p) {
  std::vector<int> out;
  out.reserve(p.n());
  for (int i = 1; i <= p.n(); ++i) out.push_back(p.of(i));
  return out;
}

}  // namespace fsg
