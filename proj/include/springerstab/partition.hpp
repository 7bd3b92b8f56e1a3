#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "springerstab/numbers.hpp"

namespace springerstab {

// Integer partition, stored normalized: strictly positive parts in weakly
// decreasing order, no trailing zeros. The empty partition is the unique
// partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> raw) {
    for (int p : raw)
      if (p < 0) throw std::invalid_argument("Partition: negative part");
    std::erase(raw, 0);
    std::sort(raw.begin(), raw.end(), std::greater<>());
    parts_ = std::move(raw);
  }

  Partition(std::initializer_list<int> raw) : Partition(std::vector<int>(raw)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // i-th part, 0-based; zero beyond the last part.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  // Lexicographic on the part lists.
  auto operator<=>(const Partition&) const = default;

  // Young-diagram containment: every row at least as long.
  bool contains(const Partition& mu) const {
    for (std::size_t i = 0; i < mu.length(); ++i)
      if (part(i) < mu.part(i)) return false;
    return true;
  }

  // Dominance order on partitions of equal size: prefix sums never smaller.
  bool dominates(const Partition& mu) const {
    if (sum() != mu.sum())
      throw std::invalid_argument("dominates: partitions of different sizes");
    long long acc_self = 0, acc_mu = 0;
    std::size_t n = std::max(length(), mu.length());
    for (std::size_t i = 0; i < n; ++i) {
      acc_self += part(i);
      acc_mu += mu.part(i);
      if (acc_self < acc_mu) return false;
    }
    return true;
  }

  Partition transposed() const {
    if (parts_.empty()) return {};
    std::vector<int> t(static_cast<std::size_t>(parts_[0]));
    for (std::size_t j = 0; j < t.size(); ++j) {
      int count = 0;
      for (int p : parts_)
        if (p > static_cast<int>(j)) ++count;
      t[j] = count;
    }
    return Partition(std::move(t));
  }

  // Removes one box from the given row (1-based) and re-sorts.
  Partition with_box_removed(int row) const {
    if (row < 1 || row > static_cast<int>(parts_.size()))
      throw std::out_of_range("with_box_removed: no such row");
    std::vector<int> copy(parts_);
    --copy[static_cast<std::size_t>(row - 1)];
    return Partition(std::move(copy));
  }

  // "a,b,c" with parts comma-separated; the empty string is the empty
  // partition. Used by the CLI and the cache file format.
  static Partition parse(std::string_view s) {
    std::vector<int> raw;
    if (s.empty()) return {};
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = s.find(',', pos);
      std::string_view tok = s.substr(pos, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - pos);
      if (tok.empty()) throw std::invalid_argument("Partition::parse: empty part");
      long long value = 0;
      for (char c : tok) {
        if (c < '0' || c > '9')
          throw std::invalid_argument("Partition::parse: invalid character in \"" +
                                      std::string(s) + "\"");
        value = value * 10 + (c - '0');
        if (value > 1'000'000'000)
          throw std::invalid_argument("Partition::parse: part out of range");
      }
      raw.push_back(static_cast<int>(value));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Partition(std::move(raw));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

 private:
  std::vector<int> parts_;
};

// n(λ) = Σ (i-1)·λ_i, the complex dimension of the associated Springer
// fiber; half the top cohomological degree.
inline long long n_stat(const Partition& p) {
  long long s = 0;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += static_cast<long long>(i) * parts[i];
  return s;
}

// Number of standard Young tableaux, by the hook length formula.
inline Int syt_count(const Partition& p) {
  Partition t = p.transposed();
  Int hooks = 1;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j)
      hooks *= parts[i] + t.part(static_cast<std::size_t>(j)) -
               static_cast<int>(i) - j - 1;
  return factorial(p.sum()) / hooks;
}

// |λ|! / Π λ_i!  — the total Betti mass of the Springer fiber.
inline Int multinomial(const Partition& p) {
  Int denom = 1;
  for (int part : p.parts()) denom *= factorial(part);
  return factorial(p.sum()) / denom;
}

// The threshold partition A_{k,r}: containment of A_{k,r} by a partition
// with at most r parts triggers degree-k stability. For r >= 2 the parts
// are α_1 = α_2 = ⌊(k+r-2)/(r-1)⌋ and α_s = ⌊(k+r-s)/(r-1)⌋ for s >= 2;
// the single-row case is pinned to (1).
inline Partition stability_threshold(int k, int r) {
  if (r <= 0) throw std::invalid_argument("stability_threshold: r must be positive");
  if (k < 0) throw std::invalid_argument("stability_threshold: k must be nonnegative");
  if (r == 1) return {1};
  std::vector<int> alpha(static_cast<std::size_t>(r));
  alpha[0] = (k + r - 2) / (r - 1);
  for (int s = 2; s <= r; ++s)
    alpha[static_cast<std::size_t>(s - 1)] = (k + r - s) / (r - 1);
  return Partition(std::move(alpha));
}

// The dominance-maximal partition of n with at most r parts containing
// A_{k,r}: all spare boxes go to the first row of A_{k,r}.
inline Partition dominance_max(int n, int k, int r) {
  Partition a = stability_threshold(k, r);
  if (n < a.sum())
    throw std::invalid_argument("dominance_max: n smaller than |A_{k,r}|");
  std::vector<int> parts(a.parts());
  if (parts.empty()) parts.push_back(0);
  parts[0] += n - a.sum();
  return Partition(std::move(parts));
}

namespace detail {
inline void emit_partitions(int n, int max_part, int slots, std::vector<int>& acc,
                            std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int first = std::min(n, max_part); first >= 1; --first) {
    if (static_cast<long long>(first) * slots < n) break;
    acc.push_back(first);
    emit_partitions(n - first, first, slots - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

// All partitions of n with at most max_parts parts, each exactly once, in
// descending lexicographic order.
inline std::vector<Partition> partitions(int n, int max_parts) {
  if (n < 0) throw std::invalid_argument("partitions: negative n");
  if (max_parts < 0) throw std::invalid_argument("partitions: negative max_parts");
  std::vector<Partition> out;
  std::vector<int> acc;
  detail::emit_partitions(n, n, std::min(n, max_parts), acc, out);
  return out;
}

inline std::vector<Partition> partitions(int n) { return partitions(n, n); }

}  // namespace springerstab
