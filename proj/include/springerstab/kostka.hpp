#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "springerstab/numbers.hpp"
#include "springerstab/partition.hpp"
#include "springerstab/poincare.hpp"

namespace springerstab {

// Semistandard Young tableau, English convention: rows weakly increase
// left to right, columns strictly increase top to bottom.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
  }

  // Bottom row first, each row left to right.
  std::vector<int> reading_word() const {
    std::vector<int> word;
    for (std::size_t i = rows.size(); i-- > 0;)
      word.insert(word.end(), rows[i].begin(), rows[i].end());
    return word;
  }

  bool operator==(const Tableau&) const = default;
};

namespace detail {
inline void fill_ssyt(std::vector<std::vector<int>>& cells, std::vector<int>& remaining,
                      std::size_t row, std::size_t col, std::vector<Tableau>& out) {
  if (row == cells.size()) {
    out.push_back(Tableau{cells});
    return;
  }
  const std::size_t next_row = col + 1 < cells[row].size() ? row : row + 1;
  const std::size_t next_col = col + 1 < cells[row].size() ? col + 1 : 0;
  int lo = 1;
  if (col > 0) lo = std::max(lo, cells[row][col - 1]);
  if (row > 0) lo = std::max(lo, cells[row - 1][col] + 1);
  for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
    if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
    cells[row][col] = v;
    --remaining[static_cast<std::size_t>(v - 1)];
    fill_ssyt(cells, remaining, next_row, next_col, out);
    ++remaining[static_cast<std::size_t>(v - 1)];
  }
  cells[row][col] = 0;
}
}  // namespace detail

// All semistandard tableaux of the given shape and content, in
// lexicographic order of the row-major filling.
inline std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content) {
  if (shape.sum() != content.sum())
    throw std::invalid_argument("ssyt_enumerate: |shape| != |content|");
  std::vector<std::vector<int>> cells(shape.length());
  for (std::size_t i = 0; i < shape.length(); ++i)
    cells[i].assign(static_cast<std::size_t>(shape.parts()[i]), 0);
  std::vector<int> remaining(content.parts().begin(), content.parts().end());
  std::vector<Tableau> out;
  detail::fill_ssyt(cells, remaining, 0, 0, out);
  return out;
}

// Lascoux–Schützenberger charge. Convention: in a standard word the index
// of 1 is 0 and the index of s+1 increments exactly when s+1 sits to the
// right of s; the charge is the sum of all indexes. A word of general
// partition content is split into standard subwords by repeatedly scanning
// right to left (cyclically) for 1, 2, ..., and the charges of the
// subwords are added. This normalization satisfies K_{λλ}(t) = 1 and
// K_{(n),λ}(t) = t^{n(λ)}.
inline long long charge(const std::vector<int>& word) {
  if (word.empty()) return 0;
  int max_value = 0;
  for (int v : word) {
    if (v <= 0) throw std::invalid_argument("charge: letters must be positive");
    max_value = std::max(max_value, v);
  }
  std::vector<int> count(static_cast<std::size_t>(max_value) + 1, 0);
  for (int v : word) ++count[static_cast<std::size_t>(v)];
  for (int v = 1; v < max_value; ++v)
    if (count[static_cast<std::size_t>(v)] < count[static_cast<std::size_t>(v + 1)])
      throw std::invalid_argument("charge: content is not a partition");

  const int size = static_cast<int>(word.size());
  std::vector<char> alive(word.size(), 1);
  std::vector<int> selected;
  std::vector<int> rank_of_value(static_cast<std::size_t>(max_value) + 1, 0);
  long long total = 0;
  int live = size;
  while (live > 0) {
    int distinct = max_value;
    while (distinct >= 1 && count[static_cast<std::size_t>(distinct)] == 0) --distinct;

    selected.clear();
    int pos = -1;
    for (int i = size - 1; i >= 0; --i)
      if (alive[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == 1) {
        pos = i;
        break;
      }
    selected.push_back(pos);
    for (int v = 2; v <= distinct; ++v) {
      int found = -1;
      for (int step = 1; step < size; ++step) {
        int i = pos - step;
        if (i < 0) i += size;
        if (alive[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == v) {
          found = i;
          break;
        }
      }
      pos = found;
      selected.push_back(pos);
    }

    for (int i : selected) {
      alive[static_cast<std::size_t>(i)] = 0;
      --count[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])];
    }
    live -= static_cast<int>(selected.size());

    std::sort(selected.begin(), selected.end());
    for (int rank = 0; rank < static_cast<int>(selected.size()); ++rank)
      rank_of_value[static_cast<std::size_t>(
          word[static_cast<std::size_t>(selected[static_cast<std::size_t>(rank)])])] = rank;
    long long index = 0;
    for (int v = 2; v <= distinct; ++v) {
      if (rank_of_value[static_cast<std::size_t>(v)] >
          rank_of_value[static_cast<std::size_t>(v - 1)])
        ++index;
      total += index;
    }
  }
  return total;
}

// Kostka–Foulkes polynomial K_{μλ}(t) = Σ_T t^{charge(T)} over semistandard
// tableaux of shape μ and content λ; coefficients ascending in t, empty
// when no tableau exists. Memoized.
inline std::vector<Int> kostka_poly(const Partition& mu, const Partition& lambda) {
  if (mu.sum() != lambda.sum())
    throw std::invalid_argument("kostka_poly: |mu| != |lambda|");
  static std::map<std::pair<Partition, Partition>, std::vector<Int>> memo;
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    auto it = memo.find({mu, lambda});
    if (it != memo.end()) return it->second;
  }

  std::vector<Int> coeffs;
  for (const Tableau& t : ssyt_enumerate(mu, lambda)) {
    const auto c = static_cast<std::size_t>(charge(t.reading_word()));
    if (coeffs.size() <= c) coeffs.resize(c + 1);
    ++coeffs[c];
  }

  std::unique_lock lock(mutex);
  return memo.emplace(std::make_pair(mu, lambda), std::move(coeffs)).first->second;
}

// Multiplicity of the irreducible χ^μ in H^{2k}(λ): the t^k coefficient of
// the cocharge renormalization t^{n(λ)} K_{μλ}(1/t).
inline Int graded_mult(const Partition& mu, const Partition& lambda, int k) {
  if (k < 0) throw std::invalid_argument("graded_mult: negative degree");
  const std::vector<Int> kf = kostka_poly(mu, lambda);
  const long long idx = n_stat(lambda) - k;
  if (idx < 0 || idx >= static_cast<long long>(kf.size())) return 0;
  return kf[static_cast<std::size_t>(idx)];
}

// Character of H^{2k}(λ) as a W_{|λ|}-module: μ ↦ multiplicity of χ^μ,
// nonzero entries only.
struct GradedDecomposition {
  int degree = 0;
  std::map<Partition, Int> multiplicities;

  bool operator==(const GradedDecomposition&) const = default;
};

inline GradedDecomposition decompose(const Partition& lambda, int k) {
  GradedDecomposition out;
  out.degree = k;
  for (const Partition& mu : partitions(lambda.sum())) {
    Int m = graded_mult(mu, lambda, k);
    if (m != 0) out.multiplicities.emplace(mu, std::move(m));
  }
  return out;
}

// Betti vector of λ assembled from graded multiplicities:
// h^{2k}(λ) = Σ_μ f^μ · mult(χ^μ, H^{2k}(λ)). Independent of the
// box-removal recursion; this is the ground truth it is checked against.
inline PoincarePoly poincare_kf(const Partition& lambda) {
  PoincarePoly out;
  out.coeffs.assign(static_cast<std::size_t>(n_stat(lambda)) + 1, Int(0));
  const long long top = n_stat(lambda);
  for (const Partition& mu : partitions(lambda.sum())) {
    const std::vector<Int> kf = kostka_poly(mu, lambda);
    if (kf.empty()) continue;
    const Int dim = syt_count(mu);
    for (std::size_t c = 0; c < kf.size(); ++c)
      if (kf[c] != 0) out.coeffs.at(static_cast<std::size_t>(top - static_cast<long long>(c))) += dim * kf[c];
  }
  return out;
}

// Betti numbers of the full flag variety: coefficients of the q-factorial
// Π_{i=1}^{n} (1 + t + ... + t^{i-1}), i.e. permutation counts by
// inversion number.
inline PoincarePoly flag_poincare(int n) {
  if (n < 1) throw std::invalid_argument("flag_poincare: n must be positive");
  std::vector<Int> coeffs{Int(1)};
  for (int i = 2; i <= n; ++i) {
    std::vector<Int> next(coeffs.size() + static_cast<std::size_t>(i) - 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      for (int s = 0; s < i; ++s) next[j + static_cast<std::size_t>(s)] += coeffs[j];
    coeffs = std::move(next);
  }
  return PoincarePoly{std::move(coeffs)};
}

}  // namespace springerstab
