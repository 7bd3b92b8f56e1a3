#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>

#include "springerstab/numbers.hpp"
#include "springerstab/partition.hpp"
#include "springerstab/poincare.hpp"
#include "springerstab/rational_poly.hpp"

namespace springerstab {

// Memo for Betti vectors, keyed by normalized partition. Entries are
// immutable once written and duplicate fills are idempotent, so concurrent
// readers and writers only need entry-level locking.
class MemoTable {
 public:
  MemoTable() = default;
  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  std::optional<PoincarePoly> find(const Partition& p) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(p);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  PoincarePoly store(const Partition& p, PoincarePoly poly) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.emplace(p, std::move(poly));
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

  // Cache file format: one header line "springerstab-cache v1", then one
  // record per line, "<partition>\t<c0,c1,...>".
  void save(std::ostream& os) const {
    std::shared_lock lock(mutex_);
    os << "springerstab-cache v1\n";
    for (const auto& [p, poly] : entries_) {
      os << p.to_string() << '\t';
      for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
        if (i) os << ',';
        os << poly.coeffs[i];
      }
      os << '\n';
    }
  }

  void save_file(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cache: cannot write \"" + path + "\"");
    save(os);
  }

  // Merges records from a stream, validating each against the PoincarePoly
  // invariants; malformed input throws std::invalid_argument.
  void load(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "springerstab-cache v1")
      throw std::invalid_argument("cache: missing \"springerstab-cache v1\" header");
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
      ++lineno;
      if (line.empty()) continue;
      const auto where = "cache line " + std::to_string(lineno);
      auto tab = line.find('\t');
      if (tab == std::string::npos)
        throw std::invalid_argument(where + ": expected <partition>\\t<coefficients>");
      Partition p = Partition::parse(line.substr(0, tab));
      PoincarePoly poly;
      std::string coeffs = line.substr(tab + 1);
      std::size_t pos = 0;
      while (pos <= coeffs.size()) {
        auto comma = coeffs.find(',', pos);
        std::string tok = coeffs.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
        try {
          poly.coeffs.emplace_back(tok);
        } catch (const std::exception&) {
          throw std::invalid_argument(where + ": bad coefficient \"" + tok + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      try {
        validate_poincare(p, poly);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
      }
      store(p, std::move(poly));
    }
  }

  void load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cache: cannot read \"" + path + "\"");
    load(is);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Partition, PoincarePoly> entries_;
};

inline MemoTable& default_memo() {
  static MemoTable memo;
  return memo;
}

// Betti vector of the Springer fiber of λ via the box-removal recursion
//   h^{2k}(λ) = Σ_{i=1}^{m} h^{2(k-i+1)}(λ with a box removed from row i),
// summed over all m nonzero rows, with poincare(∅) = [1].
inline PoincarePoly poincare(const Partition& p, MemoTable& memo = default_memo()) {
  if (auto hit = memo.find(p)) return *std::move(hit);
  PoincarePoly result;
  if (p.empty()) {
    result.coeffs = {Int(1)};
  } else {
    result.coeffs.assign(static_cast<std::size_t>(n_stat(p)) + 1, Int(0));
    for (int row = 1; row <= static_cast<int>(p.length()); ++row) {
      PoincarePoly child = poincare(p.with_box_removed(row), memo);
      for (std::size_t j = 0; j < child.coeffs.size(); ++j)
        result.coeffs[j + static_cast<std::size_t>(row - 1)] += child.coeffs[j];
    }
  }
  return memo.store(p, std::move(result));
}

inline Int betti(const Partition& p, int k, MemoTable& memo = default_memo()) {
  return poincare(p, memo).betti(k);
}

// The stability polynomial f_{k,r}: degree k, leading coefficient 1/k!,
// with h^{2k}(λ) = f_{k,r}(|λ|) for every λ with at most r parts containing
// A_{k,r}. Built recursively as
//   f_{k,r}(x) = h^{2k}(A_{k,r}) + Σ_{i=|A_{k,r}|}^{x-1} Σ_{j=k-r+1}^{k-1} f_{j,r}(i)
// with f_{0,r} = 1, f_{j,r} = 0 for j < 0, and f_{k,1} = δ_{k,0}.
inline RationalPoly f_poly(int k, int r) {
  if (r <= 0) throw std::invalid_argument("f_poly: r must be positive");
  if (k < 0) return {};
  if (r == 1) return k == 0 ? RationalPoly::constant(1) : RationalPoly{};
  if (k == 0) return RationalPoly::constant(1);

  static std::map<std::pair<int, int>, RationalPoly> memo;
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    auto it = memo.find({k, r});
    if (it != memo.end()) return it->second;
  }

  RationalPoly inner;
  for (int j = std::max(0, k - r + 1); j <= k - 1; ++j) inner += f_poly(j, r);
  Partition a = stability_threshold(k, r);
  RationalPoly result = RationalPoly::constant(Rational(betti(a, k))) +
                        discrete_sum(inner, Int(a.sum()));

  std::unique_lock lock(mutex);
  return memo.emplace(std::make_pair(k, r), std::move(result)).first->second;
}

// f_k = lim_{r→∞} f_{k,r}; the limit is already reached at r = k+1.
inline RationalPoly f_limit(int k) {
  if (k < 0) return {};
  return f_poly(k, k + 1);
}

}  // namespace springerstab
