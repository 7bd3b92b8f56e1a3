#pragma once

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "springerstab/betti.hpp"
#include "springerstab/fkr_reference.hpp"
#include "springerstab/kostka.hpp"
#include "springerstab/numbers.hpp"
#include "springerstab/partition.hpp"
#include "springerstab/rational_poly.hpp"

namespace springerstab {

inline nlohmann::json json_int(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

inline nlohmann::json json_rational(const Rational& v) {
  if (denominator(v) == 1) return json_int(numerator(v));
  return numerator(v).str() + "/" + denominator(v).str();
}

// Machine-checkable verdict for one stability statement. A failing verdict
// always carries the minimal counterexample: smallest n, then
// lexicographically first partition, then first differing inner datum.
struct StabilityReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  bool vacuous = false;
  nlohmann::json counterexample;  // null while passing
  double elapsed_ms = 0.0;

  nlohmann::json to_json() const {
    return nlohmann::json{{"check", check},
                          {"params", params},
                          {"verdict", pass ? "pass" : "fail"},
                          {"vacuous", vacuous},
                          {"counterexample", counterexample},
                          {"elapsed_ms", elapsed_ms}};
  }
};

namespace detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Ascending lexicographic scan order, so the first failure recorded is the
// minimal one no matter how the loop is later parallelized.
inline std::vector<Partition> partitions_ascending(int n, int max_parts) {
  std::vector<Partition> all = partitions(n, max_parts);
  std::reverse(all.begin(), all.end());
  return all;
}

// Scans run in ascending order, so the first failure is the minimal one.
inline void record_failure(StabilityReport& report, nlohmann::json ce) {
  if (report.pass) {
    report.pass = false;
    report.counterexample = std::move(ce);
  }
}

// Dimension-stability scan against an arbitrary candidate polynomial;
// check_dim_stability passes f_{k,r} and tests pass deliberately perturbed
// polynomials to prove the harness can fail.
inline StabilityReport check_dim_against(const RationalPoly& f, int k, int r, int n_max) {
  Stopwatch timer;
  StabilityReport report;
  report.check = "dim";
  report.params = {{"k", k}, {"r", r}, {"n_max", n_max}};
  const Partition threshold = stability_threshold(k, r);
  bool any = false;
  for (int n = threshold.sum(); n <= n_max; ++n) {
    for (const Partition& lambda : partitions_ascending(n, r)) {
      if (!lambda.contains(threshold)) continue;
      any = true;
      const Rational expected = f(Int(n));
      const Int actual = betti(lambda, k);
      if (Rational(actual) != expected)
        record_failure(report,
                                {{"n", n},
                                 {"lambda", lambda.to_string()},
                                 {"expected", json_rational(expected)},
                                 {"actual", json_int(actual)}});
    }
  }
  report.vacuous = !any;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

}  // namespace detail

// h^{2k}(λ) = f_{k,r}(|λ|) for every λ with at most r parts containing
// A_{k,r}, swept over |A_{k,r}| <= |λ| <= n_max.
inline StabilityReport check_dim_stability(int k, int r, int n_max) {
  return detail::check_dim_against(f_poly(k, r), k, r, n_max);
}

// All qualifying λ ⊢ n share one graded decomposition in degree k, equal to
// that of the dominance-maximal qualifying partition.
inline StabilityReport check_rep_stability(int k, int r, int n) {
  detail::Stopwatch timer;
  StabilityReport report;
  report.check = "rep";
  report.params = {{"k", k}, {"r", r}, {"n", n}};
  const Partition threshold = stability_threshold(k, r);
  std::vector<Partition> qualifying;
  if (n >= threshold.sum())
    for (const Partition& lambda : detail::partitions_ascending(n, r))
      if (lambda.contains(threshold)) qualifying.push_back(lambda);

  if (qualifying.empty()) {
    report.vacuous = true;
    report.elapsed_ms = timer.elapsed_ms();
    return report;
  }

  const Partition max = dominance_max(n, k, r);
  const GradedDecomposition reference = decompose(max, k);
  for (const Partition& lambda : qualifying) {
    const GradedDecomposition actual = decompose(lambda, k);
    if (actual == reference) continue;
    // first differing multiplicity, scanning μ in ascending order
    for (const Partition& mu : detail::partitions_ascending(n, n)) {
      const Int expected_mult = graded_mult(mu, max, k);
      const Int actual_mult = graded_mult(mu, lambda, k);
      if (expected_mult != actual_mult) {
        detail::record_failure(report,
                                        {{"n", n},
                                         {"lambda", lambda.to_string()},
                                         {"lambda_max", max.to_string()},
                                         {"mu", mu.to_string()},
                                         {"expected_mult", json_int(expected_mult)},
                                         {"actual_mult", json_int(actual_mult)}});
        break;
      }
    }
  }
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

// Dominance monotonicity of graded multiplicities: λ ≥ λ' implies
// mult(χ^μ, H^{2k}(λ)) <= mult(χ^μ, H^{2k}(λ')) for all μ and k.
inline StabilityReport check_monotonicity(int n) {
  detail::Stopwatch timer;
  StabilityReport report;
  report.check = "mono";
  report.params = {{"n", n}};
  const std::vector<Partition> all = detail::partitions_ascending(n, std::max(n, 1));
  bool any = false;
  for (const Partition& lambda : all) {
    for (const Partition& smaller : all) {
      if (!lambda.dominates(smaller)) continue;
      any = true;
      const int k_max = static_cast<int>(n_stat(smaller));
      for (const Partition& mu : all) {
        for (int k = 0; k <= k_max; ++k) {
          const Int above = graded_mult(mu, lambda, k);
          const Int below = graded_mult(mu, smaller, k);
          if (above > below)
            detail::record_failure(report,
                                            {{"n", n},
                                             {"lambda", lambda.to_string()},
                                             {"lambda_prime", smaller.to_string()},
                                             {"mu", mu.to_string()},
                                             {"k", k},
                                             {"mult_lambda", json_int(above)},
                                             {"mult_lambda_prime", json_int(below)}});
        }
      }
    }
  }
  report.vacuous = !any;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

// Partitions of n with at least k+1 parts all have the Betti numbers and
// graded decompositions of the full flag variety: h^{2k}(λ) equals the
// inversion count, f_k(n), and decompose(λ,k) = decompose((1^n),k).
inline StabilityReport check_flag_corollary(int n, int k_max) {
  detail::Stopwatch timer;
  StabilityReport report;
  report.check = "flag";
  report.params = {{"n", n}, {"k_max", k_max}};
  bool any = false;
  std::optional<PoincarePoly> flag;
  const Partition column(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1));
  for (int k = 0; k <= k_max; ++k) {
    std::optional<GradedDecomposition> reference;
    for (const Partition& lambda : detail::partitions_ascending(n, std::max(n, 1))) {
      if (static_cast<int>(lambda.length()) < k + 1) continue;
      any = true;
      if (!flag) flag = flag_poincare(n);
      if (!reference) reference = decompose(column, k);
      const Int actual = betti(lambda, k);
      const Int expected_flag = flag->betti(k);
      const Rational expected_poly = f_limit(k)(Int(n));
      if (Rational(actual) != Rational(expected_flag) ||
          Rational(actual) != expected_poly) {
        detail::record_failure(report,
                                        {{"n", n},
                                         {"k", k},
                                         {"lambda", lambda.to_string()},
                                         {"aspect", "betti"},
                                         {"actual", json_int(actual)},
                                         {"flag_betti", json_int(expected_flag)},
                                         {"f_limit_value", json_rational(expected_poly)}});
        continue;
      }
      if (decompose(lambda, k) != *reference)
        detail::record_failure(report,
                                        {{"n", n},
                                         {"k", k},
                                         {"lambda", lambda.to_string()},
                                         {"aspect", "decomposition"}});
    }
  }
  report.vacuous = !any;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

// f_poly reproduces every entry of the golden f_{k,r} table exactly.
inline StabilityReport verify_reference_table() {
  detail::Stopwatch timer;
  StabilityReport report;
  report.check = "table";
  report.params = {{"entries", reference::fkr_table.size()}};
  for (const auto& entry : reference::fkr_table) {
    const RationalPoly expected = reference::parse_entry(entry);
    const RationalPoly actual = f_poly(entry.k, entry.r);
    if (actual != expected)
      detail::record_failure(report,
                                      {{"k", entry.k},
                                       {"r", entry.r},
                                       {"expected", to_display_string(expected)},
                                       {"actual", to_display_string(actual)}});
  }
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

}  // namespace springerstab
