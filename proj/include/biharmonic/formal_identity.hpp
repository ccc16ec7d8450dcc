#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "biharmonic/means.hpp"
#include "biharmonic/numeric.hpp"
#include "biharmonic/poly.hpp"

namespace biharmonic {

// Exponent pattern (e_1, ..., e_k) of n = p_1^{e_1} * ... * p_k^{e_k},
// with the p_i treated as independent symbols.
struct ExponentPattern {
  std::vector<unsigned> exponents;

  std::size_t variable_count() const { return exponents.size(); }
  std::size_t divisor_count() const {
    std::size_t t = 1;
    for (unsigned e : exponents) t *= e + 1;
    return t;
  }
};

inline constexpr std::size_t kMaxPatternVariables = 4;

namespace detail {

inline void validate_pattern(const ExponentPattern& pattern) {
  if (pattern.exponents.empty())
    throw std::invalid_argument("ExponentPattern: needs at least one exponent");
  for (unsigned e : pattern.exponents)
    if (e < 1)
      throw std::invalid_argument("ExponentPattern: exponents must be >= 1");
  if (pattern.exponents.size() > kMaxPatternVariables)
    throw std::invalid_argument("ExponentPattern: too many variables");
}

inline std::vector<std::string> pattern_variables(std::size_t k) {
  static const char* names[kMaxPatternVariables] = {"p", "q", "r", "s"};
  return {names, names + k};
}

}  // namespace detail

// The divisor set of the pattern as monomials: every p_1^{f_1}...p_k^{f_k}
// with 0 <= f_i <= e_i, in lexicographic exponent order.
inline std::vector<SparsePoly> divisor_monomials(const ExponentPattern& pattern) {
  detail::validate_pattern(pattern);
  const auto vars = detail::pattern_variables(pattern.variable_count());
  std::vector<SparsePoly::Exponents> exps{{}};
  for (unsigned e : pattern.exponents) {
    std::vector<SparsePoly::Exponents> next;
    for (const auto& prefix : exps)
      for (unsigned f = 0; f <= e; ++f) {
        auto ext = prefix;
        ext.push_back(f);
        next.push_back(std::move(ext));
      }
    exps = std::move(next);
  }
  std::sort(exps.begin(), exps.end());
  std::vector<SparsePoly> out;
  out.reserve(exps.size());
  for (auto& e : exps) out.push_back(SparsePoly::monomial(vars, std::move(e)));
  return out;
}

// Symbolic form of G^2 = H * A over the divisor monomials of the pattern:
//  (i)  d -> n/d permutes the divisor set, and
//  (ii) H * A reduces to the monomial n as an identity of rational
//       functions: with S = sum of divisors and S' = sum of cofactors,
//       H * A = n * S / S', so exact_div(n*S, S') must give back n.
// Both checks are exact; no radicals ever appear because the identity is
// used in its squared form.
inline bool verify_geo2_formal(const ExponentPattern& pattern) {
  detail::validate_pattern(pattern);
  const auto vars = detail::pattern_variables(pattern.variable_count());
  const auto ds = divisor_monomials(pattern);
  SparsePoly::Exponents full(pattern.exponents.begin(), pattern.exponents.end());
  const SparsePoly n = SparsePoly::monomial(vars, full);

  std::multiset<SparsePoly::Exponents> set_d, set_cod;
  SparsePoly sum_d(vars), sum_cod(vars);
  for (const auto& d : ds) {
    const SparsePoly cod = n.exact_div(d);  // monomial / monomial
    set_d.insert(d.terms().begin()->first);
    set_cod.insert(cod.terms().begin()->first);
    sum_d = sum_d + d;
    sum_cod = sum_cod + cod;
  }
  if (set_d != set_cod) return false;

  try {
    return (n * sum_d).exact_div(sum_cod) == n;
  } catch (const std::domain_error&) {
    return false;
  }
}

struct Geo2NumericResult {
  unsigned trials = 0;
  unsigned structured_passes = 0;  // must equal trials
  unsigned control_failures = 0;   // unstructured lists violating the identity
  bool control_applicable = false; // always true for divisor sets of size >= 3

  // For two-element lists G^2 = H*A holds for every pair, so there is no
  // control to fail; the structured half still has to pass.
  bool ok() const {
    return structured_passes == trials &&
           (!control_applicable || control_failures > 0);
  }
};

namespace detail {

// exact check of G^2 == H*A via t-th powers: (prod xs)^2 == (H*A)^t
inline bool geo2_holds(const std::vector<Rational>& xs) {
  Rational prod = 1;
  for (const auto& x : xs) prod *= x;
  const Rational ha = harmonic_mean(xs) * arithmetic_mean(xs);
  return prod * prod == rpow(ha, static_cast<unsigned>(xs.size()));
}

// pairwise-distinct positive rationals with numerator/denominator <= 100
inline std::vector<Rational> random_distinct_rationals(std::mt19937_64& rng,
                                                       std::size_t count) {
  std::uniform_int_distribution<int> small(1, 100);
  std::set<Rational> seen;
  while (seen.size() < count) seen.insert(Rational(small(rng), small(rng)));
  return {seen.begin(), seen.end()};
}

}  // namespace detail

// Random-point counterpart of verify_geo2_formal. Each trial substitutes
// distinct positive rationals for the pattern variables and checks the
// squared identity exactly on the resulting structured list; the control
// draws an unstructured list of the same length, which is expected to
// break the identity at least once per batch.
inline Geo2NumericResult verify_geo2_numeric(const ExponentPattern& pattern,
                                             unsigned trials,
                                             std::uint64_t seed) {
  detail::validate_pattern(pattern);
  if (trials < 1)
    throw std::invalid_argument("verify_geo2_numeric: trials must be >= 1");
  const auto ds = divisor_monomials(pattern);
  const std::size_t t = ds.size();

  Geo2NumericResult result;
  result.trials = trials;
  result.control_applicable = t >= 3;

  std::mt19937_64 rng(seed);
  for (unsigned trial = 0; trial < trials; ++trial) {
    const auto point =
        detail::random_distinct_rationals(rng, pattern.variable_count());
    std::vector<Rational> structured;
    structured.reserve(t);
    for (const auto& d : ds) structured.push_back(d.evaluate(point));
    if (detail::geo2_holds(structured)) ++result.structured_passes;

    if (result.control_applicable) {
      const auto control = detail::random_distinct_rationals(rng, t);
      if (!detail::geo2_holds(control)) ++result.control_failures;
    }
  }
  return result;
}

}  // namespace biharmonic
