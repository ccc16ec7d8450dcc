#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "biharmonic/numeric.hpp"

namespace biharmonic {

// Multivariate polynomial with exact integer coefficients, stored sparsely
// as exponent-vector -> coefficient. Zero coefficients are never kept, and
// the map's lexicographic term order makes equality structural.
class SparsePoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit SparsePoly(std::vector<std::string> variables)
      : vars_(std::move(variables)) {}

  static SparsePoly constant(std::vector<std::string> variables, Integer c) {
    SparsePoly p(std::move(variables));
    if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = std::move(c);
    return p;
  }

  static SparsePoly monomial(std::vector<std::string> variables,
                             Exponents exps, Integer coeff = 1) {
    SparsePoly p(std::move(variables));
    if (exps.size() != p.vars_.size())
      throw std::invalid_argument("SparsePoly: exponent vector length mismatch");
    if (coeff != 0) p.terms_[std::move(exps)] = std::move(coeff);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Integer>& terms() const { return terms_; }

  bool operator==(const SparsePoly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
  }

  SparsePoly operator+(const SparsePoly& rhs) const {
    check_vars(rhs);
    SparsePoly out(vars_);
    out.terms_ = terms_;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
  }

  SparsePoly operator-(const SparsePoly& rhs) const {
    check_vars(rhs);
    SparsePoly out(vars_);
    out.terms_ = terms_;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
  }

  SparsePoly operator*(const SparsePoly& rhs) const {
    check_vars(rhs);
    SparsePoly out(vars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : rhs.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  SparsePoly operator*(const Integer& c) const {
    SparsePoly out(vars_);
    if (c != 0)
      for (const auto& [e, t] : terms_) out.terms_[e] = t * c;
    return out;
  }

  // Exact quotient this / divisor; throws std::domain_error when the
  // division is not exact. Repeatedly peels the lex-leading term, which
  // terminates precisely when the quotient exists over the integers.
  SparsePoly exact_div(const SparsePoly& divisor) const {
    check_vars(divisor);
    if (divisor.is_zero())
      throw std::domain_error("SparsePoly: division by zero polynomial");
    SparsePoly quotient(vars_);
    SparsePoly rem = *this;
    const auto& [de, dc] = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
      const auto& [re, rc] = *rem.terms_.rbegin();
      Exponents qe(re.size());
      for (std::size_t i = 0; i < re.size(); ++i) {
        if (re[i] < de[i])
          throw std::domain_error("SparsePoly: not exactly divisible");
        qe[i] = re[i] - de[i];
      }
      if (rc % dc != 0)
        throw std::domain_error("SparsePoly: not exactly divisible");
      SparsePoly term = monomial(vars_, qe, rc / dc);
      quotient.add_term(qe, rc / dc);
      rem = rem - term * divisor;
    }
    return quotient;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
      throw std::invalid_argument("SparsePoly: evaluation point length mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < e.size(); ++i) term *= rpow(point[i], e[i]);
      total += term;
    }
    return total;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest term first reads naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      const Integer mag = boost::multiprecision::abs(c);
      bool has_var = false;
      for (unsigned x : e) has_var |= x > 0;
      if (mag != 1 || !has_var) os << mag.str();
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << vars_[i];
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  void check_vars(const SparsePoly& rhs) const {
    if (vars_ != rhs.vars_)
      throw std::invalid_argument("SparsePoly: mismatched variable lists");
  }

  void add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  std::map<Exponents, Integer> terms_;
};

}  // namespace biharmonic
