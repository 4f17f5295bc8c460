#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace kashaev {

using Rational = mpq_class;

/// Exponent vector of a monomial. Entry i counts half-steps of t_i, so the
/// value k stands for t_i^(k/2).
using Exponents = std::vector<std::int32_t>;

struct Term {
  Exponents exponents;
  Rational coeff;
};

/// Multivariate Laurent polynomial in u_i = t_i^(1/2) with rational
/// coefficients.
///
/// Terms are kept sorted by ascending lexicographic exponent order with no
/// zero coefficients, so structural equality is polynomial equality. The
/// leading term is the lexicographically largest one.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static LaurentPoly constant(std::size_t num_vars, const Rational& c);
  static LaurentPoly monomial(std::size_t num_vars, Exponents exponents,
                              const Rational& c = 1);
  /// t_i (two half-steps); `half_steps` selects other powers, e.g. 1 for t_i^(1/2).
  static LaurentPoly variable(std::size_t num_vars, std::size_t i, std::int32_t half_steps = 2);
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static LaurentPoly from_terms(std::size_t num_vars, std::vector<Term> terms);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Requires a nonzero polynomial.
  const Term& leading_term() const;
  const Rational& leading_coeff() const { return leading_term().coeff; }
  /// Componentwise minimum / maximum exponent over all terms.
  Exponents min_exponents() const;
  Exponents max_exponents() const;

  /// Multiplies by the monomial with the given exponent shift.
  LaurentPoly shifted(std::span<const std::int32_t> delta) const;
  LaurentPoly scaled(const Rational& c) const;
  /// Nonnegative integer power.
  LaurentPoly pow(unsigned n) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

/// Quotient q with q * b == a. Throws NonExactDivision when b does not
/// divide a in the Laurent ring, std::domain_error when b is zero.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Like exact_div but reports failure through the return value.
bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient);

/// The involution t_i -> t_i^{-1}.
LaurentPoly phi(const LaurentPoly& a);

/// Substitutes t_j^(1/2) := exp(i * theta_j / 2).
std::complex<double> eval_complex(const LaurentPoly& a, std::span<const double> thetas);

/// Renders with variables t1, t2, ... in descending term order, e.g.
/// "t1*t2 + t1^-1*t2^-1" or "t1^(1/2) - 2*t1^(-3/2)".
std::string to_string(const LaurentPoly& a);

/// JSON list of {"exponents": [half-steps], "coeff": "p/q"} records.
nlohmann::json to_json(const LaurentPoly& a);
LaurentPoly laurent_from_json(const nlohmann::json& j, std::size_t num_vars);

}  // namespace kashaev
