#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "kashaev/laurent.hpp"

namespace kashaev {

/// Quotient of two Laurent polynomials.
///
/// Normal form: the denominator has minimum exponent 0 in every variable and
/// leading coefficient 1, and whenever the denominator divides the numerator
/// exactly the quotient is stored over 1. No polynomial GCD is taken, so two
/// equal functions can have different representations; compare with ==,
/// which cross-multiplies.
class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(std::size_t num_vars);
  RationalFn(LaurentPoly numerator);  // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly numerator, LaurentPoly denominator);

  static RationalFn constant(std::size_t num_vars, const Rational& c);

  std::size_t num_vars() const { return num_.num_vars(); }
  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// The numerator when the denominator is 1; throws otherwise.
  const LaurentPoly& as_polynomial() const;

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& rhs);
  RationalFn& operator-=(const RationalFn& rhs);
  RationalFn& operator*=(const RationalFn& rhs);
  RationalFn& operator/=(const RationalFn& rhs);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b);

  RationalFn pow(int n) const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

RationalFn phi(const RationalFn& a);

/// A point of the punctured torus (S^1 \ {1})^mu, as angles in (0, 2*pi).
class TorusPoint {
 public:
  TorusPoint() = default;
  /// Throws ValidationError unless every angle lies strictly inside (0, 2*pi).
  explicit TorusPoint(std::vector<double> thetas);

  std::size_t dim() const { return thetas_.size(); }
  const std::vector<double>& thetas() const { return thetas_; }
  double operator[](std::size_t i) const { return thetas_[i]; }

 private:
  std::vector<double> thetas_;
};

/// Substitutes t_j^(1/2) := exp(i * theta_j / 2). Throws DenominatorVanishes
/// when the denominator's modulus is below 1e-12 times its coefficient mass.
std::complex<double> eval_complex(const RationalFn& a, const TorusPoint& p);

std::string to_string(const RationalFn& a);
nlohmann::json to_json(const RationalFn& a);

}  // namespace kashaev
