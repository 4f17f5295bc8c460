#include "kashaev/rational_fn.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "kashaev/error.hpp"

namespace kashaev {

RationalFn::RationalFn(std::size_t num_vars)
    : num_(num_vars), den_(LaurentPoly::constant(num_vars, 1)) {}

RationalFn::RationalFn(LaurentPoly numerator)
    : num_(std::move(numerator)), den_(LaurentPoly::constant(num_.num_vars(), 1)) {}

RationalFn::RationalFn(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.num_vars() != den_.num_vars()) {
    throw std::invalid_argument("rational function parts have different variable counts");
  }
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RationalFn RationalFn::constant(std::size_t num_vars, const Rational& c) {
  return RationalFn(LaurentPoly::constant(num_vars, c));
}

const LaurentPoly& RationalFn::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("rational function is not a Laurent polynomial");
  return num_;
}

void RationalFn::normalize() {
  const std::size_t n = num_.num_vars();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(n, 1);
    return;
  }
  Exponents shift = den_.min_exponents();
  for (auto& e : shift) e = -e;
  den_ = den_.shifted(shift);
  num_ = num_.shifted(shift);
  const Rational lead = den_.leading_coeff();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
  if (!den_.is_constant()) {
    LaurentPoly q;
    if (try_exact_div(num_, den_, q)) {
      num_ = std::move(q);
      den_ = LaurentPoly::constant(n, 1);
    }
  }
}

RationalFn RationalFn::operator-() const {
  RationalFn out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    normalize();
    return *this;
  }
  // Keep denominators small when one divides the other; the builders only
  // ever combine products of (t_j - t_j^{-1}) factors.
  LaurentPoly q;
  if (try_exact_div(den_, rhs.den_, q)) {
    num_ += rhs.num_ * q;
  } else if (try_exact_div(rhs.den_, den_, q)) {
    num_ = num_ * q + rhs.num_;
    den_ = rhs.den_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) { return *this += -rhs; }

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  if (a.num_vars() != b.num_vars()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFn RationalFn::pow(int n) const {
  if (n < 0) return RationalFn(den_, num_).pow(-n);
  RationalFn out(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
  return out;
}

RationalFn phi(const RationalFn& a) {
  return RationalFn(phi(a.numerator()), phi(a.denominator()));
}

TorusPoint::TorusPoint(std::vector<double> thetas) : thetas_(std::move(thetas)) {
  for (double th : thetas_) {
    if (!std::isfinite(th) || th <= 0.0 || th >= 2.0 * std::numbers::pi) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "torus angle %g outside the open interval (0, 2*pi)", th);
      throw ValidationError(buf);
    }
  }
}

std::complex<double> eval_complex(const RationalFn& a, const TorusPoint& p) {
  const std::complex<double> den = eval_complex(a.denominator(), p.thetas());
  double mass = 0.0;
  for (const auto& t : a.denominator().terms()) mass += std::abs(t.coeff.get_d());
  if (std::abs(den) <= 1e-12 * mass) {
    throw DenominatorVanishes("denominator vanishes at evaluation point (|den| = " +
                                  std::to_string(std::abs(den)) + ")",
                              std::abs(den));
  }
  return eval_complex(a.numerator(), p.thetas()) / den;
}

std::string to_string(const RationalFn& a) {
  if (a.is_polynomial() && a.denominator().leading_coeff() == 1) return to_string(a.numerator());
  return "(" + to_string(a.numerator()) + ")/(" + to_string(a.denominator()) + ")";
}

nlohmann::json to_json(const RationalFn& a) {
  return {{"numerator", to_string(a.numerator())}, {"denominator", to_string(a.denominator())}};
}

}  // namespace kashaev
