#include "kashaev/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kashaev/error.hpp"

namespace kashaev {

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("Laurent polynomial variable-count mismatch: " +
                                std::to_string(a.num_vars()) + " vs " +
                                std::to_string(b.num_vars()));
  }
}

// Merges two sorted term lists, computing a + sign * b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->exponents < ib->exponents)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->exponents < ia->exponents) {
      out.push_back(*ib++);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign < 0 ? Rational(ia->coeff - ib->coeff) : Rational(ia->coeff + ib->coeff);
      if (c != 0) out.push_back(Term{ia->exponents, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t num_vars, const Rational& c) {
  return monomial(num_vars, Exponents(num_vars, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t num_vars, Exponents exponents, const Rational& c) {
  if (exponents.size() != num_vars) {
    throw std::invalid_argument("monomial exponent vector has wrong length");
  }
  LaurentPoly p(num_vars);
  Rational coeff = c;
  coeff.canonicalize();
  if (coeff != 0) p.terms_.push_back(Term{std::move(exponents), std::move(coeff)});
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t num_vars, std::size_t i, std::int32_t half_steps) {
  if (i >= num_vars) throw std::out_of_range("variable index out of range");
  Exponents e(num_vars, 0);
  e[i] = half_steps;
  return monomial(num_vars, std::move(e));
}

LaurentPoly LaurentPoly::from_terms(std::size_t num_vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponents.size() != num_vars) {
      throw std::invalid_argument("term exponent vector has wrong length");
    }
  }
  for (auto& t : terms) t.coeff.canonicalize();
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exponents < y.exponents; });
  LaurentPoly p(num_vars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  return std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                     [](std::int32_t e) { return e == 0; });
}

const Term& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.back();
}

Exponents LaurentPoly::min_exponents() const {
  Exponents m(num_vars_, 0);
  if (terms_.empty()) return m;
  m = terms_.front().exponents;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) m[i] = std::min(m[i], t.exponents[i]);
  }
  return m;
}

Exponents LaurentPoly::max_exponents() const {
  Exponents m(num_vars_, 0);
  if (terms_.empty()) return m;
  m = terms_.front().exponents;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) m[i] = std::max(m[i], t.exponents[i]);
  }
  return m;
}

LaurentPoly LaurentPoly::shifted(std::span<const std::int32_t> delta) const {
  if (delta.size() != num_vars_) throw std::invalid_argument("shift has wrong length");
  LaurentPoly out = *this;
  for (auto& t : out.terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) t.exponents[i] += delta[i];
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return LaurentPoly(num_vars_);
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(num_vars_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_vars(*this, rhs);
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  require_same_vars(*this, rhs);
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.num_vars());
  if (b.is_monomial()) {
    LaurentPoly out = a.shifted(b.terms_[0].exponents);
    return out.scaled(b.terms_[0].coeff);
  }
  if (a.is_monomial()) return b * a;
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      products.push_back(Term{add_exponents(x.exponents, y.exponents), x.coeff * y.coeff});
    }
  }
  return LaurentPoly::from_terms(a.num_vars(), std::move(products));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient) {
  require_same_vars(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const std::size_t n = a.num_vars();
  if (a.is_zero()) {
    quotient = LaurentPoly(n);
    return true;
  }
  if (b.is_monomial()) {
    Exponents neg = b.leading_term().exponents;
    for (auto& e : neg) e = -e;
    quotient = a.shifted(neg).scaled(1 / b.leading_coeff());
    return true;
  }

  // Strip monomial content so both sides are ordinary polynomials; then
  // lexicographic long division terminates and any remainder is final.
  Exponents a_min = a.min_exponents();
  Exponents b_min = b.min_exponents();
  Exponents neg_a(n), neg_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_a[i] = -a_min[i];
    neg_b[i] = -b_min[i];
  }
  LaurentPoly rem = a.shifted(neg_a);
  const LaurentPoly divisor = b.shifted(neg_b);
  const Term& lead_b = divisor.leading_term();
  const Rational inv_lead = 1 / lead_b.coeff;

  std::vector<Term> q_terms;
  while (!rem.is_zero()) {
    const Term& lead_r = rem.leading_term();
    Exponents delta(n);
    for (std::size_t i = 0; i < n; ++i) {
      delta[i] = lead_r.exponents[i] - lead_b.exponents[i];
      if (delta[i] < 0) return false;
    }
    Rational c = lead_r.coeff * inv_lead;
    rem -= divisor.shifted(delta).scaled(c);
    q_terms.push_back(Term{std::move(delta), std::move(c)});
  }

  LaurentPoly q = LaurentPoly::from_terms(n, std::move(q_terms));
  Exponents back(n);
  for (std::size_t i = 0; i < n; ++i) back[i] = a_min[i] - b_min[i];
  quotient = q.shifted(back);
  return true;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!try_exact_div(a, b, q)) {
    throw NonExactDivision("non-exact division: (" + to_string(a) + ") / (" + to_string(b) + ")");
  }
  return q;
}

LaurentPoly phi(const LaurentPoly& a) {
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) {
    for (auto& e : t.exponents) e = -e;
  }
  return LaurentPoly::from_terms(a.num_vars(), std::move(terms));
}

std::complex<double> eval_complex(const LaurentPoly& a, std::span<const double> thetas) {
  if (thetas.size() != a.num_vars()) {
    throw std::invalid_argument("evaluation point has wrong dimension");
  }
  std::complex<double> sum = 0.0;
  for (const auto& t : a.terms()) {
    double phase = 0.0;
    for (std::size_t i = 0; i < thetas.size(); ++i) phase += t.exponents[i] * thetas[i] * 0.5;
    sum += t.coeff.get_d() * std::polar(1.0, phase);
  }
  return sum;
}

namespace {

std::string render_power(std::size_t var, std::int32_t half_steps) {
  std::string name = "t" + std::to_string(var + 1);
  if (half_steps % 2 == 0) {
    const std::int32_t k = half_steps / 2;
    return k == 1 ? name : name + "^" + std::to_string(k);
  }
  return name + "^(" + std::to_string(half_steps) + "/2)";
}

}  // namespace

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    Rational c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < it->exponents.size(); ++i) {
      if (it->exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += render_power(i, it->exponents[i]);
    }
    if (mono.empty()) {
      out << c.get_str();
    } else if (c == 1) {
      out << mono;
    } else {
      out << c.get_str() << "*" << mono;
    }
  }
  return out.str();
}

nlohmann::json to_json(const LaurentPoly& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    terms.push_back({{"exponents", it->exponents}, {"coeff", it->coeff.get_str()}});
  }
  return terms;
}

LaurentPoly laurent_from_json(const nlohmann::json& j, std::size_t num_vars) {
  std::vector<Term> terms;
  for (const auto& rec : j) {
    Rational c(rec.at("coeff").get<std::string>());
    c.canonicalize();
    terms.push_back(Term{rec.at("exponents").get<Exponents>(), c});
  }
  return LaurentPoly::from_terms(num_vars, std::move(terms));
}

}  // namespace kashaev
