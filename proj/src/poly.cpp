#include "poly.hpp"

#include <stdexcept>

namespace rw {

namespace {

void trim_exponents(Polynomial::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

Polynomial Polynomial::constant(i64 c) { return monomial({}, c); }

Polynomial Polynomial::monomial(Exponents e, i64 c) {
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  Polynomial p;
  p.add_term(std::move(e), c);
  return p;
}

Polynomial Polynomial::variable(int index) {
  if (index < 1) throw std::invalid_argument("variable index must be >= 1");
  Exponents e(index, 0);
  e[index - 1] = 1;
  return monomial(std::move(e));
}

void Polynomial::add_term(Exponents e, i64 c) {
  if (c == 0) return;
  trim_exponents(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), checked_mul(ca, cb));
    }
  }
  return out;
}

i64 Polynomial::eval_ones() const {
  i64 s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    bool printed_coeff = false;
    if (c != 1 || e.empty()) {
      s += std::to_string(c);
      printed_coeff = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed_coeff) s += "*";
      printed_coeff = true;
      s += "x" + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

QPoly::QPoly(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(i64 c) { return QPoly(std::vector<i64>{c}); }

QPoly QPoly::q_power(int k) {
  if (k < 0) throw std::invalid_argument("negative q power");
  std::vector<i64> c(k + 1, 0);
  c[k] = 1;
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

i64 QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

i64 QPoly::eval_ones() const {
  i64 s = 0;
  for (i64 c : coeffs_) s = checked_add(s, c);
  return s;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<i64> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return QPoly(std::move(c));
}

std::string QPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0) {
      s += std::to_string(coeffs_[k]);
      continue;
    }
    if (coeffs_[k] != 1) s += std::to_string(coeffs_[k]);
    s += "q";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

QPoly q_int(int k) {
  if (k < 0) throw std::invalid_argument("q-integer of a negative number");
  return QPoly(std::vector<i64>(k, 1));
}

QPoly q_factorial(int k) {
  if (k < 0) throw std::invalid_argument("q-factorial of a negative number");
  QPoly r = QPoly::constant(1);
  for (int i = 1; i <= k; ++i) r *= q_int(i);
  return r;
}

QPoly principal_specialization(const Polynomial& f) {
  QPoly out;
  for (const auto& [e, c] : f.terms()) {
    int deg = 0;
    for (size_t i = 0; i < e.size(); ++i) deg += static_cast<int>(i) * e[i];
    std::vector<i64> mono(deg + 1, 0);
    mono[deg] = c;
    out += QPoly(std::move(mono));
  }
  return out;
}

}  // namespace rw
