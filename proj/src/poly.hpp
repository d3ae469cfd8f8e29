#pragma once

#include <map>
#include <string>
#include <vector>

#include "checked.hpp"

namespace rw {

// Sparse multivariate polynomial in x_1, x_2, ... with exact integer
// coefficients. Exponent vectors are trimmed of trailing zeros; no zero
// coefficient is ever stored.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  static Polynomial constant(i64 c);
  static Polynomial monomial(Exponents e, i64 c = 1);
  static Polynomial variable(int index);  // x_index, 1-based

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, i64>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial&) const = default;

  i64 eval_ones() const;  // substitute x_i = 1 for every i
  std::string str() const;

 private:
  std::map<Exponents, i64> terms_;
  void add_term(Exponents e, i64 c);
};

// Dense univariate polynomial in q with exact integer coefficients and
// trailing zeros trimmed; the zero polynomial has an empty coefficient vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<i64> coeffs);
  static QPoly constant(i64 c);
  static QPoly q_power(int k);  // q^k

  const std::vector<i64>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  i64 coeff(int k) const;
  i64 eval_ones() const;

  QPoly& operator+=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  bool operator==(const QPoly&) const = default;

  std::string str() const;  // "1 + 2q + q^3"

 private:
  std::vector<i64> coeffs_;
  void trim();
};

QPoly q_int(int k);        // [k] = 1 + q + ... + q^{k-1}; [0] = 0; errors for k < 0
QPoly q_factorial(int k);  // [k][k-1]...[1]; [0]! = 1

// Substitute x_i -> q^{i-1}.
QPoly principal_specialization(const Polynomial& f);

}  // namespace rw
