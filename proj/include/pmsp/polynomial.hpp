#ifndef PMSP_POLYNOMIAL_HPP_
#define PMSP_POLYNOMIAL_HPP_

#include <string>
#include <vector>

#include "pmsp/integer.hpp"

namespace pmsp {

// Dense univariate polynomial in z with arbitrary-precision integer
// coefficients, kept in canonical form: no trailing zero coefficients, the
// zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one();
  static Polynomial z();
  // c * z^k
  static Polynomial monomial(Integer c, int k);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  // Coefficient of z^k, zero beyond the degree.
  const Integer& coeff(int k) const;
  // Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Integer evaluate(const Integer& x) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  bool operator==(const Polynomial& rhs) const = default;

  // z^k * p.
  Polynomial shifted(int k) const;
  // p(c * z): coefficient of z^i gets multiplied by c^i.
  Polynomial substituted_scaled(const Integer& c) const;
  // Exact division by an integer constant; throws ConsistencyError if any
  // coefficient is not divisible.
  Polynomial divided_exact(const Integer& d) const;

  // "1 + 4z + z^2"; the zero polynomial prints as "0".
  std::string to_text() const;
  // Ascending list of decimal coefficient strings, e.g. ["1","4","1"].
  std::vector<std::string> to_decimal_strings() const;
  static Polynomial from_decimal_strings(const std::vector<std::string>& v);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace pmsp

#endif  // PMSP_POLYNOMIAL_HPP_
